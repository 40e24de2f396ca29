#include "legapprox/polybasis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "legapprox/error.hpp"

namespace legapprox {

namespace {

void require_degree(int n, const char* who) {
  if (n < 0) throw DomainError(std::string(who) + ": degree must be >= 0");
}

void require_unit_interval(double x, const char* who) {
  if (!(std::abs(x) <= 1.0)) {
    throw DomainError(std::string(who) + ": |x| must be <= 1, got " +
                      std::to_string(x));
  }
}

// Computes P_n and P_{n+1} together; extended precision keeps the
// Christoffel-Darboux numerator accurate well off the diagonal.
template <typename T>
std::pair<T, T> legendre_pair(int n, T x) {
  T prev = 1;
  T cur = x;
  for (int k = 1; k <= n; ++k) {
    const T next = (T(2 * k + 1) * x * cur - T(k) * prev) / T(k + 1);
    prev = cur;
    cur = next;
  }
  return {prev, cur};
}

}  // namespace

BasisKind BasisKind::jacobi(double alpha, double beta) {
  if (!(alpha > -1.0) || !(beta > -1.0)) {
    throw DomainError("BasisKind::jacobi: alpha and beta must exceed -1");
  }
  return {BasisTag::Jacobi, alpha, beta};
}

const char* basis_name(const BasisKind& b) {
  switch (b.tag) {
    case BasisTag::Legendre: return "legendre";
    case BasisTag::Chebyshev1: return "chebyshev";
    case BasisTag::Jacobi: return "jacobi";
  }
  return "unknown";
}

double legendre_eval(int n, double x) {
  require_degree(n, "legendre_eval");
  require_unit_interval(x, "legendre_eval");
  if (n == 0) return 1.0;
  return legendre_pair<double>(n - 1, x).second;
}

std::vector<double> legendre_batch(int n, double x) {
  require_degree(n, "legendre_batch");
  require_unit_interval(x, "legendre_batch");
  std::vector<double> p(static_cast<std::size_t>(n) + 1);
  p[0] = 1.0;
  if (n >= 1) p[1] = x;
  for (int k = 1; k < n; ++k) {
    p[k + 1] = ((2 * k + 1) * x * p[k] - k * p[k - 1]) / (k + 1);
  }
  return p;
}

double chebyshev_eval(int n, double x) {
  require_degree(n, "chebyshev_eval");
  require_unit_interval(x, "chebyshev_eval");
  if (n == 0) return 1.0;
  double prev = 1.0;
  double cur = x;
  for (int k = 1; k < n; ++k) {
    const double next = 2.0 * x * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

std::pair<double, double> jacobi_eval_with_derivative(double alpha,
                                                      double beta, int n,
                                                      double x) {
  require_degree(n, "jacobi_eval");
  const double ab = alpha + beta;
  double prev = 1.0;
  double cur = 0.5 * (alpha - beta) + 0.5 * (ab + 2.0) * x;
  // Derivatives follow by differentiating the same recurrence.
  double dprev = 0.0;
  double dcur = 0.5 * (ab + 2.0);
  if (n == 0) return {1.0, 0.0};
  for (int k = 2; k <= n; ++k) {
    const double s = 2.0 * k + ab;
    const double denom = 2.0 * k * (k + ab) * (s - 2.0);
    if (denom == 0.0) {
      throw DomainError("jacobi_eval: degenerate recurrence at degree " +
                        std::to_string(k) + " for alpha+beta = " +
                        std::to_string(ab));
    }
    const double c1 = (s - 1.0) * (s * (s - 2.0) * x + alpha * alpha - beta * beta);
    const double c1x = (s - 1.0) * s * (s - 2.0);
    const double c2 = 2.0 * (k + alpha - 1.0) * (k + beta - 1.0) * s;
    const double next = (c1 * cur - c2 * prev) / denom;
    const double dnext = (c1 * dcur + c1x * cur - c2 * dprev) / denom;
    prev = cur;
    cur = next;
    dprev = dcur;
    dcur = dnext;
  }
  return {cur, dcur};
}

double jacobi_eval(double alpha, double beta, int n, double x) {
  return jacobi_eval_with_derivative(alpha, beta, n, x).first;
}

double bernstein_envelope(int n, double x) {
  require_degree(n, "bernstein_envelope");
  require_unit_interval(x, "bernstein_envelope");
  const double cap = std::sqrt(std::numbers::pi / 2.0) * std::sqrt(n + 0.5);
  const double one_minus = 1.0 - x * x;
  if (one_minus <= 0.0) return cap;
  return std::min(std::pow(one_minus, -0.25), cap);
}

double dirichlet_kernel_sum(int n, double x, double y) {
  require_degree(n, "dirichlet_kernel_sum");
  require_unit_interval(x, "dirichlet_kernel_sum");
  require_unit_interval(y, "dirichlet_kernel_sum");
  long double px_prev = 1, px = x, py_prev = 1, py = y;
  long double sum = 0.5L;
  for (int k = 1; k <= n; ++k) {
    sum += (k + 0.5L) * px * py;
    const long double nx = ((2 * k + 1) * x * px - k * px_prev) / (k + 1);
    const long double ny = ((2 * k + 1) * y * py - k * py_prev) / (k + 1);
    px_prev = px;
    px = nx;
    py_prev = py;
    py = ny;
  }
  return static_cast<double>(sum);
}

double dirichlet_kernel_cd(int n, double x, double y) {
  require_degree(n, "dirichlet_kernel_cd");
  require_unit_interval(x, "dirichlet_kernel_cd");
  require_unit_interval(y, "dirichlet_kernel_cd");
  if (std::abs(x - y) < dirichlet_diagonal_threshold(x)) {
    return dirichlet_kernel_sum(n, x, y);
  }
  const auto [pnx, pn1x] = legendre_pair<long double>(n, x);
  const auto [pny, pn1y] = legendre_pair<long double>(n, y);
  const long double num = pn1x * pny - pn1y * pnx;
  return static_cast<double>((n + 1) / 2.0L * num /
                             (static_cast<long double>(x) - y));
}

}  // namespace legapprox
