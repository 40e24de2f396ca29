#include "legapprox/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "legapprox/error.hpp"
#include "legapprox/polybasis.hpp"
#include "legapprox/quadrature.hpp"

namespace legapprox {

namespace {

constexpr int kMaxLebesgueDegree = 500;

void require_rho(double rho, const char* who) {
  if (!(rho > 1.0)) {
    throw DomainError(std::string(who) + ": rho must exceed 1");
  }
}

}  // namespace

BoundReport& BoundReport::compare_with(double measured_error) {
  measured = measured_error;
  margin = value - measured_error;
  return *this;
}

bool BoundReport::satisfied(double tolerance) const {
  return !margin || *margin >= -tolerance;
}

double cheb_analytic_bound(double M, double rho, int n) {
  require_rho(rho, "cheb_analytic_bound");
  if (n < 0) throw DomainError("cheb_analytic_bound: n must be >= 0");
  return 2.0 * M * std::exp(-n * std::log(rho)) / (rho - 1.0);
}

double cheb_bv_bound(double V, int m, int n) {
  if (m < 1) throw DomainError("cheb_bv_bound: m must be >= 1");
  if (n <= m) throw DomainError("cheb_bv_bound: requires n >= m + 1");
  return 2.0 * V / (std::numbers::pi * m * std::pow(double(n - m), m));
}

double leg_D(const BernsteinEllipse& e, double M) {
  require_rho(e.rho, "leg_D");
  return 2.0 * ellipse_circumference(e) * M /
         (std::numbers::pi * std::sqrt(e.rho * e.rho - 1.0));
}

double leg_coeff_bound(const BernsteinEllipse& e, double M, int k) {
  if (k < 0) throw DomainError("leg_coeff_bound: k must be >= 0");
  const double d = leg_D(e, M);
  if (k == 0) return 0.5 * d;
  return d * std::sqrt(double(k)) * std::exp(-k * std::log(e.rho));
}

double leg_projection_bound(const BernsteinEllipse& e, double M, int n) {
  if (n < 0) throw DomainError("leg_projection_bound: n must be >= 0");
  const double d = leg_D(e, M);
  const double r1 = e.rho - 1.0;
  const double s = std::sqrt(n + 1.0);
  return d * std::exp(-n * std::log(e.rho)) * (s / r1 + 1.0 / (s * r1 * r1));
}

std::vector<double> jacobi_1_0_roots(int n) {
  constexpr double alpha = 1.0;
  constexpr double beta = 0.0;
  std::vector<double> roots;
  roots.reserve(n);
  for (int k = 1; k <= n; ++k) {
    double x = std::cos((k - 0.25 + 0.5 * alpha) * std::numbers::pi /
                        (n + 0.5 * (alpha + beta + 1.0)));
    bool converged = false;
    for (int step = 0; step < 100; ++step) {
      const auto [p, dp] = jacobi_eval_with_derivative(alpha, beta, n, x);
      double deflate = 0.0;
      for (double r : roots) deflate += 1.0 / (x - r);
      const double dx = p / (dp - p * deflate);
      x -= dx;
      if (std::abs(dx) <= 1e-15 * std::max(1.0, std::abs(x))) {
        converged = true;
        break;
      }
    }
    if (!converged || !(std::abs(x) < 1.0) ||
        (!roots.empty() && !(x < roots.back()))) {
      throw ConvergenceError("lebesgue_constant: failed to isolate root " +
                             std::to_string(k) + " of P_" + std::to_string(n) +
                             "^(1,0)");
    }
    roots.push_back(x);
  }
  return roots;
}

double lebesgue_constant(int n) {
  if (n < 0 || n > kMaxLebesgueDegree) {
    throw DomainError("lebesgue_constant: n must lie in [0, 500]");
  }
  if (n == 0) return 1.0;
  const auto roots = jacobi_1_0_roots(n);
  std::vector<Panel> panels;
  const int order = n / 2 + 1;  // exact for degree n on every piece
  double right = 1.0;
  for (double r : roots) {
    panels.push_back({r, right, order});
    right = r;
  }
  panels.push_back({-1.0, right, order});
  double integral = 0.0;
  for_each_node(panels, [&](double x, double w) {
    integral += w * std::abs(jacobi_eval(1.0, 0.0, n, x));
  });
  return 0.5 * (n + 1.0) * integral;
}

double chebyshev_vs_best_factor(int n) {
  if (n < 1) throw DomainError("chebyshev_vs_best_factor: n must be >= 1");
  return 4.0 / (std::numbers::pi * std::numbers::pi) * std::log(double(n)) +
         4.0;
}

double tail_sum_bound(const SeriesCoeffs& coeffs, int n) {
  if (n < -1 || static_cast<int>(coeffs.coeffs.size()) <= n + 1) {
    throw DomainError("tail_sum_bound: need more than n+1 coefficients");
  }
  double s = 0.0;
  for (std::size_t k = static_cast<std::size_t>(n + 1); k < coeffs.coeffs.size();
       ++k) {
    s += std::abs(coeffs.coeffs[k]);
  }
  return s;
}

double projection_vs_best_bound(double best_err, int n) {
  if (!(best_err >= 0.0)) {
    throw DomainError("projection_vs_best_bound: best_err must be >= 0");
  }
  return (1.0 + lebesgue_constant(n)) * best_err;
}

double ellipse_max_modulus(const FunctionSpec& f, const BernsteinEllipse& e,
                           int samples) {
  if (!f.has_complex()) {
    throw DomainError("ellipse_max_modulus: '" + f.label +
                      "' has no complex evaluator");
  }
  double m = 0.0;
  for (int i = 0; i < samples; ++i) {
    const double theta = 2.0 * std::numbers::pi * i / samples;
    m = std::max(m, std::abs(f.eval_complex(e.point(theta))));
  }
  return m;
}

double total_variation(const std::function<double(double)>& g,
                       std::span<const double> breakpoints, int samples) {
  std::vector<double> xs;
  xs.reserve(static_cast<std::size_t>(samples) + 4 * breakpoints.size() + 1);
  for (int i = 0; i <= samples; ++i) xs.push_back(-1.0 + 2.0 * i / samples);
  for (double b : breakpoints) {
    // Sample both one-sided limits of a jump.
    const double h = 1e-12;
    xs.push_back(b - h);
    xs.push_back(b + h);
  }
  std::sort(xs.begin(), xs.end());
  double tv = 0.0;
  double prev = g(xs.front());
  for (std::size_t i = 1; i < xs.size(); ++i) {
    const double cur = g(xs[i]);
    tv += std::abs(cur - prev);
    prev = cur;
  }
  return tv;
}

}  // namespace legapprox
