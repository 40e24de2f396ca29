#include "legapprox/peano.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "legapprox/error.hpp"
#include "legapprox/harness.hpp"
#include "legapprox/polybasis.hpp"
#include "legapprox/quadrature.hpp"

namespace legapprox {

namespace {

constexpr int kMaxPeanoDegree = 400;

std::vector<double> sample_points() {
  return {-0.9, -0.35, 0.1, 0.55, 0.95};
}

}  // namespace

double truncated_power(double x, double t, int r) {
  const double d = x - t;
  if (d <= 0.0) return 0.0;
  return r == 0 ? 1.0 : std::pow(d, r);
}

void PeanoKernelSpec::validate() const {
  if (m < 1) throw DomainError("peano: m must be >= 1");
  if (n < m - 1) throw DomainError("peano: n must be >= m - 1");
  if (n > kMaxPeanoDegree) throw DomainError("peano: n must be <= 400");
  if (!(std::abs(x) <= 1.0)) throw DomainError("peano: x must lie in [-1, 1]");
}

std::vector<double> truncated_power_coeffs(double t, int r, int n) {
  std::vector<double> a(static_cast<std::size_t>(n) + 1, 0.0);
  if (t >= 1.0) return a;
  t = std::max(t, -1.0);
  const Panel panel{t, 1.0, (n + r) / 2 + 1};
  for_each_node(std::span<const Panel>(&panel, 1), [&](double x, double w) {
    const double g = w * (r == 0 ? 1.0 : std::pow(x - t, r));
    const auto p = legendre_batch(n, x);
    for (int k = 0; k <= n; ++k) a[k] += g * p[k];
  });
  for (int k = 0; k <= n; ++k) a[k] *= k + 0.5;
  return a;
}

PeanoKernel::PeanoKernel(const PeanoKernelSpec& spec) : spec_(spec) {
  spec_.validate();
  px_ = legendre_batch(spec_.n, spec_.x);
  for (int j = 2; j < spec_.m; ++j) inv_factorial_ /= j;
}

double PeanoKernel::operator()(double t) const {
  const int r = spec_.m - 1;
  const auto a = truncated_power_coeffs(t, r, spec_.n);
  double proj = 0.0;
  for (int k = spec_.n; k >= 0; --k) proj += a[k] * px_[k];
  return (truncated_power(spec_.x, t, r) - proj) * inv_factorial_;
}

double peano_kernel_eval(const PeanoKernelSpec& s, double t) {
  if (!(std::abs(t) <= 1.0)) throw DomainError("peano: t must lie in [-1, 1]");
  return PeanoKernel(s)(t);
}

double peano_integral(const PeanoKernelSpec& s,
                      const std::function<double(double)>& g, int order) {
  const PeanoKernel k(s);
  std::vector<Panel> panels;
  if (s.x > -1.0) panels.push_back({-1.0, s.x, order});
  if (s.x < 1.0) panels.push_back({s.x, 1.0, order});
  double sum = 0.0;
  for_each_node(panels, [&](double t, double w) { sum += w * g(t) * k(t); });
  return sum;
}

double peano_kernel_sup(int m, int n, int grid_points) {
  const auto pts = chebyshev_lobatto_points(grid_points - 1);
  double sup = 0.0;
  for (double x : pts) {
    const PeanoKernel k({m, n, x});
    sup = std::max(sup, std::abs(k(x)));
    for (double t : pts) sup = std::max(sup, std::abs(k(t)));
  }
  return sup;
}

PeanoReport peano_properties_report(int m, int n) {
  if (m < 2 || m > 4) throw DomainError("peano_properties_report: m in [2, 4]");
  if (n < m || n > 120) {
    throw DomainError("peano_properties_report: n in [m, 120]");
  }
  PeanoReport rep;
  rep.m = m;
  rep.n = n;
  rep.claimed_slope = -(m - 1);
  const auto xs = sample_points();

  for (double x : xs) {
    const PeanoKernel k({m, n, x});
    rep.boundary_residual =
        std::max({rep.boundary_residual, std::abs(k(-1.0)), std::abs(k(1.0))});

    // The kernel is piecewise polynomial of degree n + m in t; with
    // q of degree <= n - m, n + 1 points per side integrate exactly.
    for (int j = 0; j <= n - m; ++j) {
      const double v = peano_integral(
          {m, n, x}, [j](double t) { return std::pow(t, j); }, n + 1);
      rep.orthogonality_residual =
          std::max(rep.orthogonality_residual, std::abs(v));
    }

    const PeanoKernel km1({m - 1, n, x});
    const double h = kPeanoStep;
    constexpr int kSamples = 400;
    for (int i = 0; i <= kSamples; ++i) {
      const double t = -1.0 + 2.0 * h + (2.0 - 4.0 * h) * i / kSamples;
      if (std::abs(t - x) < kPeanoExclusion) continue;
      const double d = (k(t - 2 * h) - 8.0 * k(t - h) + 8.0 * k(t + h) -
                        k(t + 2 * h)) /
                       (12.0 * h);
      rep.derivative_residual =
          std::max(rep.derivative_residual, std::abs(d + km1(t)));
    }
  }

  for (int nn = 16; nn <= 96; nn += 8) {
    if (nn < m - 1) continue;
    rep.sweep_degrees.push_back(nn);
    rep.sweep_sup.push_back(peano_kernel_sup(m, nn));
  }
  const auto fit = rate_fit(rep.sweep_degrees, rep.sweep_sup,
                            {double(rep.sweep_degrees.front()),
                             double(rep.sweep_degrees.back())});
  rep.decay_slope = fit.slope;
  rep.decay_residual = fit.residual;
  return rep;
}

}  // namespace legapprox
