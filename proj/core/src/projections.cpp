#include "legapprox/projections.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <string>

#include "legapprox/error.hpp"
#include "legapprox/quadrature.hpp"

namespace legapprox {

namespace {

constexpr int kMaxStabilisationDoublings = 4;

void require_projection_degree(int n, const char* who) {
  if (n < 0 || n > kMaxProjectionDegree) {
    throw DomainError(std::string(who) + ": degree must lie in [0, " +
                      std::to_string(kMaxProjectionDegree) + "]");
  }
}

struct Moments {
  std::vector<double> values;
  double fscale = 1.0;
};

bool stabilised(const Moments& prev, const Moments& cur) {
  const double fscale = std::max({1.0, prev.fscale, cur.fscale});
  for (std::size_t k = 0; k < cur.values.size(); ++k) {
    const double diff = std::abs(cur.values[k] - prev.values[k]);
    const double tol = std::max(1e-12 * std::abs(cur.values[k]),
                                1e-14 * (k + 0.5) * fscale);
    if (!(diff <= tol)) return false;
  }
  return true;
}

// Runs compute(scale) with doubling order scale until consecutive results
// agree; returns the finest result and whether agreement was reached.
template <typename Compute>
std::pair<Moments, bool> stabilise(Compute&& compute) {
  Moments prev = compute(1.0);
  for (int d = 1; d <= kMaxStabilisationDoublings; ++d) {
    Moments cur = compute(std::ldexp(1.0, d));
    if (stabilised(prev, cur)) return {std::move(cur), true};
    prev = std::move(cur);
  }
  return {std::move(prev), false};
}

Moments legendre_moments(const FunctionSpec& f, int n, double scale) {
  PanelLayout layout;
  layout.breakpoints = f.breakpoints;
  layout.singular_lo = f.singular_lower;
  layout.singular_hi = f.singular_upper;
  layout.degree_hint = n;
  layout.order_scale = scale;
  layout.metric = PhaseMetric::Arccos;
  const auto panels = build_panels(layout);

  Moments m;
  m.values.assign(static_cast<std::size_t>(n) + 1, 0.0);
  for_each_node(panels, [&](double x, double w) {
    const double fx = f(x);
    m.fscale = std::max(m.fscale, std::abs(fx));
    const double wf = w * fx;
    double prev = 1.0;
    double cur = x;
    m.values[0] += wf;
    for (int k = 1; k <= n; ++k) {
      m.values[k] += wf * cur;
      const double next = ((2 * k + 1) * x * cur - k * prev) / (k + 1);
      prev = cur;
      cur = next;
    }
  });
  for (int k = 0; k <= n; ++k) m.values[k] *= (k + 0.5);
  return m;
}

Moments chebyshev_moments(const FunctionSpec& f, int n, double scale) {
  // theta = arccos(x) runs from 0 (x = 1) to pi (x = -1).
  PanelLayout layout;
  layout.lo = 0.0;
  layout.hi = std::numbers::pi;
  for (auto it = f.breakpoints.rbegin(); it != f.breakpoints.rend(); ++it) {
    layout.breakpoints.push_back(std::acos(*it));
  }
  layout.singular_lo = f.singular_upper;
  layout.singular_hi = f.singular_lower;
  layout.degree_hint = n;
  layout.order_scale = scale;
  layout.metric = PhaseMetric::Identity;
  const auto panels = build_panels(layout);

  Moments m;
  m.values.assign(static_cast<std::size_t>(n) + 1, 0.0);
  for_each_node(panels, [&](double theta, double w) {
    const double x = std::cos(theta);
    const double fx = f(x);
    m.fscale = std::max(m.fscale, std::abs(fx));
    const double wf = w * fx;
    // cos(k theta) by the angle-addition recurrence.
    const double c1 = x;
    const double s1 = std::sin(theta);
    double ck = 1.0;
    double sk = 0.0;
    for (int k = 0; k <= n; ++k) {
      m.values[k] += wf * ck;
      const double cn = ck * c1 - sk * s1;
      const double sn = sk * c1 + ck * s1;
      ck = cn;
      sk = sn;
    }
  });
  m.values[0] /= std::numbers::pi;
  for (int k = 1; k <= n; ++k) m.values[k] *= 2.0 / std::numbers::pi;
  return m;
}

// Interpolation at N+1 Chebyshev-Lobatto points. The transform reduces
// angles exactly, so its roundoff stays near eps * max|f| for every k, far
// below the drift of the cos(k theta) and P_k recurrences above.
struct Oversampled {
  std::vector<double> coeffs;  // c_0..c_N
  double fscale = 0.0;
};

std::optional<Oversampled> interpolate(const FunctionSpec& f, int big_n) {
  const auto x = chebyshev_lobatto_points(big_n);
  std::vector<double> samples(x.size());
  Oversampled o;
  for (std::size_t i = 0; i < x.size(); ++i) {
    samples[i] = f(x[i]);
    if (!std::isfinite(samples[i])) return std::nullopt;
    o.fscale = std::max(o.fscale, std::abs(samples[i]));
  }
  o.coeffs = chebyshev_transform(samples, big_n);
  return o;
}

// Coefficients from interpolants of degree N = 4n+64 and 2N, accepted only
// when the two agree (the aliasing of the coarser one is then negligible).
// Interior kinks and endpoint derivative singularities alias slowly and are
// left to the graded quadrature.
std::optional<Oversampled> oversampled_chebyshev(const FunctionSpec& f, int n) {
  const int big_n = 4 * n + 64;
  const auto coarse = interpolate(f, big_n);
  if (!coarse) return std::nullopt;
  auto fine = interpolate(f, 2 * big_n);
  if (!fine) return std::nullopt;
  const double floor = 1e-15 * std::max(1.0, fine->fscale);
  for (int k = 0; k <= big_n; ++k) {
    const double diff = std::abs(coarse->coeffs[k] - fine->coeffs[k]);
    if (!(diff <= std::max(1e-12 * std::abs(fine->coeffs[k]), floor))) {
      return std::nullopt;
    }
  }
  return fine;
}

// a_k = sum_{j >= k, j - k even} M_kj c_j with
//   M_kk = sqrt(pi) / (2 L(k)),  M_00 = 1,
//   M_kj = -j (k+1/2) L((j-k-2)/2) L((j+k-1)/2) / ((j+k+1)(j-k)),
// where L(z) = Gamma(z+1/2) / Gamma(z+1).
std::vector<double> chebyshev_to_legendre(const std::vector<double>& c, int n) {
  const int big_n = static_cast<int>(c.size()) - 1;
  const int half = big_n / 2 + n + 2;
  std::vector<double> lam_int(half + 1);   // L(i)
  std::vector<double> lam_half(half + 1);  // L(i + 1/2)
  lam_int[0] = std::sqrt(std::numbers::pi);
  lam_half[0] = 2.0 / std::sqrt(std::numbers::pi);
  for (int i = 0; i < half; ++i) {
    lam_int[i + 1] = lam_int[i] * (i + 0.5) / (i + 1.0);
    lam_half[i + 1] = lam_half[i] * (i + 1.0) / (i + 1.5);
  }
  std::vector<double> a(static_cast<std::size_t>(n) + 1, 0.0);
  for (int k = 0; k <= n; ++k) {
    double sum = 0.0;
    const int last = big_n - ((big_n - k) % 2);
    for (int j = last; j > k; j -= 2) {
      const double m = -j * (k + 0.5) * lam_int[(j - k - 2) / 2] *
                       lam_half[(j + k - 2) / 2] / ((j + k + 1.0) * (j - k));
      sum += m * c[j];
    }
    const double diag = k == 0 ? 1.0 : std::sqrt(std::numbers::pi) / (2.0 * lam_int[k]);
    a[k] = sum + diag * c[k];
  }
  return a;
}

}  // namespace

SeriesCoeffs legendre_coeffs(const FunctionSpec& f, int n) {
  require_projection_degree(n, "legendre_coeffs");
  if (const auto o = oversampled_chebyshev(f, n)) {
    return {BasisKind::legendre(), chebyshev_to_legendre(o->coeffs, n), true};
  }
  auto [m, ok] =
      stabilise([&](double scale) { return legendre_moments(f, n, scale); });
  return {BasisKind::legendre(), std::move(m.values), ok};
}

SeriesCoeffs chebyshev_coeffs(const FunctionSpec& f, int n) {
  require_projection_degree(n, "chebyshev_coeffs");
  if (auto o = oversampled_chebyshev(f, n)) {
    o->coeffs.resize(static_cast<std::size_t>(n) + 1);
    return {BasisKind::chebyshev(), std::move(o->coeffs), true};
  }
  auto [m, ok] =
      stabilise([&](double scale) { return chebyshev_moments(f, n, scale); });
  return {BasisKind::chebyshev(), std::move(m.values), ok};
}

SeriesCoeffs truncate(const SeriesCoeffs& s, int n) {
  if (n < 0 || n > s.degree()) {
    throw DomainError("truncate: degree out of range");
  }
  SeriesCoeffs t = s;
  t.coeffs.resize(static_cast<std::size_t>(n) + 1);
  return t;
}

double eval_series(const SeriesCoeffs& s, double x) {
  if (!(std::abs(x) <= 1.0)) {
    throw DomainError("eval_series: |x| must be <= 1");
  }
  const auto& a = s.coeffs;
  const int n = s.degree();
  if (n < 0) return 0.0;
  switch (s.basis.tag) {
    case BasisTag::Chebyshev1: {
      double b1 = 0.0;
      double b2 = 0.0;
      for (int k = n; k >= 1; --k) {
        const double b0 = a[k] + 2.0 * x * b1 - b2;
        b2 = b1;
        b1 = b0;
      }
      return a[0] + x * b1 - b2;
    }
    case BasisTag::Legendre: {
      // P_{k+1} = alpha_k P_k + beta_k P_{k-1},
      // alpha_k = (2k+1)x/(k+1), beta_k = -k/(k+1).
      double b1 = 0.0;
      double b2 = 0.0;
      for (int k = n; k >= 1; --k) {
        const double alpha = (2.0 * k + 1.0) * x / (k + 1.0);
        const double beta_next = -(k + 1.0) / (k + 2.0);
        const double b0 = a[k] + alpha * b1 + beta_next * b2;
        b2 = b1;
        b1 = b0;
      }
      return a[0] + x * b1 - 0.5 * b2;
    }
    case BasisTag::Jacobi:
      break;
  }
  throw DomainError("eval_series: unsupported basis");
}

std::vector<double> assessment_grid(std::span<const double> breakpoints,
                                    int base_points, int cluster_points) {
  if (base_points < 2) throw DomainError("assessment_grid: too few points");
  std::vector<double> grid = chebyshev_lobatto_points(base_points - 1);
  std::reverse(grid.begin(), grid.end());
  const int per_side = std::max(1, (cluster_points - 1) / 2);
  for (double xi : breakpoints) {
    grid.push_back(xi);
    for (int i = 0; i < per_side; ++i) {
      // log-spaced distances from 2^-40 up to 2^-1
      const double t = per_side == 1 ? 1.0 : double(i) / (per_side - 1);
      const double d = std::exp2(-40.0 + 39.0 * t);
      if (xi - d > -1.0) grid.push_back(xi - d);
      if (xi + d < 1.0) grid.push_back(xi + d);
    }
  }
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

std::vector<double> assessment_grid(const FunctionSpec& f) {
  return assessment_grid(f.breakpoints);
}

std::vector<double> pointwise_error(const FunctionSpec& f,
                                    const SeriesCoeffs& s,
                                    std::span<const double> grid) {
  std::vector<double> err(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    err[i] = std::abs(f(grid[i]) - eval_series(s, grid[i]));
  }
  return err;
}

ErrorPeak max_error_on(const FunctionSpec& f, const SeriesCoeffs& s,
                       std::span<const double> grid) {
  ErrorPeak peak{-1.0, 0.0};
  for (double x : grid) {
    const double e = std::abs(f(x) - eval_series(s, x));
    if (e > peak.value) peak = {e, x};
  }
  return peak;
}

double max_error(const FunctionSpec& f, const SeriesCoeffs& s) {
  const auto grid = assessment_grid(f);
  return max_error_on(f, s, grid).value;
}

ErrorAssessment assess_max_error(const FunctionSpec& f, const SeriesCoeffs& s) {
  ErrorAssessment a;
  a.peak = max_error_on(f, s, assessment_grid(f));
  const auto fine = assessment_grid(f.breakpoints, 2 * kAssessmentBasePoints - 1,
                                    2 * kBreakpointClusterPoints - 1);
  a.refined_value = max_error_on(f, s, fine).value;
  a.drift = a.refined_value > 0.0
                ? std::abs(a.refined_value - a.peak.value) / a.refined_value
                : 0.0;
  return a;
}

ErrorPeak legendre_tail_error(std::span<const double> coeffs, int n,
                              std::span<const double> grid) {
  const int top = static_cast<int>(coeffs.size()) - 1;
  ErrorPeak peak{0.0, grid.empty() ? 0.0 : grid.front()};
  for (double x : grid) {
    double prev = 1.0;
    double cur = x;
    double sum = 0.0;
    for (int k = 1; k <= top; ++k) {
      if (k > n) sum += coeffs[k] * cur;
      const double next = ((2 * k + 1) * x * cur - k * prev) / (k + 1);
      prev = cur;
      cur = next;
    }
    if (n < 0 && top >= 0) sum += coeffs[0];
    if (std::abs(sum) > peak.value) peak = {std::abs(sum), x};
  }
  return peak;
}

}  // namespace legapprox
