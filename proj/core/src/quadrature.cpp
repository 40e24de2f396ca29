#include "legapprox/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <string>

#include "legapprox/error.hpp"

namespace legapprox {

namespace {

constexpr int kMaxNewtonSteps = 100;
constexpr int kMinPanelOrder = 24;

// P_n(x) and P_n'(x) by the three-term recurrence.
std::pair<double, double> legendre_and_derivative(int n, double x) {
  double prev = 1.0;
  double cur = x;
  for (int k = 1; k < n; ++k) {
    const double next = ((2 * k + 1) * x * cur - k * prev) / (k + 1);
    prev = cur;
    cur = next;
  }
  if (n == 0) return {1.0, 0.0};
  const double deriv = n * (x * cur - prev) / (x * x - 1.0);
  return {cur, deriv};
}

double phase_width(double a, double b, PhaseMetric metric) {
  if (metric == PhaseMetric::Identity) return std::abs(b - a);
  const auto clamp = [](double v) { return std::clamp(v, -1.0, 1.0); };
  return std::abs(std::acos(clamp(a)) - std::acos(clamp(b)));
}

int panel_order(double a, double b, const PanelLayout& layout) {
  const double budget = (layout.degree_hint + 1.0) *
                            phase_width(a, b, layout.metric) /
                            std::numbers::pi +
                        kMinPanelOrder;
  const double scaled = std::ceil(budget * layout.order_scale);
  return static_cast<int>(std::clamp(scaled, 1.0, double(kMaxGaussOrder)));
}

// Geometric panels on [a, b] refined towards `toward` (a or b).
void push_graded(std::vector<Panel>& out, double a, double b, bool toward_a,
                 const PanelLayout& layout) {
  const double length = b - a;
  const double floor_width = std::max(layout.min_width * length, 1e-300);
  std::vector<Panel> chunk;
  double w = 0.5 * length;
  // Outermost panel covers the half away from the singular end.
  if (toward_a) {
    chunk.push_back({a + w, b, 0});
  } else {
    chunk.push_back({a, b - w, 0});
  }
  while (w > floor_width) {
    const double inner = 0.5 * w;
    if (toward_a) {
      chunk.push_back({a + inner, a + w, 0});
    } else {
      chunk.push_back({b - w, b - inner, 0});
    }
    w = inner;
  }
  if (toward_a) {
    chunk.push_back({a, a + w, 0});
  } else {
    chunk.push_back({b - w, b, 0});
  }
  for (Panel& p : chunk) p.order = panel_order(p.a, p.b, layout);
  if (toward_a) std::reverse(chunk.begin(), chunk.end());
  out.insert(out.end(), chunk.begin(), chunk.end());
}

}  // namespace

QuadRule gauss_legendre_rule(int order) {
  if (order < 1 || order > kMaxGaussOrder) {
    throw DomainError("gauss_legendre_rule: order must lie in [1, " +
                      std::to_string(kMaxGaussOrder) + "], got " +
                      std::to_string(order));
  }
  const int n = order;
  QuadRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Tricomi-type initial guess for the i-th largest root.
    const double theta = std::numbers::pi * (i + 0.75) / (n + 0.5);
    double x = std::cos(theta) *
               (1.0 - (n - 1.0) / (8.0 * n * n * n) -
                1.0 / (384.0 * std::pow(double(n), 4)) *
                    (39.0 - 28.0 / (std::sin(theta) * std::sin(theta))));
    if (n % 2 == 1 && i == half - 1) x = 0.0;
    double deriv = 0.0;
    bool converged = false;
    for (int step = 0; step < kMaxNewtonSteps; ++step) {
      const auto [p, dp] = legendre_and_derivative(n, x);
      const double dx = p / dp;
      x -= dx;
      deriv = dp;
      if (std::abs(dx) <= 1e-15) {
        converged = true;
        break;
      }
    }
    if (!converged) {
      throw ConvergenceError("gauss_legendre_rule: Newton failed for order " +
                             std::to_string(n));
    }
    deriv = legendre_and_derivative(n, x).second;
    const double w = 2.0 / ((1.0 - x * x) * deriv * deriv);
    rule.nodes[n - 1 - i] = x;
    rule.nodes[i] = -x;
    rule.weights[n - 1 - i] = w;
    rule.weights[i] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

std::shared_ptr<const QuadRule> cached_gauss_legendre_rule(int order) {
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const QuadRule>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(order); it != cache.end()) return it->second;
  }
  auto rule = std::make_shared<const QuadRule>(gauss_legendre_rule(order));
  std::lock_guard lock(mutex);
  return cache.emplace(order, std::move(rule)).first->second;
}

double integrate_panels(const std::function<double(double)>& f,
                        std::span<const Panel> panels) {
  double sum = 0.0;
  for_each_node(panels, [&](double x, double w) { sum += w * f(x); });
  return sum;
}

double integrate_composite(const std::function<double(double)>& f,
                           std::span<const double> breakpoints, int order) {
  std::vector<Panel> panels;
  double left = -1.0;
  for (double b : breakpoints) {
    if (!(b > left && b < 1.0)) {
      throw DomainError(
          "integrate_composite: breakpoints must be increasing in (-1, 1)");
    }
    panels.push_back({left, b, order});
    left = b;
  }
  panels.push_back({left, 1.0, order});
  return integrate_panels(f, panels);
}

std::vector<Panel> build_panels(const PanelLayout& layout) {
  if (!(layout.hi > layout.lo)) {
    throw DomainError("build_panels: empty interval");
  }
  std::vector<double> cuts{layout.lo};
  for (double b : layout.breakpoints) {
    if (!(b > cuts.back() && b < layout.hi)) {
      throw DomainError("build_panels: breakpoints must be increasing inside "
                        "the interval");
    }
    cuts.push_back(b);
  }
  cuts.push_back(layout.hi);

  std::vector<Panel> panels;
  const std::size_t pieces = cuts.size() - 1;
  for (std::size_t i = 0; i < pieces; ++i) {
    const double a = cuts[i];
    const double b = cuts[i + 1];
    const bool sing_a = (i == 0) ? layout.singular_lo : layout.grade_breakpoints;
    const bool sing_b =
        (i + 1 == pieces) ? layout.singular_hi : layout.grade_breakpoints;
    if (sing_a && sing_b) {
      const double mid = 0.5 * (a + b);
      push_graded(panels, a, mid, true, layout);
      push_graded(panels, mid, b, false, layout);
    } else if (sing_a) {
      push_graded(panels, a, b, true, layout);
    } else if (sing_b) {
      push_graded(panels, a, b, false, layout);
    } else {
      panels.push_back({a, b, panel_order(a, b, layout)});
    }
  }
  return panels;
}

double integrate_graded(const std::function<double(double)>& f,
                        const PanelLayout& layout) {
  const auto panels = build_panels(layout);
  return integrate_panels(f, panels);
}

std::vector<double> chebyshev_lobatto_points(int n) {
  if (n < 1) throw DomainError("chebyshev_lobatto_points: n must be >= 1");
  std::vector<double> x(static_cast<std::size_t>(n) + 1);
  for (int j = 0; j <= n; ++j) {
    // sin form keeps the points exactly antisymmetric.
    x[j] = std::sin(std::numbers::pi * (n - 2.0 * j) / (2.0 * n));
  }
  return x;
}

std::vector<double> chebyshev_transform(std::span<const double> samples,
                                        int n) {
  if (n < 1 || samples.size() != static_cast<std::size_t>(n) + 1) {
    throw DomainError("chebyshev_transform: expected n+1 samples at the "
                      "Chebyshev-Lobatto points");
  }
  // cos(j k pi / n) depends only on j*k mod 2n.
  const int period = 2 * n;
  std::vector<double> table(period);
  for (int m = 0; m < period; ++m) {
    // Reduce to an angle in [0, pi/4] first; cos of a large rounded angle
    // carries an absolute error of order eps * angle into every coefficient.
    int t = m > n ? period - m : m;  // cos is even about pi
    double sign = 1.0;
    if (2 * t > n) {                 // cos(pi - a) = -cos(a)
      t = n - t;
      sign = -1.0;
    }
    table[m] = 4 * t > n
                   ? sign * std::sin(std::numbers::pi * (n - 2.0 * t) / (2.0 * n))
                   : sign * std::cos(std::numbers::pi * t / n);
  }
  std::vector<double> c(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    // Neumaier summation: the coefficients of interest can sit many orders
    // of magnitude below the samples.
    double sum = 0.5 * (samples[0] + samples[n] * table[(k * n) % period]);
    double comp = 0.0;
    for (int j = 1; j < n; ++j) {
      const double term =
          samples[j] * table[(static_cast<long long>(j) * k) % period];
      const double t = sum + term;
      comp += std::abs(sum) >= std::abs(term) ? (sum - t) + term
                                               : (term - t) + sum;
      sum = t;
    }
    c[k] = 2.0 * (sum + comp) / n;
  }
  c[0] *= 0.5;
  c[n] *= 0.5;
  return c;
}

}  // namespace legapprox
