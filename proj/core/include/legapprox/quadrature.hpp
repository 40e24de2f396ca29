#pragma once

#include <functional>
#include <memory>
#include <span>
#include <vector>

namespace legapprox {

/// Gauss-Legendre rule on [-1, 1]: nodes strictly increasing, weights
/// positive and summing to 2.
struct QuadRule {
  std::vector<double> nodes;
  std::vector<double> weights;

  [[nodiscard]] int order() const { return static_cast<int>(nodes.size()); }
};

inline constexpr int kMaxGaussOrder = 4096;

/// Nodes are the roots of P_order found by Newton iteration from
/// asymptotic initial guesses. 1 <= order <= kMaxGaussOrder.
QuadRule gauss_legendre_rule(int order);

/// Shared immutable rule from a process-wide cache (thread safe).
std::shared_ptr<const QuadRule> cached_gauss_legendre_rule(int order);

/// One mapped Gauss rule on [a, b].
struct Panel {
  double a = -1.0;
  double b = 1.0;
  int order = 1;
};

/// Calls fn(x, w) for every node of every panel.
template <typename Fn>
void for_each_node(std::span<const Panel> panels, Fn&& fn) {
  for (const Panel& p : panels) {
    const auto rule = cached_gauss_legendre_rule(p.order);
    const double half = 0.5 * (p.b - p.a);
    const double mid = 0.5 * (p.b + p.a);
    for (int i = 0; i < rule->order(); ++i) {
      fn(mid + half * rule->nodes[i], half * rule->weights[i]);
    }
  }
}

/// Sum of panel integrals of f.
double integrate_panels(const std::function<double(double)>& f,
                        std::span<const Panel> panels);

/// Splits [-1, 1] at the breakpoints and applies an order-point Gauss rule
/// to every piece. f is never evaluated at a breakpoint.
double integrate_composite(const std::function<double(double)>& f,
                           std::span<const double> breakpoints, int order);

/// How the oscillation budget of a panel is measured when choosing its
/// order: in the Chebyshev angle theta = arccos(x) (x-space integrals), or
/// directly in the integration variable (theta-space integrals on [0, pi]).
enum class PhaseMetric { Arccos, Identity };

/// Panel layout for integrands with singular points.
///
/// [lo, hi] is split at the breakpoints. Every piece end that is a
/// breakpoint, or a flagged singular end of [lo, hi], receives geometric
/// grading with factor 1/2 until the innermost panel is narrower than
/// min_width times the piece length. Panel orders scale with degree_hint
/// times the phase width of the panel, so a degree-n Legendre or Chebyshev
/// moment is resolved on every panel; order_scale multiplies the whole
/// budget (used for stabilisation doubling).
struct PanelLayout {
  double lo = -1.0;
  double hi = 1.0;
  std::vector<double> breakpoints;
  bool singular_lo = false;
  bool singular_hi = false;
  bool grade_breakpoints = true;
  int degree_hint = 0;
  double order_scale = 1.0;
  double min_width = 1e-16;
  PhaseMetric metric = PhaseMetric::Arccos;
};

std::vector<Panel> build_panels(const PanelLayout& layout);

/// Integral over graded panels.
double integrate_graded(const std::function<double(double)>& f,
                        const PanelLayout& layout);

/// Chebyshev-Lobatto points cos(j pi / n), j = 0..n (descending).
std::vector<double> chebyshev_lobatto_points(int n);

/// Interpolatory Chebyshev coefficients from samples at
/// chebyshev_lobatto_points(n). The result c satisfies
/// p(x) = sum_k c_k T_k(x) (the constant term is stored already halved).
std::vector<double> chebyshev_transform(std::span<const double> samples,
                                        int n);

}  // namespace legapprox
