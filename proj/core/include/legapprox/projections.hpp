#pragma once

#include <span>
#include <vector>

#include "legapprox/function.hpp"
#include "legapprox/polybasis.hpp"

namespace legapprox {

/// Coefficients of a finite series sum_k coeffs[k] * phi_k(x).
///
/// For the Chebyshev basis the constant term is stored already halved, so
/// evaluation never halves anything. `converged` is the accuracy flag of the
/// coefficient stabilisation loop; hand-built series are always converged.
struct SeriesCoeffs {
  BasisKind basis = BasisKind::legendre();
  std::vector<double> coeffs;
  bool converged = true;

  [[nodiscard]] int degree() const {
    return static_cast<int>(coeffs.size()) - 1;
  }
};

inline constexpr int kMaxProjectionDegree = 2000;
inline constexpr int kAssessmentBasePoints = 8193;
inline constexpr int kBreakpointClusterPoints = 513;

/// a_k = (k + 1/2) int f P_k, k = 0..n.
SeriesCoeffs legendre_coeffs(const FunctionSpec& f, int n);

/// c_k = (2/pi) int f T_k / sqrt(1 - x^2) (c_0 halved), k = 0..n.
SeriesCoeffs chebyshev_coeffs(const FunctionSpec& f, int n);

/// First n+1 coefficients of s.
SeriesCoeffs truncate(const SeriesCoeffs& s, int n);

/// Clenshaw summation in the Legendre or Chebyshev basis, |x| <= 1.
double eval_series(const SeriesCoeffs& s, double x);

/// Chebyshev-Lobatto base grid (ascending) plus, for each breakpoint, the
/// breakpoint and points at log-spaced distances 2^-40 .. 2^-1 on each side.
std::vector<double> assessment_grid(std::span<const double> breakpoints,
                                    int base_points = kAssessmentBasePoints,
                                    int cluster_points = kBreakpointClusterPoints);

/// The default assessment grid for f.
std::vector<double> assessment_grid(const FunctionSpec& f);

/// |f(x) - s(x)| for every grid point.
std::vector<double> pointwise_error(const FunctionSpec& f,
                                    const SeriesCoeffs& s,
                                    std::span<const double> grid);

struct ErrorPeak {
  double value = 0.0;
  double argmax = 0.0;
};

ErrorPeak max_error_on(const FunctionSpec& f, const SeriesCoeffs& s,
                       std::span<const double> grid);

/// Maximum error over the default assessment grid.
double max_error(const FunctionSpec& f, const SeriesCoeffs& s);

/// Max error on the default grid and on the grid with doubled resolution;
/// drift is the relative change between the two.
struct ErrorAssessment {
  ErrorPeak peak;
  double refined_value = 0.0;
  double drift = 0.0;
};
ErrorAssessment assess_max_error(const FunctionSpec& f, const SeriesCoeffs& s);

/// max over the grid of |sum_{k=n+1}^{N} a_k P_k(x)| for Legendre
/// coefficients a_0..a_N. Evaluating the tail directly keeps full relative
/// accuracy when the projection error is far below roundoff of f itself.
ErrorPeak legendre_tail_error(std::span<const double> coeffs, int n,
                              std::span<const double> grid);

}  // namespace legapprox
