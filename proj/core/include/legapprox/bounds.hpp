#pragma once

#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "legapprox/function.hpp"
#include "legapprox/projections.hpp"
#include "legapprox/specfun.hpp"

namespace legapprox {

/// Value of a theoretical bound plus, once compared with a measurement, the
/// margin value - measured.
struct BoundReport {
  std::string name;
  double value = 0.0;
  std::map<std::string, double> params;
  std::optional<double> measured;
  std::optional<double> margin;

  /// Records a measured error; satisfied() then compares with tolerance.
  BoundReport& compare_with(double measured_error);
  [[nodiscard]] bool satisfied(double tolerance = 0.0) const;
};

/// 2M / (rho^n (rho - 1)): Chebyshev projection error for f analytic and
/// bounded by M inside the Bernstein ellipse rho.
double cheb_analytic_bound(double M, double rho, int n);

/// 2V / (pi m (n - m)^m) for f^(m) of bounded variation V, n >= m + 1.
double cheb_bv_bound(double V, int m, int n);

/// D(rho) = 2 L(E_rho) M / (pi sqrt(rho^2 - 1)).
double leg_D(const BernsteinEllipse& e, double M);

/// |a_0| <= D/2 and |a_k| <= D k^{1/2} rho^{-k} for k >= 1.
double leg_coeff_bound(const BernsteinEllipse& e, double M, int k);

/// (D / rho^n) [(n+1)^{1/2} / (rho-1) + (n+1)^{-1/2} / (rho-1)^2].
double leg_projection_bound(const BernsteinEllipse& e, double M, int n);

/// Lebesgue constant of the degree-n Legendre projection,
/// ((n+1)/2) int |P_n^{(1,0)}|, integrated exactly between the roots of
/// P_n^{(1,0)}. Throws ConvergenceError if the roots cannot be isolated.
double lebesgue_constant(int n);

/// Roots of P_n^{(1,0)} in decreasing order (Newton with deflation from
/// asymptotic initial guesses).
std::vector<double> jacobi_1_0_roots(int n);

/// (4/pi^2) log n + 4: factor by which the Chebyshev projection can trail
/// the best approximation.
double chebyshev_vs_best_factor(int n);

/// sum_{k=n+1}^{N} |a_k| over the available coefficients.
double tail_sum_bound(const SeriesCoeffs& coeffs, int n);

/// (1 + Lambda_n) * best_err.
double projection_vs_best_bound(double best_err, int n);

/// max |f| over `samples` equally spaced parameter angles on the ellipse
/// boundary. Requires f.eval_complex.
double ellipse_max_modulus(const FunctionSpec& f, const BernsteinEllipse& e,
                           int samples = 4096);

/// Total variation of g on [-1, 1], summing |increments| over a uniform
/// sample refined around the given breakpoints.
double total_variation(const std::function<double(double)>& g,
                       std::span<const double> breakpoints,
                       int samples = 200000);

}  // namespace legapprox
