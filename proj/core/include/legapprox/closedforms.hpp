#pragma once

#include <variant>

#include "legapprox/function.hpp"

namespace legapprox {

// Explicit Legendre coefficient formulas for model functions. They serve
// as oracles independent of quadrature.

/// Sharp bound |a_k| <= 4 / sqrt(pi (2k-3)) / (k - 1/2) for the Legendre
/// coefficients of |x|; k even and >= 2 (odd coefficients vanish).
double abs_coeff_bound(int k);

/// a_k of (x - 2)^{-1}; negative for every k with |a_k| strictly decreasing.
double reciprocal_coeff(int k);

/// a_k of |x - x0|^alpha through Jacobi polynomials with parameters
/// (alpha+1, -alpha-1). alpha must be positive and non-integer.
double interior_fractional_coeff(double alpha, double x0, int k);

/// a_k of (1 + x)^alpha (side Plus) or (1 - x)^alpha (side Minus); alpha
/// positive and non-integer. Gamma ratios are combined in log space with
/// sign tracking, through the reflection formula once k > alpha + 1.
double endpoint_fractional_coeff(double alpha, EndpointSide side, int k);

/// Limit of a_k / c_k for (1 +- x)^alpha: sqrt(pi) Gamma(alpha+1) /
/// Gamma(alpha+1/2); 1 at alpha = 0 and increasing.
double leg_cheb_coeff_ratio(double alpha);

enum class CoeffFamily { AbsBound, ReciprocalPole, InteriorFractional, EndpointFractional };

namespace formula {
struct AbsBound {};
struct ReciprocalPole {};
struct InteriorFractional {
  double alpha = 2.5;
  double x0 = 0.5;
};
struct EndpointFractional {
  double alpha = 2.5;
  EndpointSide side = EndpointSide::Plus;
};
}  // namespace formula

using CoeffFormula = std::variant<formula::AbsBound, formula::ReciprocalPole,
                                  formula::InteriorFractional,
                                  formula::EndpointFractional>;

struct CoeffFormulaResult {
  int k = 0;
  double value = 0.0;
  CoeffFamily family = CoeffFamily::AbsBound;
  /// Exponent s in a_k = O(k^s). For the pole family, which decays
  /// geometrically, this is the algebraic prefactor exponent 1/2.
  double asymptotic_order = 0.0;
};

CoeffFormulaResult evaluate(const CoeffFormula& f, int k);

}  // namespace legapprox
