#pragma once

#include <utility>
#include <vector>

namespace legapprox {

enum class BasisTag { Legendre, Chebyshev1, Jacobi };

/// Polynomial family. Jacobi parameters are validated for the classical
/// range alpha, beta > -1; jacobi_eval itself accepts any real pair.
struct BasisKind {
  BasisTag tag = BasisTag::Legendre;
  double alpha = 0.0;
  double beta = 0.0;

  static BasisKind legendre() { return {BasisTag::Legendre, 0.0, 0.0}; }
  static BasisKind chebyshev() { return {BasisTag::Chebyshev1, 0.0, 0.0}; }
  static BasisKind jacobi(double alpha, double beta);

  friend bool operator==(const BasisKind&, const BasisKind&) = default;
};

const char* basis_name(const BasisKind& b);

/// P_n(x) normalised by P_n(1) = 1, |x| <= 1.
double legendre_eval(int n, double x);

/// P_0(x), ..., P_n(x) in one pass of the recurrence.
std::vector<double> legendre_batch(int n, double x);

/// T_n(x) = cos(n arccos x), |x| <= 1.
double chebyshev_eval(int n, double x);

/// P_n^{(alpha,beta)}(x) by the three-term recurrence. Any real parameters
/// are accepted; a vanishing recurrence denominator raises DomainError.
double jacobi_eval(double alpha, double beta, int n, double x);

/// {P_n^{(alpha,beta)}(x), d/dx P_n^{(alpha,beta)}(x)}.
std::pair<double, double> jacobi_eval_with_derivative(double alpha,
                                                      double beta, int n,
                                                      double x);

/// phi_n(x) = min{(1-x^2)^{-1/4}, sqrt(pi/2) (n+1/2)^{1/2}}.
double bernstein_envelope(int n, double x);

/// D_n(x,y) = sum_{k=0}^n (k+1/2) P_k(x) P_k(y).
double dirichlet_kernel_sum(int n, double x, double y);

/// D_n(x,y) through the Christoffel-Darboux quotient; falls back to the sum
/// when |x - y| < dirichlet_diagonal_threshold(x).
double dirichlet_kernel_cd(int n, double x, double y);

inline double dirichlet_diagonal_threshold(double x) {
  return 1e-6 * (1.0 + (x < 0 ? -x : x));
}

}  // namespace legapprox
