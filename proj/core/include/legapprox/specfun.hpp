#pragma once

#include <complex>

namespace legapprox {

/// Ellipse with foci at +-1 whose semi-axes sum to rho.
struct BernsteinEllipse {
  double rho = 1.0;
  double semi_major = 1.0;
  double semi_minor = 0.0;

  /// Throws DomainError for rho < 1 (rho == 1 is the degenerate segment).
  static BernsteinEllipse from_rho(double rho);

  /// Boundary point at parameter angle theta.
  [[nodiscard]] std::complex<double> point(double theta) const;
};

/// ln Gamma(x) for x > 0.
double log_gamma(double x);

/// ln|Gamma(x)| and sign of Gamma(x) for any non-pole real x, negative
/// arguments through the reflection formula.
struct SignedLogGamma {
  double log_abs = 0.0;
  int sign = 1;
};
SignedLogGamma log_gamma_signed(double x);

/// Gamma(a) / Gamma(b) for a, b > 0 without intermediate overflow.
double gamma_ratio(double a, double b);

/// psi(k) = Gamma(k+1) Gamma(1/2) / Gamma(k+1/2) * k^(-1/2), k >= 1.
/// Strictly decreasing from psi(1) = 2 towards sqrt(pi).
double psi_seq(int k);

/// Gauss hypergeometric 2F1(a, b; c; z) by direct series summation, |z| < 1.
double gauss_2f1(double a, double b, double c, double z);

/// Complete elliptic integral of the second kind in modulus convention,
/// E(k) = int_0^{pi/2} sqrt(1 - k^2 sin^2 t) dt, 0 <= k <= 1.
double elliptic_e(double k);

/// Circumference of the Bernstein ellipse, 4 E(eps) / eps with
/// eps = 2 / (rho + 1/rho).
double ellipse_circumference(const BernsteinEllipse& e);

/// Upper bound 2(rho + 1/rho) + 2(pi/2 - 1)(rho - 1/rho) on the
/// circumference; equality at rho = 1 and asymptotically as rho grows.
double ellipse_circumference_upper_bound(double rho);

}  // namespace legapprox
