#include "legapprox/specfun.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include <boost/math/special_functions/ellint_2.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include "legapprox/error.hpp"

namespace legapprox {

namespace {

constexpr int kHypergeometricTermCap = 10000;

bool is_nonpositive_integer(double c) {
  return c <= 0.0 && std::floor(c) == c;
}

}  // namespace

BernsteinEllipse BernsteinEllipse::from_rho(double rho) {
  if (!(rho >= 1.0) || !std::isfinite(rho)) {
    throw DomainError("BernsteinEllipse: rho must be finite and >= 1, got " +
                      std::to_string(rho));
  }
  BernsteinEllipse e;
  e.rho = rho;
  e.semi_major = 0.5 * (rho + 1.0 / rho);
  // rho/2 <= semi_major <= rho, so the subtraction is exact and
  // semi_major + semi_minor reproduces rho bit for bit.
  e.semi_minor = rho - e.semi_major;
  return e;
}

std::complex<double> BernsteinEllipse::point(double theta) const {
  return {semi_major * std::cos(theta), semi_minor * std::sin(theta)};
}

double log_gamma(double x) {
  if (!(x > 0.0)) {
    throw DomainError("log_gamma: argument must be positive, got " +
                      std::to_string(x));
  }
  return boost::math::lgamma(x);
}

SignedLogGamma log_gamma_signed(double x) {
  if (x > 0.0) return {boost::math::lgamma(x), 1};
  if (std::floor(x) == x) {
    throw DomainError("log_gamma_signed: pole at non-positive integer " +
                      std::to_string(x));
  }
  // Gamma(x) Gamma(1-x) = pi / sin(pi x)
  const double s = boost::math::sin_pi(x);
  const double lg = boost::math::lgamma(1.0 - x);
  return {std::log(std::numbers::pi) - std::log(std::abs(s)) - lg,
          s > 0.0 ? 1 : -1};
}

double gamma_ratio(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) {
    throw DomainError("gamma_ratio: arguments must be positive");
  }
  return boost::math::tgamma_ratio(a, b);
}

double psi_seq(int k) {
  if (k < 1) throw DomainError("psi_seq: k must be >= 1");
  const double kd = k;
  return gamma_ratio(kd + 1.0, kd + 0.5) * std::sqrt(std::numbers::pi) /
         std::sqrt(kd);
}

double gauss_2f1(double a, double b, double c, double z) {
  if (!(std::abs(z) < 1.0)) {
    throw DomainError("gauss_2f1: series requires |z| < 1");
  }
  if (is_nonpositive_integer(c)) {
    throw DomainError("gauss_2f1: c must not be a non-positive integer");
  }
  double sum = 1.0;
  double term = 1.0;
  for (int j = 0; j < kHypergeometricTermCap; ++j) {
    term *= (a + j) * (b + j) / ((c + j) * (j + 1.0)) * z;
    sum += term;
    if (std::abs(term) < 1e-16 * std::abs(sum)) return sum;
    if (term == 0.0) return sum;  // terminating series
  }
  throw ConvergenceError("gauss_2f1: series did not converge within " +
                         std::to_string(kHypergeometricTermCap) + " terms");
}

double elliptic_e(double k) {
  if (!(k >= 0.0 && k <= 1.0)) {
    throw DomainError("elliptic_e: modulus must lie in [0, 1]");
  }
  return boost::math::ellint_2(k);
}

double ellipse_circumference(const BernsteinEllipse& e) {
  if (!(e.rho >= 1.0)) throw DomainError("ellipse_circumference: rho < 1");
  const double eps = 2.0 / (e.rho + 1.0 / e.rho);
  return 4.0 * elliptic_e(eps) / eps;
}

double ellipse_circumference_upper_bound(double rho) {
  if (!(rho >= 1.0)) {
    throw DomainError("ellipse_circumference_upper_bound: rho < 1");
  }
  return 2.0 * (rho + 1.0 / rho) +
         2.0 * (std::numbers::pi / 2.0 - 1.0) * (rho - 1.0 / rho);
}

}  // namespace legapprox
