#include "legapprox/closedforms.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "legapprox/error.hpp"
#include "legapprox/polybasis.hpp"
#include "legapprox/specfun.hpp"

namespace legapprox {

namespace {

void require_fractional(double alpha, const char* who) {
  if (!(alpha > 0.0) || std::floor(alpha) == alpha) {
    throw DomainError(std::string(who) +
                      ": alpha must be positive and non-integer");
  }
}

}  // namespace

double abs_coeff_bound(int k) {
  if (k < 2 || k % 2 != 0) {
    throw DomainError("abs_coeff_bound: k must be even and >= 2");
  }
  return 4.0 / std::sqrt(std::numbers::pi * (2.0 * k - 3.0)) / (k - 0.5);
}

double reciprocal_coeff(int k) {
  if (k < 0) throw DomainError("reciprocal_coeff: k must be >= 0");
  const double rho = 2.0 + std::sqrt(3.0);
  const double kd = k;
  const double log_mag = std::log(gamma_ratio(kd + 1.0, kd + 0.5)) +
                         0.5 * std::log(std::numbers::pi) -
                         (kd + 1.0) * std::log(rho);
  const double hyp = gauss_2f1(kd + 1.0, 0.5, kd + 1.5, 1.0 / (rho * rho));
  return -2.0 * hyp * std::exp(log_mag);
}

double interior_fractional_coeff(double alpha, double x0, int k) {
  require_fractional(alpha, "interior_fractional_coeff");
  if (!(std::abs(x0) < 1.0)) {
    throw DomainError("interior_fractional_coeff: |x0| must be < 1");
  }
  if (k < 0) throw DomainError("interior_fractional_coeff: k must be >= 0");
  const double a = alpha + 1.0;
  const double b = -alpha - 1.0;
  const double prefactor = (k + 0.5) * std::exp(log_gamma(alpha + 1.0)) *
                           gamma_ratio(k + 1.0, k + alpha + 2.0);
  const double right = std::pow(1.0 - x0, a) * jacobi_eval(a, b, k, x0);
  const double left = std::pow(1.0 + x0, a) * jacobi_eval(a, b, k, -x0);
  const double sign = (k % 2 == 0) ? 1.0 : -1.0;
  return prefactor * (right + sign * left);
}

double endpoint_fractional_coeff(double alpha, EndpointSide side, int k) {
  require_fractional(alpha, "endpoint_fractional_coeff");
  if (k < 0) throw DomainError("endpoint_fractional_coeff: k must be >= 0");
  const double kd = k;
  const double log_common = alpha * std::log(2.0) +
                            2.0 * log_gamma(alpha + 1.0) +
                            std::log(2.0 * kd + 1.0) -
                            log_gamma(kd + alpha + 2.0);
  const bool odd = (k % 2) != 0;
  if (kd < alpha + 1.0) {
    // (+-1)^k 2^a Gamma(a+1)^2 (2k+1) / [Gamma(a+1-k) Gamma(a+2+k)]
    const SignedLogGamma g = log_gamma_signed(alpha + 1.0 - kd);
    const double parity = (side == EndpointSide::Minus && odd) ? -1.0 : 1.0;
    return parity * g.sign * std::exp(log_common - g.log_abs);
  }
  // -(-+1)^k 2^a sin(a pi) Gamma(a+1)^2 (2k+1) Gamma(k-a) / [pi Gamma(k+a+2)]
  const SignedLogGamma g = log_gamma_signed(kd - alpha);
  const double s = std::sin(alpha * std::numbers::pi);
  const double parity = (side == EndpointSide::Plus && odd) ? -1.0 : 1.0;
  const double sign = -parity * g.sign * (s > 0.0 ? 1.0 : -1.0);
  return sign * std::exp(log_common + g.log_abs + std::log(std::abs(s)) -
                         std::log(std::numbers::pi));
}

double leg_cheb_coeff_ratio(double alpha) {
  if (!(alpha >= 0.0)) {
    throw DomainError("leg_cheb_coeff_ratio: alpha must be >= 0");
  }
  return std::sqrt(std::numbers::pi) * gamma_ratio(alpha + 1.0, alpha + 0.5);
}

CoeffFormulaResult evaluate(const CoeffFormula& f, int k) {
  CoeffFormulaResult r;
  r.k = k;
  if (std::holds_alternative<formula::AbsBound>(f)) {
    r.family = CoeffFamily::AbsBound;
    r.value = abs_coeff_bound(k);
    r.asymptotic_order = -1.5;
  } else if (std::holds_alternative<formula::ReciprocalPole>(f)) {
    r.family = CoeffFamily::ReciprocalPole;
    r.value = reciprocal_coeff(k);
    r.asymptotic_order = 0.5;
  } else if (const auto* in = std::get_if<formula::InteriorFractional>(&f)) {
    r.family = CoeffFamily::InteriorFractional;
    r.value = interior_fractional_coeff(in->alpha, in->x0, k);
    r.asymptotic_order = -in->alpha - 0.5;
  } else {
    const auto& ep = std::get<formula::EndpointFractional>(f);
    r.family = CoeffFamily::EndpointFractional;
    r.value = endpoint_fractional_coeff(ep.alpha, ep.side, k);
    r.asymptotic_order = -2.0 * ep.alpha - 1.0;
  }
  return r;
}

}  // namespace legapprox
