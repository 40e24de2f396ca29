#include <cmath>
#include <numbers>

#include <doctest.h>

#include "legapprox/error.hpp"
#include "legapprox/specfun.hpp"

using namespace legapprox;
using doctest::Approx;

TEST_CASE("log_gamma") {
  CHECK(log_gamma(1.0) == Approx(0.0).epsilon(1e-15));
  CHECK(log_gamma(0.5) == Approx(0.57236494292470008707).epsilon(1e-15));
  CHECK(log_gamma(11.0) == Approx(15.1044125730755152952).epsilon(1e-15));
  CHECK(log_gamma(123.25) == Approx(468.61448295051664423).epsilon(1e-15));
  CHECK_THROWS_AS(log_gamma(0.0), DomainError);
  CHECK_THROWS_AS(log_gamma(-2.5), DomainError);
}

TEST_CASE("log_gamma_signed follows the reflection formula") {
  const auto g = log_gamma_signed(-0.5);  // Gamma(-1/2) = -2 sqrt(pi)
  CHECK(g.sign == -1);
  CHECK(g.log_abs == Approx(std::log(2.0 * std::sqrt(std::numbers::pi))));
  const auto h = log_gamma_signed(-1.5);  // Gamma(-3/2) = 4 sqrt(pi) / 3
  CHECK(h.sign == 1);
  CHECK(h.log_abs == Approx(std::log(4.0 * std::sqrt(std::numbers::pi) / 3.0)));
  CHECK_THROWS_AS(log_gamma_signed(-2.0), DomainError);
}

TEST_CASE("gamma_ratio") {
  CHECK(gamma_ratio(2.0, 1.5) == Approx(1.1283791671).epsilon(1e-10));
  CHECK(gamma_ratio(5.0, 5.0) == Approx(1.0).epsilon(1e-15));
  CHECK(gamma_ratio(2.0, 1.5) * std::sqrt(std::numbers::pi) ==
        Approx(2.0).epsilon(1e-15));
  CHECK(gamma_ratio(10.5, 10.0) == Approx(3.1230114333906127848).epsilon(1e-14));
  // Both arguments far beyond the overflow threshold of Gamma.
  CHECK(gamma_ratio(1000.5, 1000.0) == Approx(31.6188240018159).epsilon(1e-13));
}

TEST_CASE("psi_seq") {
  CHECK(psi_seq(1) == Approx(2.0).epsilon(1e-15));
  CHECK(psi_seq(2) == Approx(1.8856180832).epsilon(1e-10));
  CHECK(std::abs(psi_seq(1000000) - std::sqrt(std::numbers::pi)) < 1e-3);
  for (int k = 1; k < 200; ++k) CHECK(psi_seq(k + 1) < psi_seq(k));
  CHECK_THROWS_AS(psi_seq(0), DomainError);
}

TEST_CASE("gauss_2f1") {
  CHECK(gauss_2f1(0.5, 1.0, 1.0, 0.25) == Approx(1.1547005384).epsilon(1e-10));
  CHECK(gauss_2f1(0.7, 1.3, 1.3, 0.0) == 1.0);
  const double z = 2.0 - std::sqrt(3.0);
  CHECK(gauss_2f1(1.0, 0.5, 1.5, z * z) ==
        Approx(std::atanh(z) / z).epsilon(1e-14));
  CHECK(gauss_2f1(1.5, 0.5, 2.5, 0.3) == Approx(1.1080625510569319933).epsilon(1e-14));
  CHECK_THROWS_AS(gauss_2f1(1.0, 1.0, 2.0, 1.0), DomainError);
  CHECK_THROWS_AS(gauss_2f1(1.0, 1.0, 2.0, -1.5), DomainError);
}

TEST_CASE("elliptic_e uses the modulus convention") {
  CHECK(elliptic_e(0.0) == Approx(std::numbers::pi / 2).epsilon(1e-15));
  CHECK(elliptic_e(1.0) == Approx(1.0).epsilon(1e-15));
  CHECK(elliptic_e(0.8) == Approx(1.2763499431699064233).epsilon(1e-14));
  CHECK(elliptic_e(0.6) == Approx(1.4180833944487242316).epsilon(1e-14));
  CHECK_THROWS_AS(elliptic_e(1.2), DomainError);
  CHECK_THROWS_AS(elliptic_e(-0.1), DomainError);
}

TEST_CASE("ellipse circumference") {
  CHECK(ellipse_circumference(BernsteinEllipse::from_rho(1.0)) ==
        Approx(4.0).epsilon(1e-14));
  CHECK(ellipse_circumference(BernsteinEllipse::from_rho(2.0)) ==
        Approx(6.3817497158495321165).epsilon(1e-13));
  const double big = ellipse_circumference(BernsteinEllipse::from_rho(100.0));
  CHECK(std::abs(big / (100.0 * std::numbers::pi) - 1.0) < 5e-3);
  for (double rho : {1.0, 1.1, 1.5, 2.0, 4.0, 20.0}) {
    CHECK(ellipse_circumference(BernsteinEllipse::from_rho(rho)) <=
          ellipse_circumference_upper_bound(rho) * (1.0 + 1e-14));
  }
  CHECK(ellipse_circumference_upper_bound(1.0) == Approx(4.0));
  CHECK_THROWS_AS(BernsteinEllipse::from_rho(0.9), DomainError);
}

TEST_CASE("Bernstein ellipse geometry") {
  const auto e = BernsteinEllipse::from_rho(2.0);
  CHECK(e.semi_major == Approx(1.25));
  CHECK(e.semi_minor == Approx(0.75));
  const auto z = e.point(0.3);
  const double u = z.real() / e.semi_major;
  const double v = z.imag() / e.semi_minor;
  CHECK(u * u + v * v == Approx(1.0).epsilon(1e-14));
}
