#include <cmath>
#include <numbers>

#include <doctest.h>

#include "legapprox/error.hpp"
#include "legapprox/polybasis.hpp"

using namespace legapprox;
using doctest::Approx;

TEST_CASE("legendre_eval") {
  for (int n = 0; n <= 50; ++n) CHECK(legendre_eval(n, 1.0) == Approx(1.0));
  CHECK(legendre_eval(2, 0.5) == Approx(-0.125).epsilon(1e-15));
  CHECK(legendre_eval(10, 0.3) == Approx(0.251476349516015625).epsilon(1e-14));
  CHECK(legendre_eval(50, 0.3) == Approx(0.10911051574714797678).epsilon(1e-13));
  CHECK_THROWS_AS(legendre_eval(3, 1.5), DomainError);
}

TEST_CASE("legendre_batch") {
  const auto a = legendre_batch(2, 0.0);
  REQUIRE(a.size() == 3);
  CHECK(a[0] == 1.0);
  CHECK(a[1] == 0.0);
  CHECK(a[2] == Approx(-0.5));
  const auto b = legendre_batch(1, 1.0);
  CHECK(b == std::vector<double>{1.0, 1.0});
  const auto c = legendre_batch(5, -1.0);
  for (int k = 0; k <= 5; ++k) CHECK(c[k] == (k % 2 == 0 ? 1.0 : -1.0));
  const auto d = legendre_batch(30, 0.37);
  for (int k = 0; k <= 30; ++k) CHECK(d[k] == Approx(legendre_eval(k, 0.37)));
}

TEST_CASE("chebyshev_eval") {
  CHECK(chebyshev_eval(3, 0.5) == Approx(-1.0).epsilon(1e-15));
  for (int n = 0; n < 20; ++n) CHECK(chebyshev_eval(n, 1.0) == Approx(1.0));
  CHECK(chebyshev_eval(7, -0.2) == Approx(0.9870208).epsilon(1e-14));
  CHECK_THROWS_AS(chebyshev_eval(2, -1.01), DomainError);
}

TEST_CASE("jacobi_eval") {
  CHECK(jacobi_eval(0.4, -0.3, 0, 0.2) == 1.0);
  CHECK(jacobi_eval(1.0, 0.0, 1, 1.0) == Approx(2.0));
  for (int n : {1, 4, 17}) {
    CHECK(jacobi_eval(0.0, 0.0, n, -0.61) == Approx(legendre_eval(n, -0.61)));
  }
  CHECK(jacobi_eval(1.5, -0.5, 7, 0.3) == Approx(0.42319006640625).epsilon(1e-13));
  CHECK(jacobi_eval(1.0, 0.0, 10, -0.4) == Approx(0.2445658084).epsilon(1e-9));
  // Parameters outside the classical range are accepted by the evaluator.
  CHECK(std::isfinite(jacobi_eval(3.5, -3.5, 6, 0.2)));
  CHECK_THROWS_AS(BasisKind::jacobi(-1.0, 0.0), DomainError);
}

TEST_CASE("jacobi derivative matches a difference quotient") {
  const double h = 1e-6;
  const auto [p, dp] = jacobi_eval_with_derivative(1.0, 0.0, 9, 0.31);
  CHECK(p == Approx(jacobi_eval(1.0, 0.0, 9, 0.31)));
  const double fd = (jacobi_eval(1.0, 0.0, 9, 0.31 + h) -
                     jacobi_eval(1.0, 0.0, 9, 0.31 - h)) / (2 * h);
  CHECK(dp == Approx(fd).epsilon(1e-7));
}

TEST_CASE("bernstein_envelope") {
  for (int n : {1, 5, 40}) CHECK(bernstein_envelope(n, 0.0) == Approx(1.0));
  CHECK(bernstein_envelope(0, 1.0) == Approx(0.8862269255).epsilon(1e-10));
  CHECK(bernstein_envelope(4, 0.99) ==
        Approx(std::sqrt(std::numbers::pi / 2 * 4.5)).epsilon(1e-14));
  // The envelope dominates |P_n|.
  for (int n : {3, 10, 50}) {
    for (double x = -1.0; x <= 1.0; x += 0.01) {
      CHECK(std::abs(legendre_eval(n, x)) <= bernstein_envelope(n, x) + 1e-14);
    }
  }
}

TEST_CASE("Dirichlet kernel") {
  CHECK(dirichlet_kernel_sum(0, 0.3, -0.7) == Approx(0.5));
  CHECK(dirichlet_kernel_sum(1, 1.0, 1.0) == Approx(2.0));
  CHECK(dirichlet_kernel_sum(5, 0.3, -0.2) ==
        Approx(-0.0713757378).epsilon(1e-13));
  CHECK(dirichlet_kernel_cd(0, 0.7, -0.1) == Approx(0.5));
  CHECK(dirichlet_kernel_cd(1, 1.0, 1.0) == Approx(2.0));
  CHECK(dirichlet_kernel_cd(30, 0.3, -0.7) ==
        Approx(0.24131689378003742055).epsilon(1e-12));
  CHECK(dirichlet_kernel_sum(30, 0.3, -0.7) ==
        Approx(0.24131689378003742055).epsilon(1e-13));
  // Close to the diagonal the quotient hands over to the sum.
  CHECK(dirichlet_kernel_cd(40, 0.2, 0.2 + 1e-9) ==
        Approx(13.205908505305629215).epsilon(1e-12));
}
