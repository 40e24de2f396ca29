#include <cmath>
#include <numbers>

#include <doctest.h>

#include "legapprox/error.hpp"
#include "legapprox/expr.hpp"

using namespace legapprox;
using doctest::Approx;

TEST_CASE("arithmetic and precedence") {
  CHECK(Expression::parse("1+2*3").eval(0.0) == 7.0);
  CHECK(Expression::parse("(1+2)*3").eval(0.0) == 9.0);
  CHECK(Expression::parse("2^3^2").eval(0.0) == 512.0);
  CHECK(Expression::parse("-x^2").eval(3.0) == -9.0);
  CHECK(Expression::parse("x/4-1").eval(2.0) == -0.5);
  CHECK(Expression::parse("1.5e-1*x").eval(2.0) == Approx(0.3));
  CHECK(Expression::parse("pi").eval(0.0) == std::numbers::pi);
}

TEST_CASE("functions") {
  const double x = 0.3;
  CHECK(Expression::parse("abs(x-0.5)").eval(x) == Approx(0.2));
  CHECK(Expression::parse("exp(x)").eval(x) == Approx(std::exp(x)));
  CHECK(Expression::parse("ln(1.2+x)").eval(x) == Approx(std::log(1.5)));
  CHECK(Expression::parse("sin(5*x)").eval(x) == Approx(std::sin(1.5)));
  CHECK(Expression::parse("cos(x)").eval(x) == Approx(std::cos(x)));
  CHECK(Expression::parse("arccos(x)").eval(x) == Approx(std::acos(x)));
  CHECK(Expression::parse("pospart(x-0.5)").eval(x) == 0.0);
  CHECK(Expression::parse("pospart(x-0.5)^3").eval(0.7) == Approx(0.008));
}

TEST_CASE("complex evaluation") {
  const auto e = Expression::parse("1/(1+4*x^2)");
  CHECK(e.analytic());
  const std::complex<double> z(0.3, 0.4);
  const auto v = e.eval(z);
  const auto w = 1.0 / (1.0 + 4.0 * z * z);
  CHECK(v.real() == Approx(w.real()));
  CHECK(v.imag() == Approx(w.imag()));
  const auto a = Expression::parse("abs(x)");
  CHECK_FALSE(a.analytic());
  CHECK_THROWS_AS((void)a.eval(z), DomainError);
}

TEST_CASE("kinks") {
  const auto k = Expression::parse("abs(sin(5*x))").kinks();
  REQUIRE(k.size() == 3);
  CHECK(k[0] == Approx(-std::numbers::pi / 5).epsilon(1e-12));
  CHECK(std::abs(k[1]) < 1e-12);
  CHECK(k[2] == Approx(std::numbers::pi / 5).epsilon(1e-12));
  const auto p = Expression::parse("abs(x-0.5)^2.5").kinks();
  REQUIRE(p.size() == 1);
  CHECK(p[0] == Approx(0.5).epsilon(1e-12));
  CHECK(Expression::parse("exp(x)").kinks().empty());
}

TEST_CASE("function_from_expression") {
  const auto f = function_from_expression("pospart(x-0.5)");
  CHECK(f.label == "pospart(x-0.5)");
  REQUIRE(f.breakpoints.size() == 1);
  CHECK(f.breakpoints[0] == Approx(0.5));
  CHECK(f(0.75) == Approx(0.25));
  CHECK_FALSE(f.has_complex());
  CHECK(function_from_expression("exp(x)").has_complex());
}

TEST_CASE("malformed input") {
  for (const char* bad : {"", "sin(x", "x+", "2**x", "foo(x)", "y", "1..2", "()"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(Expression::parse(bad), ParseError);
  }
}
