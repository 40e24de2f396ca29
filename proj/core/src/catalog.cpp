#include <cmath>
#include <complex>
#include <numbers>

#include "legapprox/error.hpp"
#include "legapprox/expr.hpp"
#include "legapprox/harness.hpp"

namespace legapprox {

namespace {

using cplx = std::complex<double>;
namespace sm = smoothness;

double heaviside(double x) { return x > 0.0 ? 1.0 : 0.0; }

// Windows are the observed asymptotic ranges widened for grid effects.
constexpr Interval kFig1RatioT{0.55, 0.75};
constexpr Interval kFig4Ratio{0.40, 0.55};
constexpr Interval kFig5RatioP{0.13, 0.33};
constexpr Interval kFig5RatioT{0.40, 0.53};

std::vector<FunctionCatalogEntry> build() {
  std::vector<FunctionCatalogEntry> c;
  c.reserve(16);
  const auto add = [&](std::string id, FunctionSpec spec, FigureTag fig) {
    FunctionCatalogEntry e;
    e.id = std::move(id);
    e.spec = std::move(spec);
    e.figure = fig;
    c.push_back(std::move(e));
    return &c.back();
  };

  // Analytic: the Bernstein parameter is set by the nearest singularity.
  {
    auto s = FunctionSpec::make(
        "exp(x^5)", [](double x) { return std::exp(std::pow(x, 5)); }, {},
        sm::Analytic{});
    s.with_complex([](cplx z) { return std::exp(std::pow(z, 5)); });
    add("exp_x5", std::move(s), FigureTag::Fig1)->ratio_window_T = kFig1RatioT;
  }
  {
    auto s = FunctionSpec::make(
        "ln(1.2+x)", [](double x) { return std::log(1.2 + x); }, {},
        sm::Analytic{1.2 + std::sqrt(0.44)});
    s.with_complex([](cplx z) { return std::log(1.2 + z); });
    add("log_shift", std::move(s), FigureTag::Fig1)->ratio_window_T =
        kFig1RatioT;
  }
  {
    auto s = FunctionSpec::make(
        "1/(1+4x^2)", [](double x) { return 1.0 / (1.0 + 4.0 * x * x); }, {},
        sm::Analytic{0.5 + std::sqrt(1.25)});
    s.with_complex([](cplx z) { return 1.0 / (1.0 + 4.0 * z * z); });
    add("runge", std::move(s), FigureTag::Fig1)->ratio_window_T = kFig1RatioT;
  }

  add("flat_exp",
      FunctionSpec::make(
          "exp(-1/x^2)",
          [](double x) { return x == 0.0 ? 0.0 : std::exp(-1.0 / (x * x)); },
          {0.0}, sm::Cm{sm::Cm::kInfinite}),
      FigureTag::Fig2);
  {
    auto* e = add("spline3",
                  FunctionSpec::make(
                      "(x-1/2)_+^3",
                      [](double x) { return x > 0.5 ? std::pow(x - 0.5, 3) : 0.0; },
                      {0.5}, sm::Cm{3}),
                  FigureTag::Fig2);
    e->expected_rate = -3.0;
    e->bv_order = 3;
    e->bv_derivative = [](double x) { return 6.0 * heaviside(x - 0.5); };
  }
  {
    constexpr double z = std::numbers::pi / 5.0;
    auto* e = add("abs_sin5",
                  FunctionSpec::make(
                      "|sin(5x)|",
                      [](double x) { return std::abs(std::sin(5.0 * x)); },
                      {-z, 0.0, z}, sm::Cm{1}),
                  FigureTag::Fig2);
    e->expected_rate = -1.0;
    e->bv_order = 1;
    e->bv_derivative = [](double x) {
      const double s = std::sin(5.0 * x);
      return s == 0.0 ? 0.0 : std::copysign(5.0 * std::cos(5.0 * x), s);
    };
  }

  {
    auto* e = add("spline1",
                  FunctionSpec::make(
                      "(x-1/2)_+",
                      [](double x) { return x > 0.5 ? x - 0.5 : 0.0; }, {0.5},
                      sm::Cm{1}),
                  FigureTag::Fig3);
    e->expected_rate = -1.0;
    e->bv_order = 1;
    e->bv_derivative = [](double x) { return heaviside(x - 0.5); };
  }

  const auto interior = [&](std::string id, std::string label, double alpha,
                            double x0) {
    auto* e = add(std::move(id),
                  FunctionSpec::make(
                      std::move(label),
                      [alpha, x0](double x) {
                        return std::pow(std::abs(x - x0), alpha);
                      },
                      {x0}, sm::FractionalInterior{alpha, x0}),
                  FigureTag::Fig4);
    e->expected_rate = -alpha;
    e->ratio_window_P = kFig4Ratio;
    e->ratio_window_T = kFig4Ratio;
  };
  interior("frac_half", "|x-1/2|^(5/2)", 2.5, 0.5);
  interior("frac_four_fifths", "|x-4/5|^(5/4)", 1.25, 0.8);
  interior("frac_origin", "|x|^(2/3)", 2.0 / 3.0, 0.0);

  const auto endpoint = [&](std::string id, FunctionSpec spec, double rate) {
    auto* e = add(std::move(id), std::move(spec), FigureTag::Fig5);
    e->expected_rate = rate;
    e->ratio_window_P = kFig5RatioP;
    e->ratio_window_T = kFig5RatioT;
  };
  endpoint("endpoint_five_halves",
           FunctionSpec::make(
               "(1+x)^(5/2)", [](double x) { return std::pow(1.0 + x, 2.5); },
               {}, sm::FractionalEndpoint{2.5, EndpointSide::Plus}),
           -5.0);
  {
    auto s = FunctionSpec::make(
        "(1-x^2)^(3/2)",
        [](double x) { return std::pow((1.0 - x) * (1.0 + x), 1.5); }, {},
        sm::FractionalEndpoint{1.5, EndpointSide::Minus});
    s.singular_lower = true;
    endpoint("semicircle_power", std::move(s), -3.0);
  }
  {
    auto s = FunctionSpec::make(
        "arccos(x)", [](double x) { return std::acos(x); }, {},
        sm::FractionalEndpoint{0.5, EndpointSide::Minus});
    s.singular_lower = true;
    endpoint("arccos", std::move(s), -1.0);
  }
  return c;
}

}  // namespace

const std::vector<FunctionCatalogEntry>& catalog() {
  static const std::vector<FunctionCatalogEntry> entries = build();
  return entries;
}

const FunctionCatalogEntry* find_entry(std::string_view name) {
  for (const auto& e : catalog()) {
    if (e.id == name || e.spec.label == name) return &e;
  }
  return nullptr;
}

FunctionSpec resolve_function(std::string_view name_or_expr) {
  if (const auto* e = find_entry(name_or_expr)) return e->spec;
  return function_from_expression(name_or_expr);
}

}  // namespace legapprox
