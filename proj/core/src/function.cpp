#include "legapprox/function.hpp"

#include <sstream>

#include "legapprox/error.hpp"

namespace legapprox {

namespace {
template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;
}  // namespace

std::string describe(const Smoothness& s) {
  std::ostringstream os;
  std::visit(overloaded{
                 [&](const smoothness::Analytic& a) {
                   os << "analytic(rho~" << a.rho_est << ")";
                 },
                 [&](const smoothness::Cm& c) {
                   if (c.m == smoothness::Cm::kInfinite) {
                     os << "C^inf";
                   } else {
                     os << "C^" << c.m;
                   }
                 },
                 [&](const smoothness::PiecewiseAnalytic&) {
                   os << "piecewise-analytic";
                 },
                 [&](const smoothness::FractionalInterior& f) {
                   os << "fractional-interior(alpha=" << f.alpha
                      << ", x0=" << f.x0 << ")";
                 },
                 [&](const smoothness::FractionalEndpoint& f) {
                   os << "fractional-endpoint(alpha=" << f.alpha << ", "
                      << (f.side == EndpointSide::Plus ? "1+x" : "1-x") << ")";
                 },
             },
             s);
  return os.str();
}

void validate_breakpoints(const std::vector<double>& breakpoints) {
  double prev = -1.0;
  for (double b : breakpoints) {
    if (!(b > prev && b < 1.0)) {
      throw DomainError(
          "breakpoints must be strictly increasing inside (-1, 1)");
    }
    prev = b;
  }
}

FunctionSpec FunctionSpec::make(std::string label,
                                std::function<double(double)> f,
                                std::vector<double> breakpoints,
                                Smoothness smoothness) {
  validate_breakpoints(breakpoints);
  FunctionSpec spec;
  spec.label = std::move(label);
  spec.eval = std::move(f);
  spec.breakpoints = std::move(breakpoints);
  spec.smoothness = smoothness;
  if (const auto* e = std::get_if<smoothness::FractionalEndpoint>(&smoothness)) {
    spec.singular_lower = e->side == EndpointSide::Plus;
    spec.singular_upper = e->side == EndpointSide::Minus;
  }
  return spec;
}

}  // namespace legapprox
