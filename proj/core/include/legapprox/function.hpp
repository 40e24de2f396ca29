#pragma once

#include <complex>
#include <functional>
#include <limits>
#include <string>
#include <variant>
#include <vector>

namespace legapprox {

enum class EndpointSide { Plus, Minus };  // Plus: (1+x)^a, Minus: (1-x)^a

namespace smoothness {

/// rho_est: Bernstein parameter of the nearest singularity (infinity for
/// entire functions or when unknown).
struct Analytic {
  double rho_est = std::numeric_limits<double>::infinity();
};
/// f^(m-1) absolutely continuous and f^(m) of bounded variation (so
/// (x-1/2)_+^3 has m = 3); m == kInfinite marks C^infinity functions that
/// are not analytic.
struct Cm {
  static constexpr int kInfinite = std::numeric_limits<int>::max();
  int m = 0;
};
struct PiecewiseAnalytic {};
struct FractionalInterior {
  double alpha = 0.5;
  double x0 = 0.0;
};
struct FractionalEndpoint {
  double alpha = 0.5;
  EndpointSide side = EndpointSide::Plus;
};

}  // namespace smoothness

using Smoothness =
    std::variant<smoothness::Analytic, smoothness::Cm,
                 smoothness::PiecewiseAnalytic, smoothness::FractionalInterior,
                 smoothness::FractionalEndpoint>;

std::string describe(const Smoothness& s);

/// Target function on [-1, 1].
///
/// The evaluator must be safe to call concurrently. Breakpoints are the
/// interior points where analyticity fails; quadrature splits there and the
/// error assessment grid clusters there. singular_lower / singular_upper
/// request graded quadrature towards x = -1 / x = +1. The optional complex
/// evaluator is needed only for bounds that sample a Bernstein ellipse.
struct FunctionSpec {
  std::string label;
  std::function<double(double)> eval;
  std::function<std::complex<double>(std::complex<double>)> eval_complex;
  std::vector<double> breakpoints;
  Smoothness smoothness = smoothness::Analytic{};
  bool singular_lower = false;
  bool singular_upper = false;

  double operator()(double x) const { return eval(x); }
  [[nodiscard]] bool has_complex() const {
    return static_cast<bool>(eval_complex);
  }

  /// Validates breakpoints (strictly increasing inside (-1, 1)) and derives
  /// the endpoint grading flags from the smoothness class.
  static FunctionSpec make(std::string label, std::function<double(double)> f,
                           std::vector<double> breakpoints = {},
                           Smoothness smoothness = smoothness::Analytic{});

  FunctionSpec& with_complex(
      std::function<std::complex<double>(std::complex<double>)> fc) {
    eval_complex = std::move(fc);
    return *this;
  }
};

/// Throws DomainError unless the breakpoints are strictly increasing and
/// inside the open interval (-1, 1).
void validate_breakpoints(const std::vector<double>& breakpoints);

}  // namespace legapprox
