#pragma once

#include <complex>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "legapprox/function.hpp"

namespace legapprox {

/// Parsed function expression in the variable x.
///
/// Grammar: numeric literals, x, pi, binary + - * / ^, unary minus,
/// parentheses and the functions abs, exp, ln, sin, cos, arccos, pospart.
/// ^ is right associative and binds tighter than unary minus.
class Expression {
 public:
  static Expression parse(std::string_view text);

  [[nodiscard]] double eval(double x) const;
  [[nodiscard]] std::complex<double> eval(std::complex<double> z) const;

  /// False when abs or pospart occurs (no analytic continuation).
  [[nodiscard]] bool analytic() const;

  /// Interior zeros of abs/pospart arguments and of bases raised to
  /// non-integer powers, located by sign scan plus bisection.
  [[nodiscard]] std::vector<double> kinks() const;

  [[nodiscard]] const std::string& text() const { return text_; }

  struct Node;

 private:
  std::shared_ptr<const Node> root_;
  std::string text_;
};

/// FunctionSpec backed by a parsed expression (graded at both endpoints).
FunctionSpec function_from_expression(std::string_view text);

}  // namespace legapprox
