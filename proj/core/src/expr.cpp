#include "legapprox/expr.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>

#include "legapprox/error.hpp"

namespace legapprox {

enum class Op {
  Number, Var, Add, Sub, Mul, Div, Pow, Neg,
  Abs, Exp, Ln, Sin, Cos, Arccos, PosPart
};

struct Expression::Node {
  Op op = Op::Number;
  double value = 0.0;
  std::shared_ptr<const Node> lhs;
  std::shared_ptr<const Node> rhs;
};

namespace {

using NodePtr = std::shared_ptr<const Expression::Node>;

NodePtr leaf(Op op, double v = 0.0) {
  auto n = std::make_shared<Expression::Node>();
  n->op = op;
  n->value = v;
  return n;
}

NodePtr node(Op op, NodePtr a, NodePtr b = nullptr) {
  auto n = std::make_shared<Expression::Node>();
  n->op = op;
  n->lhs = std::move(a);
  n->rhs = std::move(b);
  return n;
}

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  NodePtr parse() {
    NodePtr e = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return e;
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("expression '" + std::string(s_) + "': " + what +
                     " at position " + std::to_string(pos_));
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) {
      ++pos_;
    }
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  NodePtr expr() {
    NodePtr lhs = term();
    for (;;) {
      if (accept('+')) {
        lhs = node(Op::Add, lhs, term());
      } else if (accept('-')) {
        lhs = node(Op::Sub, lhs, term());
      } else {
        return lhs;
      }
    }
  }

  NodePtr term() {
    NodePtr lhs = unary();
    for (;;) {
      if (accept('*')) {
        lhs = node(Op::Mul, lhs, unary());
      } else if (accept('/')) {
        lhs = node(Op::Div, lhs, unary());
      } else {
        return lhs;
      }
    }
  }

  NodePtr unary() {
    if (accept('-')) return node(Op::Neg, unary());
    if (accept('+')) return unary();
    return power();
  }

  NodePtr power() {
    NodePtr base = primary();
    if (accept('^')) return node(Op::Pow, base, unary());
    return base;
  }

  NodePtr primary() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (accept('(')) {
      NodePtr e = expr();
      expect(')');
      return e;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) {
        ++pos_;
      }
      const std::string_view name = s_.substr(start, pos_ - start);
      if (name == "x") return leaf(Op::Var);
      if (name == "pi") return leaf(Op::Number, std::numbers::pi);
      Op op{};
      if (name == "abs") {
        op = Op::Abs;
      } else if (name == "exp") {
        op = Op::Exp;
      } else if (name == "ln") {
        op = Op::Ln;
      } else if (name == "sin") {
        op = Op::Sin;
      } else if (name == "cos") {
        op = Op::Cos;
      } else if (name == "arccos") {
        op = Op::Arccos;
      } else if (name == "pospart") {
        op = Op::PosPart;
      } else {
        pos_ = start;
        fail("unknown identifier '" + std::string(name) + "'");
      }
      expect('(');
      NodePtr arg = expr();
      expect(')');
      return node(op, arg);
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  NodePtr number() {
    const std::string rest(s_.substr(pos_));
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(rest, &used);
    } catch (const std::exception&) {
      fail("malformed number");
    }
    pos_ += used;
    return leaf(Op::Number, v);
  }
};

double eval_real(const Expression::Node& n, double x) {
  switch (n.op) {
    case Op::Number: return n.value;
    case Op::Var: return x;
    case Op::Add: return eval_real(*n.lhs, x) + eval_real(*n.rhs, x);
    case Op::Sub: return eval_real(*n.lhs, x) - eval_real(*n.rhs, x);
    case Op::Mul: return eval_real(*n.lhs, x) * eval_real(*n.rhs, x);
    case Op::Div: return eval_real(*n.lhs, x) / eval_real(*n.rhs, x);
    case Op::Pow: return std::pow(eval_real(*n.lhs, x), eval_real(*n.rhs, x));
    case Op::Neg: return -eval_real(*n.lhs, x);
    case Op::Abs: return std::abs(eval_real(*n.lhs, x));
    case Op::Exp: return std::exp(eval_real(*n.lhs, x));
    case Op::Ln: return std::log(eval_real(*n.lhs, x));
    case Op::Sin: return std::sin(eval_real(*n.lhs, x));
    case Op::Cos: return std::cos(eval_real(*n.lhs, x));
    case Op::Arccos: return std::acos(std::clamp(eval_real(*n.lhs, x), -1.0, 1.0));
    case Op::PosPart: return std::max(eval_real(*n.lhs, x), 0.0);
  }
  return 0.0;
}

std::complex<double> eval_complex(const Expression::Node& n,
                                  std::complex<double> z) {
  using C = std::complex<double>;
  switch (n.op) {
    case Op::Number: return n.value;
    case Op::Var: return z;
    case Op::Add: return eval_complex(*n.lhs, z) + eval_complex(*n.rhs, z);
    case Op::Sub: return eval_complex(*n.lhs, z) - eval_complex(*n.rhs, z);
    case Op::Mul: return eval_complex(*n.lhs, z) * eval_complex(*n.rhs, z);
    case Op::Div: return eval_complex(*n.lhs, z) / eval_complex(*n.rhs, z);
    case Op::Pow: {
      const C e = eval_complex(*n.rhs, z);
      const C b = eval_complex(*n.lhs, z);
      if (e.imag() == 0.0 && std::floor(e.real()) == e.real() &&
          std::abs(e.real()) < 64) {
        // Integer powers stay single-valued.
        const int k = static_cast<int>(e.real());
        C r = 1.0;
        for (int i = 0; i < std::abs(k); ++i) r *= b;
        return k >= 0 ? r : C(1.0) / r;
      }
      return std::pow(b, e);
    }
    case Op::Neg: return -eval_complex(*n.lhs, z);
    case Op::Exp: return std::exp(eval_complex(*n.lhs, z));
    case Op::Ln: return std::log(eval_complex(*n.lhs, z));
    case Op::Sin: return std::sin(eval_complex(*n.lhs, z));
    case Op::Cos: return std::cos(eval_complex(*n.lhs, z));
    case Op::Arccos: return std::acos(eval_complex(*n.lhs, z));
    case Op::Abs:
    case Op::PosPart:
      throw DomainError("expression has no analytic continuation");
  }
  return 0.0;
}

bool contains_nonanalytic(const Expression::Node& n) {
  if (n.op == Op::Abs || n.op == Op::PosPart) return true;
  return (n.lhs && contains_nonanalytic(*n.lhs)) ||
         (n.rhs && contains_nonanalytic(*n.rhs));
}

bool is_integer_constant(const Expression::Node& n) {
  return n.op == Op::Number && std::floor(n.value) == n.value;
}

// Arguments whose interior zeros are kinks of the whole expression.
void collect_kink_arguments(const NodePtr& n, std::vector<NodePtr>& out) {
  if (!n) return;
  if (n->op == Op::Abs || n->op == Op::PosPart) out.push_back(n->lhs);
  if (n->op == Op::Pow && !is_integer_constant(*n->rhs)) out.push_back(n->lhs);
  collect_kink_arguments(n->lhs, out);
  collect_kink_arguments(n->rhs, out);
}

}  // namespace

Expression Expression::parse(std::string_view text) {
  Expression e;
  e.root_ = Parser(text).parse();
  e.text_ = std::string(text);
  return e;
}

double Expression::eval(double x) const { return eval_real(*root_, x); }

std::complex<double> Expression::eval(std::complex<double> z) const {
  return eval_complex(*root_, z);
}

bool Expression::analytic() const { return !contains_nonanalytic(*root_); }

std::vector<double> Expression::kinks() const {
  std::vector<NodePtr> args;
  collect_kink_arguments(root_, args);
  constexpr int kScan = 4000;
  std::vector<double> roots;
  for (const NodePtr& g : args) {
    const auto value = [&](double x) { return eval_real(*g, x); };
    double xa = -1.0;
    double ga = value(xa);
    for (int i = 1; i <= kScan; ++i) {
      const double xb = -1.0 + 2.0 * i / kScan;
      const double gb = value(xb);
      if (gb == 0.0) {
        roots.push_back(xb);
      } else if (ga != 0.0 && std::signbit(ga) != std::signbit(gb) &&
                 std::isfinite(ga) && std::isfinite(gb)) {
        double lo = xa;
        double hi = xb;
        for (int it = 0; it < 200 && hi - lo > 0.0; ++it) {
          const double mid = 0.5 * (lo + hi);
          if (mid == lo || mid == hi) break;
          if (std::signbit(value(mid)) == std::signbit(ga)) {
            lo = mid;
          } else {
            hi = mid;
          }
        }
        roots.push_back(0.5 * (lo + hi));
      }
      xa = xb;
      ga = gb;
    }
  }
  std::sort(roots.begin(), roots.end());
  std::vector<double> out;
  for (double r : roots) {
    if (r <= -1.0 + 1e-12 || r >= 1.0 - 1e-12) continue;
    if (!out.empty() && r - out.back() < 1e-12) continue;
    out.push_back(r);
  }
  return out;
}

FunctionSpec function_from_expression(std::string_view text) {
  const Expression e = Expression::parse(text);
  const auto breaks = e.kinks();
  Smoothness s = breaks.empty() ? Smoothness{smoothness::Analytic{}}
                                : Smoothness{smoothness::PiecewiseAnalytic{}};
  FunctionSpec spec = FunctionSpec::make(
      e.text(), [e](double x) { return e.eval(x); }, breaks, s);
  spec.singular_lower = true;
  spec.singular_upper = true;
  if (e.analytic()) {
    spec.eval_complex = [e](std::complex<double> z) { return e.eval(z); };
  }
  return spec;
}

}  // namespace legapprox
