#include "domlen/expression.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>
#include <vector>

namespace domlen {

struct Expression::Node {
  enum class Kind { Number, X, T, Neg, Add, Sub, Mul, Div, Pow, Sin, Cos };
  Kind kind;
  double number = 0.0;
  std::shared_ptr<const Node> lhs;
  std::shared_ptr<const Node> rhs;
};

namespace {

using Node = Expression::Node;
using NodePtr = std::shared_ptr<const Node>;

NodePtr leaf(Node::Kind kind, double value = 0.0) {
  return std::make_shared<const Node>(Node{kind, value, nullptr, nullptr});
}

NodePtr unary(Node::Kind kind, NodePtr arg) {
  return std::make_shared<const Node>(Node{kind, 0.0, std::move(arg), nullptr});
}

NodePtr binary(Node::Kind kind, NodePtr lhs, NodePtr rhs) {
  return std::make_shared<const Node>(Node{kind, 0.0, std::move(lhs), std::move(rhs)});
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  NodePtr parse() {
    NodePtr root = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return root;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ExpressionError(what + " at column " + std::to_string(pos_ + 1), pos_);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
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
        lhs = binary(Node::Kind::Add, lhs, term());
      } else if (accept('-')) {
        lhs = binary(Node::Kind::Sub, lhs, term());
      } else {
        return lhs;
      }
    }
  }

  NodePtr term() {
    NodePtr lhs = signed_factor();
    for (;;) {
      if (accept('*')) {
        lhs = binary(Node::Kind::Mul, lhs, signed_factor());
      } else if (accept('/')) {
        lhs = binary(Node::Kind::Div, lhs, signed_factor());
      } else {
        return lhs;
      }
    }
  }

  NodePtr signed_factor() {
    if (accept('-')) return unary(Node::Kind::Neg, signed_factor());
    if (accept('+')) return signed_factor();
    return power();
  }

  NodePtr power() {
    NodePtr base = primary();
    if (accept('^')) return binary(Node::Kind::Pow, base, signed_factor());
    return base;
  }

  NodePtr primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t begin = pos_;
      while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      const std::string_view name = text_.substr(begin, pos_ - begin);
      if (name == "x") return leaf(Node::Kind::X);
      if (name == "t") return leaf(Node::Kind::T);
      if (name == "pi") return leaf(Node::Kind::Number, std::numbers::pi);
      if (name == "sin" || name == "cos") {
        expect('(');
        NodePtr arg = expr();
        expect(')');
        return unary(name == "sin" ? Node::Kind::Sin : Node::Kind::Cos, arg);
      }
      pos_ = begin;
      fail("unknown identifier '" + std::string(name) + "'");
    }
    if (accept('(')) {
      NodePtr inner = expr();
      expect(')');
      return inner;
    }
    fail(std::string("unexpected '") + c + "'");
  }

  NodePtr number() {
    std::size_t end = pos_;
    while (end < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[end])) ||
                                  text_[end] == '.')) {
      ++end;
    }
    if (end < text_.size() && (text_[end] == 'e' || text_[end] == 'E')) {
      std::size_t exp = end + 1;
      if (exp < text_.size() && (text_[exp] == '+' || text_[exp] == '-')) ++exp;
      if (exp < text_.size() && std::isdigit(static_cast<unsigned char>(text_[exp]))) {
        end = exp;
        while (end < text_.size() && std::isdigit(static_cast<unsigned char>(text_[end]))) ++end;
      }
    }
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + end, value);
    if (ec != std::errc() || ptr != text_.data() + end) fail("malformed number");
    pos_ = end;
    return leaf(Node::Kind::Number, value);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

double eval(const Node& n, double x, double t) {
  switch (n.kind) {
    case Node::Kind::Number: return n.number;
    case Node::Kind::X: return x;
    case Node::Kind::T: return t;
    case Node::Kind::Neg: return -eval(*n.lhs, x, t);
    case Node::Kind::Add: return eval(*n.lhs, x, t) + eval(*n.rhs, x, t);
    case Node::Kind::Sub: return eval(*n.lhs, x, t) - eval(*n.rhs, x, t);
    case Node::Kind::Mul: return eval(*n.lhs, x, t) * eval(*n.rhs, x, t);
    case Node::Kind::Div: return eval(*n.lhs, x, t) / eval(*n.rhs, x, t);
    case Node::Kind::Pow: {
      const double base = eval(*n.lhs, x, t);
      const double exponent = eval(*n.rhs, x, t);
      // Small integer powers by multiplication so that e.g. x^2 is exact.
      if (exponent == std::floor(exponent) && std::abs(exponent) <= 16.0) {
        const int k = static_cast<int>(std::abs(exponent));
        double r = 1.0;
        for (int i = 0; i < k; ++i) r *= base;
        return exponent < 0 ? 1.0 / r : r;
      }
      return std::pow(base, exponent);
    }
    case Node::Kind::Sin: return std::sin(eval(*n.lhs, x, t));
    case Node::Kind::Cos: return std::cos(eval(*n.lhs, x, t));
  }
  return 0.0;
}

bool mentions(const Node& n, Node::Kind var) {
  if (n.kind == var) return true;
  return (n.lhs && mentions(*n.lhs, var)) || (n.rhs && mentions(*n.rhs, var));
}

}  // namespace

Expression Expression::parse(std::string_view text) {
  Parser parser(text);
  NodePtr root = parser.parse();
  return Expression(std::string(text), std::move(root));
}

double Expression::operator()(double x, double t) const { return eval(*root_, x, t); }

bool Expression::uses_x() const noexcept { return mentions(*root_, Node::Kind::X); }
bool Expression::uses_t() const noexcept { return mentions(*root_, Node::Kind::T); }

}  // namespace domlen
