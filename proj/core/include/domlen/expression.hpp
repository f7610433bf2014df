#pragma once

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

namespace domlen {

class ExpressionError : public std::runtime_error {
 public:
  ExpressionError(const std::string& what, std::size_t position)
      : std::runtime_error(what), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Arithmetic expression in the variables x and t.
///
/// Grammar: numbers, x, t, pi, + - * / ^ (right associative, binds tighter
/// than unary minus), sin(...), cos(...) and parentheses.
class Expression {
 public:
  static Expression parse(std::string_view text);

  double operator()(double x, double t) const;
  double of_x(double x) const { return (*this)(x, 0.0); }
  double of_t(double t) const { return (*this)(0.0, t); }

  const std::string& source() const noexcept { return source_; }
  bool uses_x() const noexcept;
  bool uses_t() const noexcept;

  struct Node;

 private:
  Expression(std::string source, std::shared_ptr<const Node> root)
      : source_(std::move(source)), root_(std::move(root)) {}

  std::string source_;
  std::shared_ptr<const Node> root_;
};

}  // namespace domlen
