#pragma once

#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "qcoord/frobenius.hpp"
#include "qcoord/laurent.hpp"
#include "qcoord/ncalg.hpp"

namespace qcoord::cli {

/// Error raised while parsing; `position` is a 0-based offset into the input.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::invalid_argument(message + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Expression tree. q never appears: it is stored as v^(2n).
struct Expr {
  enum class Kind { number, v, generator, commuting, add, sub, mul, neg, pow };

  Kind kind = Kind::number;
  Integer value = 0;  ///< number
  int row = 0;        ///< generator / commuting
  int col = 0;
  int exponent = 0;   ///< pow
  std::vector<std::shared_ptr<const Expr>> children;

  bool mentions(Kind k) const;
  friend bool operator==(const Expr& a, const Expr& b);
};

using ExprPtr = std::shared_ptr<const Expr>;

/// Grammar, loosest first: sums and differences, products, unary minus, ^ with
/// an integer literal exponent, then atoms u[i,j], x[i,j], v, q, integers and
/// parentheses. Indices are checked against 1..n; negative exponents are only
/// accepted on subexpressions free of u and x.
ExprPtr parse_expression(const std::string& text, int n);

/// Fully parenthesized rendering that parses back to an equal tree.
std::string print_expression(const Expr& e);

/// Evaluates a u-expression in the free algebra, passing every product and
/// power through `reduce`. Throws std::invalid_argument if x[i,j] occurs or a
/// negative power of a non-unit scalar is requested.
template <class S>
NcPolynomial<S> evaluate(const Expr& e, int n, const std::function<S(const LaurentScalar&)>& embed,
                         const std::function<NcPolynomial<S>(const NcPolynomial<S>&)>& reduce);

/// Evaluates an x-expression with rational coefficients. Throws
/// std::invalid_argument if u[i,j] or v occurs, or on a negative power.
CommutativeSlnPoly evaluate_commutative(const Expr& e, int n);

/// The scalar value of an expression free of generators.
LaurentScalar evaluate_scalar(const Expr& e);

}  // namespace qcoord::cli

#include "qcoord/cli/expression_eval.hpp"
