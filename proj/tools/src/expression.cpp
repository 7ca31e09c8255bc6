#include "qcoord/cli/expression.hpp"

#include <cctype>

namespace qcoord::cli {

bool Expr::mentions(Kind k) const {
  if (kind == k) return true;
  for (const auto& c : children)
    if (c->mentions(k)) return true;
  return false;
}

bool operator==(const Expr& a, const Expr& b) {
  if (a.kind != b.kind || a.value != b.value || a.row != b.row || a.col != b.col || a.exponent != b.exponent ||
      a.children.size() != b.children.size())
    return false;
  for (std::size_t i = 0; i < a.children.size(); ++i)
    if (!(*a.children[i] == *b.children[i])) return false;
  return true;
}

namespace {

ExprPtr make(Expr::Kind kind, std::vector<ExprPtr> children = {}) {
  auto e = std::make_shared<Expr>();
  e->kind = kind;
  e->children = std::move(children);
  return e;
}

class Parser {
 public:
  Parser(const std::string& text, int n) : text_(text), n_(n) {}

  ExprPtr parse() {
    ExprPtr e = sum();
    skip_space();
    if (pos_ != text_.size()) throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    return e;
  }

 private:
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
    if (!accept(c)) {
      if (pos_ >= text_.size()) throw ParseError(std::string("expected '") + c + "' but input ended", pos_);
      throw ParseError(std::string("expected '") + c + "'", pos_);
    }
  }

  Integer integer_literal() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected an integer", start);
    return Integer(text_.substr(start, pos_ - start));
  }

  int small_integer() {
    std::size_t start = pos_;
    Integer v = integer_literal();
    if (!v.fits_sint_p() || v > 100000) throw ParseError("integer too large", start);
    return static_cast<int>(v.get_si());
  }

  ExprPtr sum() {
    ExprPtr left = product();
    for (;;) {
      if (accept('+')) {
        left = make(Expr::Kind::add, {left, product()});
      } else if (accept('-')) {
        left = make(Expr::Kind::sub, {left, product()});
      } else {
        return left;
      }
    }
  }

  ExprPtr product() {
    ExprPtr left = unary();
    while (accept('*')) left = make(Expr::Kind::mul, {left, unary()});
    return left;
  }

  ExprPtr unary() {
    if (accept('-')) return make(Expr::Kind::neg, {unary()});
    return power();
  }

  ExprPtr power() {
    ExprPtr base = atom();
    skip_space();
    std::size_t at = pos_;
    if (!accept('^')) return base;
    bool negative = accept('-');
    int k = small_integer();
    if (negative && (base->mentions(Expr::Kind::generator) || base->mentions(Expr::Kind::commuting)))
      throw ParseError("negative exponent on a noncommutative generator", at);
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::pow;
    e->exponent = negative ? -k : k;
    e->children = {base};
    return e;
  }

  ExprPtr indexed(Expr::Kind kind) {
    std::size_t at = pos_;
    expect('[');
    int i = small_integer();
    expect(',');
    int j = small_integer();
    expect(']');
    if (i < 1 || i > n_ || j < 1 || j > n_)
      throw ParseError("index [" + std::to_string(i) + "," + std::to_string(j) + "] out of range 1.." + std::to_string(n_), at);
    auto e = std::make_shared<Expr>();
    e->kind = kind;
    e->row = i;
    e->col = j;
    return e;
  }

  ExprPtr atom() {
    skip_space();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      ExprPtr e = sum();
      expect(')');
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      auto e = std::make_shared<Expr>();
      e->kind = Expr::Kind::number;
      e->value = integer_literal();
      return e;
    }
    ++pos_;
    switch (c) {
      case 'u':
        return indexed(Expr::Kind::generator);
      case 'x':
        return indexed(Expr::Kind::commuting);
      case 'v':
        return make(Expr::Kind::v);
      case 'q': {
        auto e = std::make_shared<Expr>();
        e->kind = Expr::Kind::pow;
        e->exponent = 2 * n_;
        e->children = {make(Expr::Kind::v)};
        return e;
      }
      default:
        throw ParseError(std::string("unexpected '") + c + "'", pos_ - 1);
    }
  }

  const std::string& text_;
  int n_;
  std::size_t pos_ = 0;
};

}  // namespace

ExprPtr parse_expression(const std::string& text, int n) {
  if (n < 1) throw std::invalid_argument("rank must be >= 1");
  return Parser(text, n).parse();
}

std::string print_expression(const Expr& e) {
  auto child = [&](std::size_t i) { return print_expression(*e.children[i]); };
  switch (e.kind) {
    case Expr::Kind::number:
      return e.value.get_str();
    case Expr::Kind::v:
      return "v";
    case Expr::Kind::generator:
      return "u[" + std::to_string(e.row) + "," + std::to_string(e.col) + "]";
    case Expr::Kind::commuting:
      return "x[" + std::to_string(e.row) + "," + std::to_string(e.col) + "]";
    case Expr::Kind::add:
      return "(" + child(0) + " + " + child(1) + ")";
    case Expr::Kind::sub:
      return "(" + child(0) + " - " + child(1) + ")";
    case Expr::Kind::mul:
      return "(" + child(0) + " * " + child(1) + ")";
    case Expr::Kind::neg:
      return "(-" + child(0) + ")";
    case Expr::Kind::pow:
      return "(" + child(0) + "^" + std::to_string(e.exponent) + ")";
  }
  return {};
}

LaurentScalar evaluate_scalar(const Expr& e) {
  auto child = [&](std::size_t i) { return evaluate_scalar(*e.children[i]); };
  switch (e.kind) {
    case Expr::Kind::number:
      return LaurentScalar(Rational(e.value));
    case Expr::Kind::v:
      return LaurentScalar::v(1);
    case Expr::Kind::add:
      return child(0) + child(1);
    case Expr::Kind::sub:
      return child(0) - child(1);
    case Expr::Kind::mul:
      return child(0) * child(1);
    case Expr::Kind::neg:
      return -child(0);
    case Expr::Kind::pow: {
      LaurentScalar base = child(0);
      if (e.exponent < 0 && !base.is_unit()) throw std::invalid_argument("negative power of a non-unit scalar");
      return base.pow(e.exponent);
    }
    default:
      throw std::invalid_argument("expression is not a scalar");
  }
}

CommutativeSlnPoly evaluate_commutative(const Expr& e, int n) {
  auto rec = [&](std::size_t i) { return evaluate_commutative(*e.children[i], n); };
  switch (e.kind) {
    case Expr::Kind::number:
      return CommutativeSlnPoly::constant(n, Rational(e.value));
    case Expr::Kind::commuting:
      return CommutativeSlnPoly::variable(n, e.row, e.col);
    case Expr::Kind::v:
      throw std::invalid_argument("v has no meaning in O(SLn)");
    case Expr::Kind::generator:
      throw std::invalid_argument("u[i,j] cannot be mixed into an x-expression");
    case Expr::Kind::add:
      return rec(0) + rec(1);
    case Expr::Kind::sub:
      return rec(0) - rec(1);
    case Expr::Kind::mul:
      return rec(0) * rec(1);
    case Expr::Kind::neg:
      return CommutativeSlnPoly::constant(n, -1) * rec(0);
    case Expr::Kind::pow: {
      if (e.exponent < 0) throw std::invalid_argument("negative exponent in an x-expression");
      CommutativeSlnPoly base = rec(0);
      CommutativeSlnPoly out = CommutativeSlnPoly::constant(n, 1);
      for (int k = 0; k < e.exponent; ++k) out = out * base;
      return out;
    }
  }
  return CommutativeSlnPoly(n);
}

}  // namespace qcoord::cli
