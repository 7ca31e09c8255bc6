#pragma once

namespace qcoord::cli {

template <class S>
NcPolynomial<S> evaluate(const Expr& e, int n, const std::function<S(const LaurentScalar&)>& embed,
                         const std::function<NcPolynomial<S>(const NcPolynomial<S>&)>& reduce) {
  using Poly = NcPolynomial<S>;
  auto rec = [&](const Expr& sub) { return evaluate<S>(sub, n, embed, reduce); };
  if (!e.mentions(Expr::Kind::generator) && !e.mentions(Expr::Kind::commuting))
    return Poly::constant(embed(evaluate_scalar(e)));
  switch (e.kind) {
    case Expr::Kind::generator:
      return Poly(NcMonomial::generator(generator_code(n, e.row, e.col)), embed(LaurentScalar(1L)));
    case Expr::Kind::commuting:
      throw std::invalid_argument("x[i,j] cannot be mixed into a u-expression");
    case Expr::Kind::add:
      return rec(*e.children[0]) + rec(*e.children[1]);
    case Expr::Kind::sub:
      return rec(*e.children[0]) - rec(*e.children[1]);
    case Expr::Kind::neg:
      return -rec(*e.children[0]);
    case Expr::Kind::mul:
      return reduce(rec(*e.children[0]) * rec(*e.children[1]));
    case Expr::Kind::pow: {
      if (e.exponent < 0) throw std::invalid_argument("negative exponent on a noncommutative generator");
      Poly base = rec(*e.children[0]);
      Poly out = Poly::constant(embed(LaurentScalar(1L)));
      for (int k = 0; k < e.exponent; ++k) out = reduce(out * base);
      return out;
    }
    default:
      throw std::logic_error("unexpected expression node");
  }
}

}  // namespace qcoord::cli
