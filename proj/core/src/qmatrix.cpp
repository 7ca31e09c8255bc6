#include "qcoord/qmatrix.hpp"

#include <stdexcept>

namespace qcoord {

RMatrix r_matrix(int n) {
  if (n < 1) throw std::invalid_argument("rank must be >= 1");
  RMatrix r;
  r.n = n;
  const LaurentScalar prefactor = LaurentScalar::v(-2);  // q^{-1/n}
  const LaurentScalar q_minus_qinv = q_power(n, 1) - q_power(n, -1);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int l = 1; l <= n; ++l)
        for (int k = 1; k <= n; ++k) {
          LaurentScalar e;
          if (j == k && i == l) e += q_power(n, i == j ? 1 : 0);
          if (j < i && j == l && i == k) e += q_minus_qinv;
          if (!e.is_zero()) r.entries.emplace(std::array<int, 4>{i, j, l, k}, prefactor * e);
        }
  return r;
}

std::vector<NcPolynomial<LaurentScalar>> raw_frt_relations(int n) {
  RMatrix r = r_matrix(n);
  const LaurentScalar cancel = LaurentScalar::v(2);
  auto word = [n](int a, int b, int c, int d) {
    return NcMonomial::from_pairs(n, {{a, b}, {c, d}});
  };
  std::vector<NcPolynomial<LaurentScalar>> out;
  // Entry ((i,k),(j,l)) of (u⊗u)R - R(u⊗u), where (u⊗u)^{ik}_{jl} = u_ij u_kl.
  // R^{ij}_{lk} sits in row pair (j,i) and column pair (l,k). This is the
  // placement for which det_q with (-q)^{l(sigma)} is central.
  for (int i = 1; i <= n; ++i)
    for (int k = 1; k <= n; ++k)
      for (int j = 1; j <= n; ++j)
        for (int l = 1; l <= n; ++l) {
          NcPolynomial<LaurentScalar> rel;
          for (int a = 1; a <= n; ++a)
            for (int b = 1; b <= n; ++b) {
              LaurentScalar right = r.at(b, a, j, l);
              if (!right.is_zero()) rel.add_term(word(i, a, k, b), cancel * right);
              LaurentScalar left = r.at(k, i, a, b);
              if (!left.is_zero()) rel.add_term(word(a, j, b, l), -(cancel * left));
            }
          if (!rel.is_zero()) out.push_back(std::move(rel));
        }
  return out;
}

namespace {

NcPolynomial<LaurentScalar> primitive_part(const NcPolynomial<LaurentScalar>& p) {
  LaurentScalar g;
  for (const auto& [m, c] : p.terms()) g = gcd(g, c);
  NcPolynomial<LaurentScalar> out;
  for (const auto& [m, c] : p.terms()) out.add_term(m, exact_divide(c, g));
  return out;
}

RewriteSystem<LaurentScalar> complete_rules(int n, const std::vector<NcPolynomial<LaurentScalar>>& raw,
                                            bool memoize) {
  RewriteSystem<LaurentScalar> sys(n, n * n, LaurentScalar(1L), {memoize});
  std::vector<NcPolynomial<LaurentScalar>> pending = raw;
  while (!pending.empty()) {
    std::vector<NcPolynomial<LaurentScalar>> deferred;
    bool progress = false;
    for (const auto& rel : pending) {
      NcPolynomial<LaurentScalar> reduced = sys.normal_form(rel);
      if (reduced.is_zero()) continue;
      reduced = primitive_part(reduced);
      const LaurentScalar& lead = reduced.leading_coefficient();
      if (!lead.is_unit()) {
        deferred.push_back(reduced);
        continue;
      }
      reduced = reduced.scaled(lead.inverse());
      NcMonomial lhs = reduced.leading_monomial();
      if (lhs.degree() != 2) throw std::logic_error("FRT relation with non-quadratic leading word");
      NcPolynomial<LaurentScalar> rhs = -(reduced - NcPolynomial<LaurentScalar>(lhs, LaurentScalar(1L)));
      sys.add_rule(lhs, rhs);
      sys.interreduce();
      progress = true;
    }
    if (!deferred.empty() && !progress)
      throw std::logic_error("rule completion stalled: leading coefficient " +
                             deferred.front().leading_coefficient().to_string() + " is not a unit");
    pending = std::move(deferred);
  }
  for (const auto& rel : raw)
    if (!sys.normal_form(rel).is_zero())
      throw std::logic_error("completion inconsistency: relation " + rel.to_string(n) + " does not reduce to 0");
  return sys;
}

}  // namespace

std::vector<NcPolynomial<LaurentScalar>> frt_relations(int n) {
  RewriteSystem<LaurentScalar> sys = complete_rules(n, raw_frt_relations(n), false);
  std::vector<NcPolynomial<LaurentScalar>> out;
  for (const auto& [lhs, rhs] : sys.rules()) out.push_back(NcPolynomial<LaurentScalar>(lhs, LaurentScalar(1L)) - rhs);
  return out;
}

NcPolynomial<LaurentScalar> quantum_minor(int n, const std::set<int>& removed_rows, const std::set<int>& removed_cols) {
  if (removed_rows.size() != removed_cols.size())
    throw std::invalid_argument("quantum_minor: removed row and column sets differ in size");
  std::vector<int> rows, cols;
  for (int i = 1; i <= n; ++i) {
    if (!removed_rows.count(i)) rows.push_back(i);
    if (!removed_cols.count(i)) cols.push_back(i);
  }
  for (int r : removed_rows)
    if (r < 1 || r > n) throw std::invalid_argument("quantum_minor: row index out of range");
  for (int c : removed_cols)
    if (c < 1 || c > n) throw std::invalid_argument("quantum_minor: column index out of range");
  const int k = static_cast<int>(rows.size());
  NcPolynomial<LaurentScalar> out;
  Permutation sigma(k);
  do {
    std::vector<std::pair<int, int>> pairs;
    for (int t = 0; t < k; ++t) pairs.emplace_back(rows[static_cast<std::size_t>(t)], cols[static_cast<std::size_t>(sigma(t + 1) - 1)]);
    int len = sigma.length();
    out.add_term(NcMonomial::from_pairs(n, pairs), LaurentScalar::monomial(len % 2 ? -1 : 1, 2 * n * len));
  } while (sigma.next());
  return out;
}

NcPolynomial<LaurentScalar> quantum_det(int n, DetForm form) {
  if (n < 1) throw std::invalid_argument("rank must be >= 1");
  if (form == DetForm::column) return quantum_minor(n, {}, {});
  NcPolynomial<LaurentScalar> out;
  Permutation sigma(n);
  do {
    std::vector<std::pair<int, int>> pairs;
    for (int t = 1; t <= n; ++t) pairs.emplace_back(sigma(t), t);
    int len = sigma.length();
    out.add_term(NcMonomial::from_pairs(n, pairs), LaurentScalar::monomial(len % 2 ? -1 : 1, 2 * n * len));
  } while (sigma.next());
  return out;
}

QMatrixAlgebra<LaurentScalar> build_algebra(int n, bool memoize) {
  if (n < 1) throw std::invalid_argument("rank must be >= 1");
  std::vector<NcPolynomial<LaurentScalar>> raw = raw_frt_relations(n);
  RewriteSystem<LaurentScalar> sys = complete_rules(n, raw, memoize);
  return {n, std::move(sys), std::move(raw), [](const LaurentScalar& x) { return x; }};
}

QMatrixAlgebra<CyclotomicScalar> build_algebra_at_root(int n, int m, bool memoize) {
  QMatrixAlgebra<LaurentScalar> generic = build_algebra(n, false);
  auto embed = [m](const LaurentScalar& x) { return specialize(x, m); };
  RewriteSystem<CyclotomicScalar> sys(n, n * n, CyclotomicScalar(m, Rational(1)), {memoize});
  for (const auto& [lhs, rhs] : generic.system().rules())
    sys.add_rule(lhs, map_coefficients<CyclotomicScalar>(rhs, embed));
  std::vector<NcPolynomial<CyclotomicScalar>> rels;
  for (const auto& r : generic.relations()) {
    auto s = map_coefficients<CyclotomicScalar>(r, embed);
    if (!s.is_zero()) rels.push_back(std::move(s));
  }
  return {n, std::move(sys), std::move(rels), embed};
}

}  // namespace qcoord
