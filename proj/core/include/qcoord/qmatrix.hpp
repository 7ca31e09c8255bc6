#pragma once

#include <array>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <vector>

#include "qcoord/cyclotomic.hpp"
#include "qcoord/laurent.hpp"
#include "qcoord/ncalg.hpp"
#include "qcoord/permutation.hpp"

namespace qcoord {

/// The n^2 x n^2 R-matrix; entries(i,j,l,k) is R^{ij}_{lk}. Absent entries are zero.
struct RMatrix {
  int n = 1;
  std::map<std::array<int, 4>, LaurentScalar> entries;

  LaurentScalar at(int i, int j, int l, int k) const {
    auto it = entries.find({i, j, l, k});
    return it == entries.end() ? LaurentScalar() : it->second;
  }
};

/// R^{ij}_{lk} = q^{-1/n} (q^{[i=j]} [j=k][i=l] + (q - q^{-1}) [j<i] [j=l][i=k]).
RMatrix r_matrix(int n);

/// Entrywise expansion of (u⊗u)R - R(u⊗u) with the common q^{-1/n} cancelled.
/// Zero entries are dropped; nothing else is simplified.
std::vector<NcPolynomial<LaurentScalar>> raw_frt_relations(int n);

/// The independent relations: each raw relation reduced against the accepted
/// ones, kept iff nonzero, divided by its content and made monic.
std::vector<NcPolynomial<LaurentScalar>> frt_relations(int n);

enum class DetForm { column, row };

/// sum_sigma (-q)^{l(sigma)} u_{1,s(1)}...u_{n,s(n)} (column form) or
/// u_{s(1),1}...u_{s(n),n} (row form), unreduced.
NcPolynomial<LaurentScalar> quantum_det(int n, DetForm form = DetForm::column);

/// det_q of the submatrix keeping the rows and columns not listed (in increasing
/// order), with q = v^{2n} of the ambient rank. Throws std::invalid_argument on a size mismatch.
NcPolynomial<LaurentScalar> quantum_minor(int n, const std::set<int>& removed_rows, const std::set<int>& removed_cols);

/// O_q(M(n)) over the coefficient ring S. Built once over Laurent scalars and
/// carried to other rings through a coefficient embedding.
template <class S>
class QMatrixAlgebra {
 public:
  using Embedding = std::function<S(const LaurentScalar&)>;

  QMatrixAlgebra(int n, RewriteSystem<S> system, std::vector<NcPolynomial<S>> relations, Embedding embed)
      : n_(n), system_(std::move(system)), relations_(std::move(relations)), embed_(std::move(embed)) {}

  int rank() const { return n_; }
  const RewriteSystem<S>& system() const { return system_; }
  /// The raw entrywise relations.
  const std::vector<NcPolynomial<S>>& relations() const { return relations_; }
  const Embedding& embedding() const { return embed_; }

  S scalar(const LaurentScalar& x) const { return embed_(x); }
  S one() const { return system_.one(); }
  NcPolynomial<S> lift(const NcPolynomial<LaurentScalar>& p) const {
    return map_coefficients<S>(p, embed_);
  }
  NcPolynomial<S> generator(int i, int j) const {
    return NcPolynomial<S>(NcMonomial::generator(generator_code(n_, i, j)), one());
  }

  NcPolynomial<S> normal_form(const NcPolynomial<S>& p) const { return system_.normal_form(p); }
  NcPolynomial<S> normal_form(const NcMonomial& m) const { return system_.normal_form(m); }
  NcPolynomial<S> multiply(const NcPolynomial<S>& a, const NcPolynomial<S>& b) const {
    return system_.normal_form(a * b);
  }

  /// True iff p commutes with every generator modulo the relations.
  bool is_central(const NcPolynomial<S>& p) const {
    for (int i = 1; i <= n_; ++i)
      for (int j = 1; j <= n_; ++j) {
        NcPolynomial<S> g = generator(i, j);
        if (!normal_form(p * g - g * p).is_zero()) return false;
      }
    return true;
  }

  /// Bialgebra coproduct u_ij -> sum_k u_ik ⊗ u_kj, legs in normal form.
  TensorElement<S> coproduct(const NcPolynomial<S>& p) const {
    auto normalize = [this](const NcMonomial& m) { return system_.normal_form(m); };
    TensorElement<S> out;
    for (const auto& [word, c] : p.terms()) {
      TensorElement<S> acc(NcMonomial(), NcMonomial(), one());
      for (std::size_t pos = 0; pos < word.degree(); ++pos)
        acc = tensor_multiply(acc, generator_coproduct(word[pos]), normalize);
      out += acc.scaled(c);
    }
    return out;
  }

  TensorElement<S> generator_coproduct(int code) const {
    GeneratorId g = generator_id(n_, code);
    TensorElement<S> t;
    for (int k = 1; k <= n_; ++k)
      t.add_term(NcMonomial::generator(generator_code(n_, g.row, k)),
                 NcMonomial::generator(generator_code(n_, k, g.col)), one());
    return t;
  }

 private:
  int n_;
  RewriteSystem<S> system_;
  std::vector<NcPolynomial<S>> relations_;
  Embedding embed_;
};

/// Builds the rewrite system from the FRT relations. Throws std::logic_error if
/// the rules cannot be completed consistently.
QMatrixAlgebra<LaurentScalar> build_algebra(int n, bool memoize = true);

/// The same algebra with v specialized to a primitive m-th root of unity.
QMatrixAlgebra<CyclotomicScalar> build_algebra_at_root(int n, int m, bool memoize = true);

template <class S>
bool is_central(const NcPolynomial<S>& p, const QMatrixAlgebra<S>& alg) {
  return alg.is_central(p);
}

}  // namespace qcoord
