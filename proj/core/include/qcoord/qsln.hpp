#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "qcoord/qmatrix.hpp"
#include "qcoord/report.hpp"

namespace qcoord {

/// n x n grid of nonnegative exponents; the exponent matrix of a PBW monomial.
class ExponentMatrix {
 public:
  ExponentMatrix() = default;
  explicit ExponentMatrix(int n) : n_(n), entries_(static_cast<std::size_t>(n * n), 0) {}
  /// Row-major entries. Throws std::invalid_argument on a size mismatch or a negative entry.
  ExponentMatrix(int n, std::vector<int> entries);
  static ExponentMatrix identity(int n);
  static ExponentMatrix unit(int n, int i, int j);
  /// Exponent matrix of a word (its letters counted; order is ignored).
  static ExponentMatrix of(int n, const NcMonomial& word);

  int rank() const { return n_; }
  int at(int i, int j) const { return entries_[index(i, j)]; }
  int& at(int i, int j) { return entries_[index(i, j)]; }
  const std::vector<int>& entries() const { return entries_; }

  int degree() const;
  int min_diagonal() const;
  /// The basis condition of O_q(SLn): some diagonal entry is zero.
  bool is_sln_basis() const { return min_diagonal() == 0; }
  /// Sum of e_ij (i - j)^2, a distance from the diagonal.
  long off_diagonal_weight() const;

  /// The PBW word u_11^{e_11} u_12^{e_12} ... u_nn^{e_nn}.
  NcMonomial monomial() const;

  ExponentMatrix& operator+=(const ExponentMatrix& o);
  ExponentMatrix scaled(int k) const;

  friend bool operator==(const ExponentMatrix&, const ExponentMatrix&) = default;
  /// Order of the corresponding PBW words.
  friend bool operator<(const ExponentMatrix& a, const ExponentMatrix& b) { return a.monomial() < b.monomial(); }

  std::string to_string() const;

 private:
  std::size_t index(int i, int j) const {
    if (i < 1 || i > n_ || j < 1 || j > n_) throw std::out_of_range("exponent matrix index out of range");
    return static_cast<std::size_t>((i - 1) * n_ + (j - 1));
  }

  int n_ = 0;
  std::vector<int> entries_;
};

/// All exponent matrices of total degree <= bound with a zero diagonal entry, in PBW order.
std::vector<ExponentMatrix> basis_monomials(int n, int degree_bound);

/// All nondecreasing words (normal words of O_q(M(n))) of exactly the given degree.
std::vector<NcMonomial> pbw_words(int n, int degree);

/// Default reduction bound, overridden by the environment variable QCOORD_STEP_BUDGET.
std::uint64_t default_step_budget();

enum class SlnStrategy { det_queue, linear_algebra };

struct SlnOptions {
  std::uint64_t step_budget = default_step_budget();
  SlnStrategy strategy = SlnStrategy::det_queue;
};

/// Thrown when a reduction exceeds its step budget.
class StepBudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// O_q(SLn) = O_q(M(n)) / (det_q - 1), with representatives supported on PBW
/// words whose exponent matrix has a zero diagonal entry.
///
/// A normal word w with every diagonal exponent >= 1 factors as w' u_11...u_nn
/// up to reordering. The O_q(M(n)) normal form of w' det_q is c w plus words
/// of the same content lying strictly farther from the diagonal, so
/// w = c^{-1} (w' - rest) modulo det_q - 1, and the recursion terminates.
template <class S>
class SlnAlgebra {
 public:
  explicit SlnAlgebra(QMatrixAlgebra<S> base, SlnOptions options = {})
      : base_(std::move(base)), options_(options) {
    if constexpr (std::is_same_v<S, LaurentScalar>) {
      if (options_.strategy == SlnStrategy::linear_algebra)
        throw std::invalid_argument("linear-algebra reduction needs a field of coefficients");
    }
    det_ = base_.normal_form(base_.lift(quantum_det(base_.rank())));
  }

  SlnAlgebra(const SlnAlgebra& o) : base_(o.base_), options_(o.options_), det_(o.det_) {}
  SlnAlgebra& operator=(const SlnAlgebra&) = delete;

  int rank() const { return base_.rank(); }
  const QMatrixAlgebra<S>& base() const { return base_; }
  const SlnOptions& options() const { return options_; }
  /// Normal form of det_q in O_q(M(n)).
  const NcPolynomial<S>& det_expansion() const { return det_; }
  S one() const { return base_.one(); }
  NcPolynomial<S> generator(int i, int j) const { return base_.generator(i, j); }

  NcPolynomial<S> normal_form(const NcPolynomial<S>& p) const {
    std::uint64_t steps = 0;
    NcPolynomial<S> out;
    for (const auto& [m, c] : p.terms()) {
      NcPolynomial<S> mq = base_.normal_form(m);
      for (const auto& [w, d] : mq.terms()) out += reduce_word(w, steps).scaled(c * d);
    }
    return out;
  }
  NcPolynomial<S> normal_form(const NcMonomial& m) const { return normal_form(NcPolynomial<S>(m, one())); }

  NcPolynomial<S> multiply(const NcPolynomial<S>& a, const NcPolynomial<S>& b) const { return normal_form(a * b); }
  NcPolynomial<S> power(const NcPolynomial<S>& a, int k) const {
    NcPolynomial<S> r = NcPolynomial<S>::constant(one());
    for (int i = 0; i < k; ++i) r = multiply(r, a);
    return r;
  }

  bool is_central(const NcPolynomial<S>& p) const {
    for (int i = 1; i <= rank(); ++i)
      for (int j = 1; j <= rank(); ++j) {
        NcPolynomial<S> g = generator(i, j);
        if (!normal_form(p * g - g * p).is_zero()) return false;
      }
    return true;
  }

  /// Multiplicative extension of u_ij -> sum_k u_ik ⊗ u_kj, both legs reduced.
  TensorElement<S> coproduct(const NcPolynomial<S>& p) const {
    auto reduce = [this](const NcMonomial& m) { return normal_form(m); };
    TensorElement<S> out;
    for (const auto& [word, c] : p.terms()) {
      TensorElement<S> acc(NcMonomial(), NcMonomial(), one());
      for (std::size_t pos = 0; pos < word.degree(); ++pos)
        acc = tensor_multiply(acc, base_.generator_coproduct(word[pos]), reduce);
      out += acc.scaled(c);
    }
    return out;
  }

  S counit(const NcPolynomial<S>& p) const {
    S out = S(one()) - one();
    for (const auto& [word, c] : p.terms()) {
      bool diagonal = true;
      for (std::size_t pos = 0; pos < word.degree() && diagonal; ++pos) {
        GeneratorId g = generator_id(rank(), word[pos]);
        diagonal = g.row == g.col;
      }
      if (diagonal) out += c;
    }
    return out;
  }

  /// S(u_ij) = (-q)^{i-j} times the quantum minor without row j and column i.
  const NcPolynomial<S>& generator_antipode(int i, int j) const {
    std::lock_guard lock(antipode_mutex_);
    auto key = generator_code(rank(), i, j);
    if (auto it = antipode_cache_.find(key); it != antipode_cache_.end()) return it->second;
    const int n = rank();
    LaurentScalar factor = LaurentScalar::monomial((i - j) % 2 ? -1 : 1, 2 * n * (i - j));
    NcPolynomial<S> minor = base_.lift(quantum_minor(n, {j}, {i})).scaled(base_.scalar(factor));
    return antipode_cache_.emplace(key, normal_form(minor)).first->second;
  }

  /// Anti-multiplicative extension of the generator antipode.
  NcPolynomial<S> antipode(const NcPolynomial<S>& p) const {
    NcPolynomial<S> out;
    for (const auto& [word, c] : p.terms()) {
      NcPolynomial<S> acc = NcPolynomial<S>::constant(c);
      for (std::size_t pos = word.degree(); pos-- > 0;) {
        GeneratorId g = generator_id(rank(), word[pos]);
        acc = multiply(acc, generator_antipode(g.row, g.col));
      }
      out += acc;
    }
    return out;
  }

  void clear_cache() const {
    std::lock_guard lock(cache_mutex_);
    cache_.clear();
  }

 private:
  NcPolynomial<S> reduce_word(const NcMonomial& w, std::uint64_t& steps) const {
    ExponentMatrix e = ExponentMatrix::of(rank(), w);
    if (e.is_sln_basis()) return NcPolynomial<S>(w, one());
    {
      std::lock_guard lock(cache_mutex_);
      if (auto it = cache_.find(w); it != cache_.end()) return it->second;
    }
    NcPolynomial<S> result = options_.strategy == SlnStrategy::det_queue ? reduce_by_det(w, steps)
                                                                         : reduce_by_elimination(w);
    std::lock_guard lock(cache_mutex_);
    cache_.emplace(w, result);
    return result;
  }

  NcPolynomial<S> reduce_by_det(const NcMonomial& w, std::uint64_t& steps) const {
    if (++steps > options_.step_budget)
      throw StepBudgetExceeded("det_q reduction exceeded its step budget of " + std::to_string(options_.step_budget));
    const int n = rank();
    std::string codes = w.codes();
    for (int i = n; i >= 1; --i) codes.erase(codes.find(static_cast<char>(generator_code(n, i, i))), 1);
    NcMonomial shorter(codes);

    NcPolynomial<S> expanded = base_.normal_form(NcPolynomial<S>(shorter, one()) * det_);
    std::optional<S> lead = expanded.coefficient(w);
    if (!lead) throw std::logic_error("det_q reduction: " + w.to_string(n) + " missing from its own expansion");
    S lead_inv = lead->inverse();

    NcPolynomial<S> out = reduce_word(shorter, steps);
    for (const auto& [t, c] : expanded.terms()) {
      if (t == w) continue;
      if (ExponentMatrix::of(n, t).off_diagonal_weight() <= ExponentMatrix::of(n, w).off_diagonal_weight())
        throw std::logic_error("det_q reduction: expansion of " + w.to_string(n) + " does not move off the diagonal");
      out -= reduce_word(t, steps).scaled(c);
    }
    return out.scaled(lead_inv);
  }

  /// Row-reduces {x (det_q - 1) : deg x <= deg w - n} with non-basis words as
  /// pivots, then eliminates every non-basis word of NF(w).
  NcPolynomial<S> reduce_by_elimination(const NcMonomial& w) const {
    const int n = rank();
    auto heavier = [n](const NcMonomial& a, const NcMonomial& b) {
      bool ba = ExponentMatrix::of(n, a).is_sln_basis(), bb = ExponentMatrix::of(n, b).is_sln_basis();
      if (ba != bb) return ba;
      return a < b;
    };
    auto top = [&](const NcPolynomial<S>& p) {
      const NcMonomial* best = nullptr;
      for (const auto& [m, c] : p.terms())
        if (!best || heavier(*best, m)) best = &m;
      return *best;
    };

    std::map<NcMonomial, NcPolynomial<S>> pivots;
    auto reduce_fully = [&](NcPolynomial<S> p) {
      bool changed = true;
      while (changed && !p.is_zero()) {
        changed = false;
        for (const auto& [m, c] : p.terms()) {
          auto it = pivots.find(m);
          if (it == pivots.end()) continue;
          p -= it->second.scaled(c);
          changed = true;
          break;
        }
      }
      return p;
    };

    NcPolynomial<S> det_minus_one = det_ - NcPolynomial<S>::constant(one());
    const int depth = static_cast<int>(w.degree()) - n;
    for (int d = 0; d <= depth; ++d) {
      for (const NcMonomial& x : pbw_words(n, d)) {
        NcPolynomial<S> row = reduce_fully(base_.normal_form(NcPolynomial<S>(x, one()) * det_minus_one));
        if (row.is_zero()) continue;
        NcMonomial pivot = top(row);
        if (ExponentMatrix::of(n, pivot).is_sln_basis())
          throw std::logic_error("elimination found a relation among basis words");
        row = row.scaled(row.coefficient(pivot)->inverse());
        for (auto& [m, r] : pivots)
          if (auto c = r.coefficient(pivot)) r -= row.scaled(*c);
        pivots.emplace(pivot, std::move(row));
      }
    }
    NcPolynomial<S> out = reduce_fully(NcPolynomial<S>(w, one()));
    for (const auto& [m, c] : out.terms())
      if (!ExponentMatrix::of(n, m).is_sln_basis())
        throw std::logic_error("elimination left the non-basis word " + m.to_string(n));
    return out;
  }

  QMatrixAlgebra<S> base_;
  SlnOptions options_;
  NcPolynomial<S> det_;
  mutable std::mutex cache_mutex_;
  mutable std::unordered_map<NcMonomial, NcPolynomial<S>, NcMonomialHash> cache_;
  mutable std::mutex antipode_mutex_;
  mutable std::map<int, NcPolynomial<S>> antipode_cache_;
};

SlnAlgebra<LaurentScalar> build_sln(int n, SlnOptions options = {});
SlnAlgebra<CyclotomicScalar> build_sln_at_root(int n, int m, SlnOptions options = {});

/// The generator u_ij standing for the stated bigon arc b_ij.
NcPolynomial<LaurentScalar> bigon_element(int n, int i, int j);

/// Coassociativity, counit and antipode axioms on generators and degree-two
/// words, plus Δ and ε killing the FRT relations and det_q - 1.
CheckReport check_hopf_axioms(int n);
CheckReport check_hopf_axioms(const SlnAlgebra<LaurentScalar>& alg);

}  // namespace qcoord
