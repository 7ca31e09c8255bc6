#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qcoord/rational.hpp"

namespace qcoord {

/// Which tensor factor a generator lives in. Plain algebra elements use `single`.
enum class Leg { single, left, right };

/// The generator u_{row,col}, 1-based.
struct GeneratorId {
  int row = 1;
  int col = 1;
  Leg leg = Leg::single;
  friend bool operator==(const GeneratorId&, const GeneratorId&) = default;
};

/// Generator codes are row-major: u_{11} < u_{12} < ... < u_{1n} < u_{21} < ... < u_{nn}.
inline int generator_code(int n, int row, int col) { return (row - 1) * n + (col - 1); }
inline GeneratorId generator_id(int n, int code, Leg leg = Leg::single) {
  return {code / n + 1, code % n + 1, leg};
}

/// A word in the generators. Ordered degree first, then lexicographically by
/// generator code.
class NcMonomial {
 public:
  NcMonomial() = default;
  explicit NcMonomial(std::string codes) : codes_(std::move(codes)) {}
  static NcMonomial generator(int code) { return NcMonomial(std::string(1, static_cast<char>(code))); }
  /// Word from 1-based (row, col) pairs.
  static NcMonomial from_pairs(int n, const std::vector<std::pair<int, int>>& pairs);

  const std::string& codes() const { return codes_; }
  std::size_t degree() const { return codes_.size(); }
  bool empty() const { return codes_.empty(); }
  int operator[](std::size_t i) const { return static_cast<unsigned char>(codes_[i]); }
  int back() const { return static_cast<unsigned char>(codes_.back()); }

  NcMonomial operator*(const NcMonomial& o) const { return NcMonomial(codes_ + o.codes_); }
  NcMonomial with_appended(int code) const {
    std::string s = codes_;
    s.push_back(static_cast<char>(code));
    return NcMonomial(std::move(s));
  }
  NcMonomial prefix(std::size_t len) const { return NcMonomial(codes_.substr(0, len)); }

  friend bool operator==(const NcMonomial& a, const NcMonomial& b) { return a.codes_ == b.codes_; }
  friend bool operator<(const NcMonomial& a, const NcMonomial& b) {
    if (a.codes_.size() != b.codes_.size()) return a.codes_.size() < b.codes_.size();
    return a.codes_ < b.codes_;
  }

  /// "u[1,1]*u[2,2]", or "1" for the empty word.
  std::string to_string(int n, char symbol = 'u') const;
  /// Exponent of each generator, indexed by code.
  std::vector<int> exponents(int num_generators) const;

 private:
  std::string codes_;
};

struct NcMonomialHash {
  std::size_t operator()(const NcMonomial& m) const { return std::hash<std::string>()(m.codes()); }
};

/// Adds c to terms[key], erasing the entry when it cancels.
template <class Map, class S>
void accumulate_term(Map& terms, const typename Map::key_type& key, const S& c) {
  if (c.is_zero()) return;
  auto it = terms.find(key);
  if (it == terms.end()) {
    terms.emplace(key, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms.erase(it);
}

/// Finite linear combination of words with nonzero coefficients in S.
template <class S>
class NcPolynomial {
 public:
  using Terms = std::map<NcMonomial, S>;

  NcPolynomial() = default;
  NcPolynomial(const NcMonomial& m, const S& c) { accumulate_term(terms_, m, c); }
  /// Scalar multiple of the empty word.
  static NcPolynomial constant(const S& c) { return NcPolynomial(NcMonomial(), c); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  /// Largest monomial in the degree-lexicographic order.
  const NcMonomial& leading_monomial() const { return terms_.rbegin()->first; }
  const S& leading_coefficient() const { return terms_.rbegin()->second; }
  std::optional<S> coefficient(const NcMonomial& m) const {
    auto it = terms_.find(m);
    if (it == terms_.end()) return std::nullopt;
    return it->second;
  }
  std::size_t max_degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first.degree(); }

  void add_term(const NcMonomial& m, const S& c) { accumulate_term(terms_, m, c); }

  NcPolynomial& operator+=(const NcPolynomial& o) {
    for (const auto& [m, c] : o.terms_) accumulate_term(terms_, m, c);
    return *this;
  }
  NcPolynomial& operator-=(const NcPolynomial& o) {
    for (const auto& [m, c] : o.terms_) accumulate_term(terms_, m, -c);
    return *this;
  }
  NcPolynomial operator-() const {
    NcPolynomial r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
  }
  /// Multiplies every coefficient by s (on the left; scalars are central).
  NcPolynomial scaled(const S& s) const {
    NcPolynomial r;
    for (const auto& [m, c] : terms_) accumulate_term(r.terms_, m, s * c);
    return r;
  }

  friend NcPolynomial operator+(NcPolynomial a, const NcPolynomial& b) { return a += b; }
  friend NcPolynomial operator-(NcPolynomial a, const NcPolynomial& b) { return a -= b; }
  /// Concatenation product of the free algebra.
  friend NcPolynomial operator*(const NcPolynomial& a, const NcPolynomial& b) {
    NcPolynomial r;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) accumulate_term(r.terms_, ma * mb, ca * cb);
    return r;
  }
  friend bool operator==(const NcPolynomial& a, const NcPolynomial& b) { return a.terms_ == b.terms_; }

  std::string to_string(int n, char symbol = 'u') const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      if (!first) out << " + ";
      first = false;
      std::string cs = c.to_string();
      bool unit = cs == "1";
      if (m.empty()) {
        out << (unit ? "1" : "(" + cs + ")");
      } else {
        if (!unit) out << "(" << cs << ")*";
        out << m.to_string(n, symbol);
      }
    }
    return out.str();
  }

 private:
  Terms terms_;
};

/// Maps every coefficient through f (e.g. Laurent -> cyclotomic specialization).
template <class T, class S, class F>
NcPolynomial<T> map_coefficients(const NcPolynomial<S>& p, F&& f) {
  NcPolynomial<T> r;
  for (const auto& [m, c] : p.terms()) r.add_term(m, f(c));
  return r;
}

/// Linear combination of pairs of normal-form words (a ⊗ b).
template <class S>
class TensorElement {
 public:
  using Key = std::pair<NcMonomial, NcMonomial>;
  using Terms = std::map<Key, S>;

  TensorElement() = default;
  TensorElement(const NcMonomial& left, const NcMonomial& right, const S& c) {
    accumulate_term(terms_, Key{left, right}, c);
  }
  /// a ⊗ b for two polynomials.
  static TensorElement outer(const NcPolynomial<S>& a, const NcPolynomial<S>& b) {
    TensorElement t;
    for (const auto& [ma, ca] : a.terms())
      for (const auto& [mb, cb] : b.terms()) accumulate_term(t.terms_, Key{ma, mb}, ca * cb);
    return t;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  void add_term(const NcMonomial& left, const NcMonomial& right, const S& c) {
    accumulate_term(terms_, Key{left, right}, c);
  }

  TensorElement& operator+=(const TensorElement& o) {
    for (const auto& [k, c] : o.terms_) accumulate_term(terms_, k, c);
    return *this;
  }
  TensorElement& operator-=(const TensorElement& o) {
    for (const auto& [k, c] : o.terms_) accumulate_term(terms_, k, -c);
    return *this;
  }
  TensorElement scaled(const S& s) const {
    TensorElement r;
    for (const auto& [k, c] : terms_) accumulate_term(r.terms_, k, s * c);
    return r;
  }
  friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
  friend TensorElement operator-(TensorElement a, const TensorElement& b) { return a -= b; }
  friend bool operator==(const TensorElement& a, const TensorElement& b) { return a.terms_ == b.terms_; }

  std::string to_string(int n) const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [k, c] : terms_) {
      if (!first) out << " + ";
      first = false;
      std::string cs = c.to_string();
      if (cs != "1") out << "(" << cs << ")*";
      out << "[" << k.first.to_string(n) << " ⊗ " << k.second.to_string(n) << "]";
    }
    return out.str();
  }

 private:
  Terms terms_;
};

/// Componentwise product (a⊗b)(c⊗d) = N(ac) ⊗ N(bd), where `normalize` maps a
/// word to its normal form.
template <class S, class Normalize>
TensorElement<S> tensor_multiply(const TensorElement<S>& s, const TensorElement<S>& t, Normalize&& normalize) {
  TensorElement<S> r;
  for (const auto& [ks, cs] : s.terms()) {
    for (const auto& [kt, ct] : t.terms()) {
      NcPolynomial<S> left = normalize(ks.first * kt.first);
      NcPolynomial<S> right = normalize(ks.second * kt.second);
      S coeff = cs * ct;
      for (const auto& [ml, cl] : left.terms())
        for (const auto& [mr, cr] : right.terms()) r.add_term(ml, mr, coeff * cl * cr);
    }
  }
  return r;
}

/// Oriented length-two rules lhs -> rhs with a degree-lexicographic order.
///
/// Normal forms are computed by left-to-right insertion: a word is built one
/// letter at a time and each new letter is pushed left through the normal
/// prefix, always rewriting the leftmost redex. Results of inserting a letter
/// into a normal word are memoized (mutex-protected) unless disabled.
template <class S>
class RewriteSystem {
 public:
  struct Options {
    bool memoize = true;
  };

  RewriteSystem(int n, int num_generators, S one, Options options)
      : n_(n), num_generators_(num_generators), one_(std::move(one)), options_(options),
        table_(static_cast<std::size_t>(num_generators) * static_cast<std::size_t>(num_generators)) {
    if (num_generators > 127) throw std::invalid_argument("too many generators");
  }
  RewriteSystem(int n, int num_generators, S one) : RewriteSystem(n, num_generators, std::move(one), Options{}) {}
  /// Rank-n system on the n^2 generators u_{ij}.
  RewriteSystem(int n, S one) : RewriteSystem(n, n * n, std::move(one)) {}

  RewriteSystem(const RewriteSystem& o)
      : n_(o.n_), num_generators_(o.num_generators_), one_(o.one_), options_(o.options_),
        rules_(o.rules_), table_(o.table_.size()) {
    rebuild_table();
  }
  RewriteSystem& operator=(const RewriteSystem&) = delete;

  int rank() const { return n_; }
  int num_generators() const { return num_generators_; }
  const S& one() const { return one_; }
  const std::map<NcMonomial, NcPolynomial<S>>& rules() const { return rules_; }
  std::size_t rule_count() const { return rules_.size(); }

  /// Installs lhs -> rhs. Throws std::invalid_argument if lhs is not a
  /// length-two word, already has a rule, or rhs is not strictly below lhs.
  void add_rule(const NcMonomial& lhs, const NcPolynomial<S>& rhs) {
    if (lhs.degree() != 2) throw std::invalid_argument("rule leading word must have length 2");
    if (rules_.count(lhs)) throw std::invalid_argument("duplicate rule for " + lhs.to_string(n_));
    for (const auto& [m, c] : rhs.terms())
      if (!(m < lhs)) throw std::invalid_argument("rule rhs not below its leading word");
    rules_.emplace(lhs, rhs);
    rebuild_table();
    clear_cache();
  }

  /// Replaces every rule's rhs by its current normal form.
  void interreduce() {
    for (auto& [lhs, rhs] : rules_) {
      NcPolynomial<S> reduced;
      for (const auto& [m, c] : rhs.terms()) reduced += normal_form(m).scaled(c);
      rhs = std::move(reduced);
    }
    rebuild_table();
    clear_cache();
  }

  const NcPolynomial<S>* rule(int a, int b) const {
    return table_[static_cast<std::size_t>(a * num_generators_ + b)];
  }

  bool is_normal(const NcMonomial& m) const {
    for (std::size_t i = 0; i + 1 < m.degree(); ++i)
      if (rule(m[i], m[i + 1])) return false;
    return true;
  }

  /// Rewrites the redex starting at position pos (one step, no further reduction).
  NcPolynomial<S> rewrite_at(const NcMonomial& m, std::size_t pos) const {
    const NcPolynomial<S>* r = rule(m[pos], m[pos + 1]);
    if (!r) throw std::invalid_argument("no redex at requested position");
    NcMonomial head = m.prefix(pos);
    NcMonomial tail(m.codes().substr(pos + 2));
    NcPolynomial<S> out;
    for (const auto& [w, c] : r->terms()) out.add_term(head * w * tail, c);
    return out;
  }

  NcPolynomial<S> normal_form(const NcMonomial& m) const {
    NcPolynomial<S> acc = NcPolynomial<S>::constant(one_);
    for (std::size_t i = 0; i < m.degree(); ++i) acc = append_letter(acc, m[i]);
    return acc;
  }

  NcPolynomial<S> normal_form(const NcPolynomial<S>& p) const {
    NcPolynomial<S> r;
    for (const auto& [m, c] : p.terms()) r += normal_form(m).scaled(c);
    return r;
  }

  /// Normal form of w * letter where w is already a normal word.
  NcPolynomial<S> insert(const NcMonomial& w, int letter) const {
    const NcPolynomial<S>* r = w.empty() ? nullptr : rule(w.back(), letter);
    NcMonomial key = w.with_appended(letter);
    if (!r) return NcPolynomial<S>(key, one_);
    if (options_.memoize) {
      std::lock_guard lock(cache_mutex_);
      if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    }
    NcMonomial head = w.prefix(w.degree() - 1);
    NcPolynomial<S> result;
    for (const auto& [word, c] : r->terms()) {
      NcPolynomial<S> acc(head, c);
      for (std::size_t i = 0; i < word.degree(); ++i) acc = append_letter(acc, word[i]);
      result += acc;
    }
    if (options_.memoize) {
      std::lock_guard lock(cache_mutex_);
      cache_.emplace(key, result);
    }
    return result;
  }

  /// Normal form of p * u_letter where p is in normal form.
  NcPolynomial<S> append_letter(const NcPolynomial<S>& p, int letter) const {
    NcPolynomial<S> out;
    for (const auto& [w, c] : p.terms()) {
      NcPolynomial<S> ins = insert(w, letter);
      if (ins.size() == 1 && ins.terms().begin()->second == one_) {
        out.add_term(ins.terms().begin()->first, c);
      } else {
        out += ins.scaled(c);
      }
    }
    return out;
  }

  /// Number of degree-d words containing no rule leading word.
  Integer graded_dimension(int d) const {
    if (d == 0) return 1;
    std::vector<Integer> count(static_cast<std::size_t>(num_generators_), Integer(1));
    for (int step = 1; step < d; ++step) {
      std::vector<Integer> next(static_cast<std::size_t>(num_generators_), Integer(0));
      for (int a = 0; a < num_generators_; ++a)
        for (int b = 0; b < num_generators_; ++b)
          if (!rule(a, b)) next[static_cast<std::size_t>(b)] += count[static_cast<std::size_t>(a)];
      count = std::move(next);
    }
    Integer total = 0;
    for (const auto& c : count) total += c;
    return total;
  }

  void clear_cache() const {
    std::lock_guard lock(cache_mutex_);
    cache_.clear();
  }

 private:
  void rebuild_table() {
    std::fill(table_.begin(), table_.end(), nullptr);
    for (const auto& [lhs, rhs] : rules_) table_[static_cast<std::size_t>(lhs[0] * num_generators_ + lhs[1])] = &rhs;
  }

  int n_;
  int num_generators_;
  S one_;
  Options options_;
  std::map<NcMonomial, NcPolynomial<S>> rules_;
  std::vector<const NcPolynomial<S>*> table_;
  mutable std::mutex cache_mutex_;
  mutable std::unordered_map<NcMonomial, NcPolynomial<S>, NcMonomialHash> cache_;
};

/// Free-algebra product followed by reduction.
template <class S>
NcPolynomial<S> multiply(const NcPolynomial<S>& p, const NcPolynomial<S>& q, const RewriteSystem<S>& rs) {
  return rs.normal_form(p * q);
}

template <class S>
NcPolynomial<S> normal_form(const NcPolynomial<S>& p, const RewriteSystem<S>& rs) {
  return rs.normal_form(p);
}

template <class S>
Integer graded_dimension(const RewriteSystem<S>& rs, int d) {
  return rs.graded_dimension(d);
}

template <class S>
TensorElement<S> tensor_multiply(const TensorElement<S>& s, const TensorElement<S>& t, const RewriteSystem<S>& rs) {
  return tensor_multiply(s, t, [&rs](const NcMonomial& m) { return rs.normal_form(m); });
}

}  // namespace qcoord
