#include "qcoord/qsln.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <sstream>

namespace qcoord {

ExponentMatrix::ExponentMatrix(int n, std::vector<int> entries) : n_(n), entries_(std::move(entries)) {
  if (entries_.size() != static_cast<std::size_t>(n * n)) throw std::invalid_argument("exponent matrix size mismatch");
  for (int e : entries_)
    if (e < 0) throw std::invalid_argument("negative exponent");
}

ExponentMatrix ExponentMatrix::identity(int n) {
  ExponentMatrix e(n);
  for (int i = 1; i <= n; ++i) e.at(i, i) = 1;
  return e;
}

ExponentMatrix ExponentMatrix::unit(int n, int i, int j) {
  ExponentMatrix e(n);
  e.at(i, j) = 1;
  return e;
}

ExponentMatrix ExponentMatrix::of(int n, const NcMonomial& word) {
  ExponentMatrix e(n);
  for (std::size_t pos = 0; pos < word.degree(); ++pos) {
    if (word[pos] >= n * n) throw std::out_of_range("generator outside rank");
    ++e.entries_[static_cast<std::size_t>(word[pos])];
  }
  return e;
}

int ExponentMatrix::degree() const {
  int d = 0;
  for (int e : entries_) d += e;
  return d;
}

int ExponentMatrix::min_diagonal() const {
  if (n_ == 0) return 0;
  int m = at(1, 1);
  for (int i = 2; i <= n_; ++i) m = std::min(m, at(i, i));
  return m;
}

long ExponentMatrix::off_diagonal_weight() const {
  long w = 0;
  for (int i = 1; i <= n_; ++i)
    for (int j = 1; j <= n_; ++j) w += static_cast<long>(at(i, j)) * (i - j) * (i - j);
  return w;
}

NcMonomial ExponentMatrix::monomial() const {
  std::string codes;
  for (std::size_t k = 0; k < entries_.size(); ++k) codes.append(static_cast<std::size_t>(entries_[k]), static_cast<char>(k));
  return NcMonomial(std::move(codes));
}

ExponentMatrix& ExponentMatrix::operator+=(const ExponentMatrix& o) {
  if (o.n_ != n_) throw std::invalid_argument("exponent matrix rank mismatch");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += o.entries_[k];
  return *this;
}

ExponentMatrix ExponentMatrix::scaled(int k) const {
  ExponentMatrix r = *this;
  for (int& e : r.entries_) e *= k;
  return r;
}

std::string ExponentMatrix::to_string() const {
  std::ostringstream out;
  out << "[";
  for (int i = 1; i <= n_; ++i) {
    out << (i > 1 ? ",[" : "[");
    for (int j = 1; j <= n_; ++j) out << (j > 1 ? "," : "") << at(i, j);
    out << "]";
  }
  out << "]";
  return out.str();
}

std::vector<NcMonomial> pbw_words(int n, int degree) {
  std::vector<NcMonomial> out;
  std::string word;
  auto extend = [&](auto&& self, int lowest) -> void {
    if (static_cast<int>(word.size()) == degree) {
      out.emplace_back(word);
      return;
    }
    for (int code = lowest; code < n * n; ++code) {
      word.push_back(static_cast<char>(code));
      self(self, code);
      word.pop_back();
    }
  };
  extend(extend, 0);
  return out;
}

std::vector<ExponentMatrix> basis_monomials(int n, int degree_bound) {
  std::vector<ExponentMatrix> out;
  for (int d = 0; d <= degree_bound; ++d)
    for (const NcMonomial& w : pbw_words(n, d)) {
      ExponentMatrix e = ExponentMatrix::of(n, w);
      if (e.is_sln_basis()) out.push_back(std::move(e));
    }
  return out;
}

std::uint64_t default_step_budget() {
  if (const char* env = std::getenv("QCOORD_STEP_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return 50'000'000;
}

SlnAlgebra<LaurentScalar> build_sln(int n, SlnOptions options) {
  return SlnAlgebra<LaurentScalar>(build_algebra(n), options);
}

SlnAlgebra<CyclotomicScalar> build_sln_at_root(int n, int m, SlnOptions options) {
  return SlnAlgebra<CyclotomicScalar>(build_algebra_at_root(n, m), options);
}

NcPolynomial<LaurentScalar> bigon_element(int n, int i, int j) {
  if (i < 1 || i > n || j < 1 || j > n) throw std::out_of_range("state outside 1..n");
  return NcPolynomial<LaurentScalar>(NcMonomial::generator(generator_code(n, i, j)), LaurentScalar(1L));
}

namespace {

using Poly = NcPolynomial<LaurentScalar>;
using Tensor = TensorElement<LaurentScalar>;
using Triple = std::map<std::array<NcMonomial, 3>, LaurentScalar>;

Triple coproduct_left(const SlnAlgebra<LaurentScalar>& alg, const Tensor& t) {
  Triple out;
  for (const auto& [k, c] : t.terms()) {
    Tensor split = alg.coproduct(Poly(k.first, LaurentScalar(1L)));
    for (const auto& [k2, c2] : split.terms()) accumulate_term(out, {k2.first, k2.second, k.second}, c * c2);
  }
  return out;
}

Triple coproduct_right(const SlnAlgebra<LaurentScalar>& alg, const Tensor& t) {
  Triple out;
  for (const auto& [k, c] : t.terms()) {
    Tensor split = alg.coproduct(Poly(k.second, LaurentScalar(1L)));
    for (const auto& [k2, c2] : split.terms()) accumulate_term(out, {k.first, k2.first, k2.second}, c * c2);
  }
  return out;
}

std::string triple_string(const Triple& t, int n) {
  if (t.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [k, c] : t) {
    out << (first ? "" : " + ") << "(" << c.to_string() << ")*[" << k[0].to_string(n) << " ⊗ " << k[1].to_string(n)
        << " ⊗ " << k[2].to_string(n) << "]";
    first = false;
  }
  return out.str();
}

}  // namespace

CheckReport check_hopf_axioms(int n) { return check_hopf_axioms(build_sln(n)); }

CheckReport check_hopf_axioms(const SlnAlgebra<LaurentScalar>& alg) {
  const int n = alg.rank();
  CheckReport report;
  report.suite = "hopf";
  const LaurentScalar one(1L);

  std::vector<NcMonomial> samples;
  for (int d = 1; d <= 2; ++d)
    for (const NcMonomial& w : pbw_words(n, d)) samples.push_back(w);

  for (const NcMonomial& w : samples) {
    Poly x = alg.normal_form(w);
    Tensor dx = alg.coproduct(x);
    std::string label = w.to_string(n);

    Triple left = coproduct_left(alg, dx), right = coproduct_right(alg, dx);
    report.add("coassociativity " + label, left == right, triple_string(left, n), triple_string(right, n));

    Poly counit_left, counit_right;
    for (const auto& [k, c] : dx.terms()) {
      counit_left += Poly(k.second, c * alg.counit(Poly(k.first, one)));
      counit_right += Poly(k.first, c * alg.counit(Poly(k.second, one)));
    }
    counit_left = alg.normal_form(counit_left);
    counit_right = alg.normal_form(counit_right);
    report.add("left counit " + label, counit_left == x, counit_left.to_string(n), x.to_string(n));
    report.add("right counit " + label, counit_right == x, counit_right.to_string(n), x.to_string(n));

    Poly expected = Poly::constant(alg.counit(x));
    Poly s_first, s_second;
    for (const auto& [k, c] : dx.terms()) {
      s_first += alg.multiply(alg.antipode(Poly(k.first, one)), Poly(k.second, c));
      s_second += alg.multiply(Poly(k.first, c), alg.antipode(Poly(k.second, one)));
    }
    report.add("antipode S*id " + label, s_first == expected, s_first.to_string(n), expected.to_string(n));
    report.add("antipode id*S " + label, s_second == expected, s_second.to_string(n), expected.to_string(n));
  }

  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      Poly left, right;
      for (int k = 1; k <= n; ++k) {
        left += alg.multiply(alg.antipode(alg.generator(i, k)), alg.generator(k, j));
        right += alg.multiply(alg.generator(i, k), alg.antipode(alg.generator(k, j)));
      }
      Poly delta = i == j ? Poly::constant(one) : Poly();
      report.add("sum_k S(u" + std::to_string(i) + "k) uk" + std::to_string(j), left == delta, left.to_string(n),
                 delta.to_string(n));
      report.add("sum_k u" + std::to_string(i) + "k S(uk" + std::to_string(j) + ")", right == delta,
                 right.to_string(n), delta.to_string(n));
    }

  const auto& relations = alg.base().relations();
  for (std::size_t r = 0; r < relations.size(); ++r) {
    Tensor d = alg.coproduct(relations[r]);
    LaurentScalar e = alg.counit(relations[r]);
    report.add("coproduct kills relation " + std::to_string(r + 1), d.is_zero(), d.to_string(n), "0");
    report.add("counit kills relation " + std::to_string(r + 1), e.is_zero(), e.to_string(), "0");
  }
  for (DetForm form : {DetForm::column, DetForm::row}) {
    std::string label = form == DetForm::column ? "column" : "row";
    Poly det_minus_one = quantum_det(n, form) - Poly::constant(one);
    Tensor d = alg.coproduct(det_minus_one);
    LaurentScalar e = alg.counit(det_minus_one);
    Poly reduced = alg.normal_form(det_minus_one);
    report.add("det_q - 1 vanishes (" + label + ")", reduced.is_zero(), reduced.to_string(n), "0");
    report.add("coproduct kills det_q - 1 (" + label + ")", d.is_zero(), d.to_string(n), "0");
    report.add("counit kills det_q - 1 (" + label + ")", e.is_zero(), e.to_string(), "0");
  }
  return report;
}

}  // namespace qcoord
