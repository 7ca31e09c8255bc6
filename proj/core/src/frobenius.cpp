#include "qcoord/frobenius.hpp"

#include <numeric>
#include <set>
#include <sstream>

namespace qcoord {

CommutativeSlnPoly CommutativeSlnPoly::constant(int n, const Rational& c) {
  return monomial(ExponentMatrix(n), c);
}

CommutativeSlnPoly CommutativeSlnPoly::variable(int n, int i, int j) {
  return monomial(ExponentMatrix::unit(n, i, j));
}

CommutativeSlnPoly CommutativeSlnPoly::monomial(const ExponentMatrix& e, const Rational& c) {
  CommutativeSlnPoly p(e.rank());
  p.add_term(e, c);
  return p;
}

CommutativeSlnPoly CommutativeSlnPoly::determinant(int n) {
  CommutativeSlnPoly p(n);
  Permutation sigma(n);
  do {
    ExponentMatrix e(n);
    for (int i = 1; i <= n; ++i) e.at(i, sigma(i)) = 1;
    p.add_term(e, sigma.sign());
  } while (sigma.next());
  return p;
}

void CommutativeSlnPoly::add_term(const ExponentMatrix& e, const Rational& c) {
  if (e.rank() != n_) throw std::invalid_argument("commutative polynomial rank mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

CommutativeSlnPoly& CommutativeSlnPoly::operator+=(const CommutativeSlnPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

CommutativeSlnPoly& CommutativeSlnPoly::operator-=(const CommutativeSlnPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

CommutativeSlnPoly operator*(const CommutativeSlnPoly& a, const CommutativeSlnPoly& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("commutative polynomial rank mismatch");
  CommutativeSlnPoly r(a.n_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      ExponentMatrix e = ea;
      e += eb;
      r.add_term(e, ca * cb);
    }
  return r;
}

std::string CommutativeSlnPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    out << (first ? "" : " + ");
    first = false;
    std::string word;
    for (int i = 1; i <= n_; ++i)
      for (int j = 1; j <= n_; ++j) {
        int k = e.at(i, j);
        if (k == 0) continue;
        if (!word.empty()) word += "*";
        word += "x[" + std::to_string(i) + "," + std::to_string(j) + "]";
        if (k > 1) word += "^" + std::to_string(k);
      }
    if (word.empty()) {
      out << qcoord::to_string(c);
    } else {
      if (c != 1) out << "(" << qcoord::to_string(c) << ")*";
      out << word;
    }
  }
  return out.str();
}

CommutativeSlnPoly classical_normal_form(const CommutativeSlnPoly& p) {
  const int n = p.rank();
  CommutativeSlnPoly substitute = CommutativeSlnPoly::constant(n, 1) - CommutativeSlnPoly::determinant(n);
  substitute.add_term(ExponentMatrix::identity(n), 1);

  CommutativeSlnPoly done(n);
  CommutativeSlnPoly pending = p;
  while (!pending.is_zero()) {
    CommutativeSlnPoly next(n);
    for (const auto& [e, c] : pending.terms()) {
      if (e.is_sln_basis()) {
        done.add_term(e, c);
        continue;
      }
      ExponentMatrix lower = e;
      for (int i = 1; i <= n; ++i) --lower.at(i, i);
      next += CommutativeSlnPoly::monomial(lower, c) * substitute;
    }
    pending = std::move(next);
  }
  return done;
}

Rational classical_counit(const CommutativeSlnPoly& p) {
  Rational total = 0;
  const int n = p.rank();
  for (const auto& [e, c] : p.terms()) {
    bool diagonal = true;
    for (int i = 1; i <= n && diagonal; ++i)
      for (int j = 1; j <= n && diagonal; ++j) diagonal = i == j || e.at(i, j) == 0;
    if (diagonal) total += c;
  }
  return total;
}

RootOfUnityContext::RootOfUnityContext(int n, int m, SlnOptions options)
    : n_(n), m_(m), v_(CyclotomicScalar::zeta(std::max(m, 1))), q_(v_.pow(2L * n)),
      algebra_([&] {
        if (n < 1) throw std::invalid_argument("rank must be >= 1");
        if (m < 1 || std::gcd(m, 2 * n) != 1)
          throw std::invalid_argument("root of unity order " + std::to_string(m) + " is not coprime to 2n = " +
                                      std::to_string(2 * n));
        return build_sln_at_root(n, m, options);
      }()) {}

const NcPolynomial<CyclotomicScalar>& RootOfUnityContext::generator_power(int i, int j) const {
  int key = generator_code(n_, i, j);
  {
    std::lock_guard lock(power_mutex_);
    if (auto it = powers_.find(key); it != powers_.end()) return it->second;
  }
  NcPolynomial<CyclotomicScalar> p = algebra_.power(algebra_.generator(i, j), m_);
  std::lock_guard lock(power_mutex_);
  return powers_.emplace(key, std::move(p)).first->second;
}

NcPolynomial<CyclotomicScalar> frobenius_image(const CommutativeSlnPoly& p, const RootOfUnityContext& ctx) {
  if (p.rank() != ctx.rank()) throw std::invalid_argument("frobenius_image: rank mismatch");
  const int n = ctx.rank();
  const auto& alg = ctx.algebra();
  NcPolynomial<CyclotomicScalar> out;
  CommutativeSlnPoly reduced = classical_normal_form(p);
  for (const auto& [e, c] : reduced.terms()) {
    NcPolynomial<CyclotomicScalar> term = NcPolynomial<CyclotomicScalar>::constant(CyclotomicScalar(ctx.order(), c));
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        for (int k = 0; k < e.at(i, j); ++k) term = alg.multiply(term, ctx.generator_power(i, j));
    out += term;
  }
  return out;
}

CheckReport check_power_identities(const RootOfUnityContext& ctx) {
  using Poly = NcPolynomial<CyclotomicScalar>;
  const int n = ctx.rank();
  const auto& alg = ctx.algebra();
  const Poly one = Poly::constant(alg.one());
  CheckReport report;
  report.suite = "frobenius";

  for (DetForm form : {DetForm::column, DetForm::row}) {
    Poly sum;
    Permutation sigma(n);
    do {
      Poly term = Poly::constant(CyclotomicScalar(ctx.order(), Rational(sigma.sign())));
      for (int t = 1; t <= n; ++t) {
        int row = form == DetForm::column ? t : sigma(t);
        int col = form == DetForm::column ? sigma(t) : t;
        term = alg.multiply(term, ctx.generator_power(row, col));
      }
      sum += term;
    } while (sigma.next());
    std::string label = form == DetForm::column ? "(a) sum_sigma sgn u_{i,sigma(i)}^m = 1"
                                                : "(a) sum_sigma sgn u_{sigma(j),j}^m = 1";
    report.add(label, sum == one, sum.to_string(n), one.to_string(n));
  }

  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      TensorElement<CyclotomicScalar> lhs = alg.coproduct(ctx.generator_power(i, j));
      TensorElement<CyclotomicScalar> rhs;
      for (int k = 1; k <= n; ++k) rhs += TensorElement<CyclotomicScalar>::outer(ctx.generator_power(i, k), ctx.generator_power(k, j));
      std::string idx = std::to_string(i) + "," + std::to_string(j);
      report.add("(b) coproduct of u[" + idx + "]^m", lhs == rhs, lhs.to_string(n), rhs.to_string(n));
    }

  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      const Poly& p = ctx.generator_power(i, j);
      std::string idx = std::to_string(i) + "," + std::to_string(j);
      std::string witness;
      for (int k = 1; k <= n && witness.empty(); ++k)
        for (int l = 1; l <= n && witness.empty(); ++l) {
          Poly g = alg.generator(k, l);
          Poly commutator = alg.normal_form(p * g - g * p);
          if (!commutator.is_zero()) witness = "[u^m, u[" + std::to_string(k) + "," + std::to_string(l) + "]] = " + commutator.to_string(n);
        }
      report.add("(c) u[" + idx + "]^m is central", witness.empty(), witness, "0");
    }
  return report;
}

InjectivityResult check_injectivity_on_basis(const RootOfUnityContext& ctx, int degree_bound) {
  const int n = ctx.rank();
  InjectivityResult result;
  std::set<NcMonomial> seen;
  for (const ExponentMatrix& e : basis_monomials(n, degree_bound)) {
    ++result.inputs;
    NcPolynomial<CyclotomicScalar> image = frobenius_image(CommutativeSlnPoly::monomial(e), ctx);
    NcMonomial expected = e.scaled(ctx.order()).monomial();
    if (image.size() != 1 || image.terms().begin()->first != expected) {
      result.failure = "image of " + e.to_string() + " is " + image.to_string(n);
      return result;
    }
    if (!seen.insert(expected).second) {
      result.failure = "two basis monomials share the image " + expected.to_string(n);
      return result;
    }
  }
  result.injective = true;
  return result;
}

SpanningCount spanning_set_count(int n, int m, long enumeration_limit) {
  if (n < 1 || m < 1) throw std::invalid_argument("spanning_set_count needs n, m >= 1");
  const unsigned long cells = static_cast<unsigned long>(n) * static_cast<unsigned long>(n);
  SpanningCount out;
  Integer all, diagonal_free, rest;
  mpz_ui_pow_ui(all.get_mpz_t(), static_cast<unsigned long>(m), cells);
  mpz_ui_pow_ui(diagonal_free.get_mpz_t(), static_cast<unsigned long>(m - 1), static_cast<unsigned long>(n));
  mpz_ui_pow_ui(rest.get_mpz_t(), static_cast<unsigned long>(m), cells - static_cast<unsigned long>(n));
  out.formula = all - diagonal_free * rest;

  if (all > enumeration_limit) return out;
  const long total = all.get_si();
  long count = 0;
  std::vector<int> digits(cells, 0);
  for (long idx = 0; idx < total; ++idx) {
    bool zero_diagonal = false;
    for (int i = 0; i < n && !zero_diagonal; ++i) zero_diagonal = digits[static_cast<std::size_t>(i * n + i)] == 0;
    if (zero_diagonal) ++count;
    for (std::size_t k = 0; k < cells; ++k) {
      if (++digits[k] < m) break;
      digits[k] = 0;
    }
  }
  out.enumerated = Integer(count);
  return out;
}

}  // namespace qcoord
