#pragma once

#include <map>
#include <optional>
#include <string>

#include "qcoord/qsln.hpp"

namespace qcoord {

/// Polynomial in the commuting entries x_ij of a matrix X, with rational
/// coefficients. Read in O(SLn) = Q[x_ij]/(det X - 1) once normalized.
class CommutativeSlnPoly {
 public:
  explicit CommutativeSlnPoly(int n = 1) : n_(n) {}
  static CommutativeSlnPoly constant(int n, const Rational& c);
  static CommutativeSlnPoly variable(int n, int i, int j);
  static CommutativeSlnPoly monomial(const ExponentMatrix& e, const Rational& c = 1);
  /// det X = sum_sigma sgn(sigma) x_{1,s(1)}...x_{n,s(n)}.
  static CommutativeSlnPoly determinant(int n);

  int rank() const { return n_; }
  const std::map<ExponentMatrix, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const ExponentMatrix& e, const Rational& c);

  CommutativeSlnPoly& operator+=(const CommutativeSlnPoly& o);
  CommutativeSlnPoly& operator-=(const CommutativeSlnPoly& o);
  friend CommutativeSlnPoly operator+(CommutativeSlnPoly a, const CommutativeSlnPoly& b) { return a += b; }
  friend CommutativeSlnPoly operator-(CommutativeSlnPoly a, const CommutativeSlnPoly& b) { return a -= b; }
  friend CommutativeSlnPoly operator*(const CommutativeSlnPoly& a, const CommutativeSlnPoly& b);
  friend bool operator==(const CommutativeSlnPoly& a, const CommutativeSlnPoly& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

  std::string to_string() const;

 private:
  int n_;
  std::map<ExponentMatrix, Rational> terms_;
};

/// Rewrites x_11...x_nn -> 1 - sum_{sigma != id} sgn(sigma) x_sigma until every
/// term has a zero diagonal exponent.
CommutativeSlnPoly classical_normal_form(const CommutativeSlnPoly& p);

/// Evaluation at X = I.
Rational classical_counit(const CommutativeSlnPoly& p);

/// O_q(SLn) at v = zeta_m, so q = zeta_m^{2n}. Requires gcd(m, 2n) = 1.
class RootOfUnityContext {
 public:
  /// Throws std::invalid_argument unless m >= 1 and gcd(m, 2n) = 1.
  RootOfUnityContext(int n, int m, SlnOptions options = {});

  int rank() const { return n_; }
  int order() const { return m_; }
  const CyclotomicScalar& v_value() const { return v_; }
  const CyclotomicScalar& q_value() const { return q_; }
  const SlnAlgebra<CyclotomicScalar>& algebra() const { return algebra_; }

  /// u_ij^m, reduced; computed once.
  const NcPolynomial<CyclotomicScalar>& generator_power(int i, int j) const;

 private:
  int n_;
  int m_;
  CyclotomicScalar v_;
  CyclotomicScalar q_;
  SlnAlgebra<CyclotomicScalar> algebra_;
  mutable std::mutex power_mutex_;
  mutable std::map<int, NcPolynomial<CyclotomicScalar>> powers_;
};

/// x_ij -> u_ij^m, extended multiplicatively; the input is normalized first.
NcPolynomial<CyclotomicScalar> frobenius_image(const CommutativeSlnPoly& p, const RootOfUnityContext& ctx);

/// (a) both signed sums of m-th powers reduce to 1, (b) the coproduct of
/// u_ij^m is sum_k u_ik^m ⊗ u_kj^m, (c) every u_ij^m is central.
CheckReport check_power_identities(const RootOfUnityContext& ctx);

struct InjectivityResult {
  bool injective = false;
  std::size_t inputs = 0;
  /// Set when some image is not a single basis word m * e, or two images coincide.
  std::string failure;
};

/// Images of the O(SLn) basis monomials of degree <= bound.
InjectivityResult check_injectivity_on_basis(const RootOfUnityContext& ctx, int degree_bound);

struct SpanningCount {
  Integer formula;
  /// Brute-force count of exponent tuples in [0, m-1]^{n^2} with a zero diagonal
  /// entry; absent when m^{n^2} exceeds the enumeration limit.
  std::optional<Integer> enumerated;
  bool agrees() const { return !enumerated || *enumerated == formula; }
};

/// m^{n^2} - (m-1)^n m^{n^2-n}. Throws std::invalid_argument unless n, m >= 1.
SpanningCount spanning_set_count(int n, int m, long enumeration_limit = 5'000'000);

}  // namespace qcoord
