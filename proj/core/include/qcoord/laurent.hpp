#pragma once

#include <map>
#include <string>

#include "qcoord/rational.hpp"

namespace qcoord {

/// Exact Laurent polynomial in v = q^{1/2n} with rational coefficients.
///
/// One exponent step is one power of v, so q^{k/n} is v^{2k} and q itself is
/// v^{2n}. Zero coefficients are never stored.
class LaurentScalar {
 public:
  using Terms = std::map<int, Rational>;

  LaurentScalar() = default;
  LaurentScalar(long constant);  // NOLINT(google-explicit-constructor)
  explicit LaurentScalar(const Rational& constant);

  static LaurentScalar monomial(const Rational& coeff, int exponent);
  /// v^exponent
  static LaurentScalar v(int exponent = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  /// True iff the value is a single term c*v^k, i.e. a unit of the Laurent ring.
  bool is_unit() const { return terms_.size() == 1; }
  int min_exponent() const;
  int max_exponent() const;
  Rational coefficient(int exponent) const;

  LaurentScalar& operator+=(const LaurentScalar& other);
  LaurentScalar& operator-=(const LaurentScalar& other);
  LaurentScalar& operator*=(const LaurentScalar& other);
  LaurentScalar operator-() const;

  friend LaurentScalar operator+(LaurentScalar a, const LaurentScalar& b) { return a += b; }
  friend LaurentScalar operator-(LaurentScalar a, const LaurentScalar& b) { return a -= b; }
  friend LaurentScalar operator*(const LaurentScalar& a, const LaurentScalar& b);
  friend bool operator==(const LaurentScalar& a, const LaurentScalar& b) { return a.terms_ == b.terms_; }

  /// Negative powers are only defined for units.
  LaurentScalar pow(int k) const;
  /// Throws std::domain_error unless is_unit().
  LaurentScalar inverse() const;

  /// Evaluation at v = 1, i.e. the sum of all coefficients.
  Rational at_one() const;

  std::string to_string() const;

 private:
  void add_term(int exponent, const Rational& coeff);
  Terms terms_;
};

/// q^{k} in the rank-n exponent convention (v^{2nk}).
LaurentScalar q_power(int n, int k);

/// Greatest common divisor in Q[v, v^{-1}], normalized to a monic polynomial
/// with lowest exponent 0. gcd(0, 0) = 0.
LaurentScalar gcd(const LaurentScalar& a, const LaurentScalar& b);

/// a / b when b divides a exactly in Q[v, v^{-1}]; throws std::domain_error otherwise.
LaurentScalar exact_divide(const LaurentScalar& a, const LaurentScalar& b);

}  // namespace qcoord
