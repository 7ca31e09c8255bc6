#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qcoord/rational.hpp"

namespace qcoord {

/// Dense univariate polynomial over Q, lowest degree first. The leading
/// coefficient is nonzero unless the polynomial is zero (empty vector).
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Rational> coeffs);
  static IntPoly constant(const Rational& c);
  /// c * x^k
  static IntPoly monomial(const Rational& c, int k);

  const std::vector<Rational>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Rational coeff(int k) const;
  const Rational& leading() const { return c_.back(); }

  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  IntPoly operator-() const;
  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const Rational& s, const IntPoly& a);
  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }

  /// Quotient and remainder; throws std::domain_error on division by zero.
  std::pair<IntPoly, IntPoly> divmod(const IntPoly& d) const;
  IntPoly operator%(const IntPoly& d) const { return divmod(d).second; }
  IntPoly monic() const;

  std::string to_string(char var = 'x') const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Monic gcd.
IntPoly gcd(IntPoly a, IntPoly b);

/// Returns (g, s) with s*a == g (mod b), g = gcd(a, b) monic.
std::pair<IntPoly, IntPoly> half_extended_gcd(const IntPoly& a, const IntPoly& b);

/// The m-th cyclotomic polynomial, by exact division of x^m - 1 by Phi_d for
/// the proper divisors d of m. Results are cached; thread-safe.
const IntPoly& cyclotomic_poly(int m);

/// Euler's totient.
int euler_phi(int m);

}  // namespace qcoord
