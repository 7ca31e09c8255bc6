#pragma once

#include <string>

#include "qcoord/intpoly.hpp"
#include "qcoord/laurent.hpp"

namespace qcoord {

/// Element of Q(zeta_m) = Q[x]/(Phi_m(x)), with x standing for zeta_m.
///
/// The residue always has degree < phi(m), so equality is residue equality.
/// Arithmetic between different m throws std::invalid_argument.
class CyclotomicScalar {
 public:
  /// Zero of Q(zeta_1) = Q.
  CyclotomicScalar() = default;
  CyclotomicScalar(int m, const Rational& constant);
  CyclotomicScalar(int m, IntPoly residue);

  /// zeta_m^k
  static CyclotomicScalar zeta(int m, int k = 1);

  int order() const { return m_; }
  const IntPoly& residue() const { return residue_; }
  bool is_zero() const { return residue_.is_zero(); }
  bool is_one() const;

  CyclotomicScalar& operator+=(const CyclotomicScalar& o);
  CyclotomicScalar& operator-=(const CyclotomicScalar& o);
  CyclotomicScalar& operator*=(const CyclotomicScalar& o);
  CyclotomicScalar operator-() const;
  friend CyclotomicScalar operator+(CyclotomicScalar a, const CyclotomicScalar& b) { return a += b; }
  friend CyclotomicScalar operator-(CyclotomicScalar a, const CyclotomicScalar& b) { return a -= b; }
  friend CyclotomicScalar operator*(CyclotomicScalar a, const CyclotomicScalar& b) { return a *= b; }
  friend bool operator==(const CyclotomicScalar& a, const CyclotomicScalar& b) {
    return a.m_ == b.m_ && a.residue_ == b.residue_;
  }

  CyclotomicScalar pow(long k) const;
  /// Throws std::domain_error for zero.
  CyclotomicScalar inverse() const;

  std::string to_string() const;

 private:
  void check_same(const CyclotomicScalar& o) const;
  int m_ = 1;
  IntPoly residue_;
};

/// The evaluation v -> zeta_m: exponents are reduced mod m (zeta^m = 1), then
/// the polynomial is reduced modulo Phi_m.
CyclotomicScalar specialize(const LaurentScalar& s, int m);

}  // namespace qcoord
