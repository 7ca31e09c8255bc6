#include "qcoord/cyclotomic.hpp"

#include <stdexcept>

namespace qcoord {

CyclotomicScalar::CyclotomicScalar(int m, const Rational& constant)
    : m_(m), residue_(IntPoly::constant(constant)) {
  if (m < 1) throw std::invalid_argument("cyclotomic order must be positive");
}

CyclotomicScalar::CyclotomicScalar(int m, IntPoly residue) : m_(m) {
  if (m < 1) throw std::invalid_argument("cyclotomic order must be positive");
  const IntPoly& phi = cyclotomic_poly(m);
  residue_ = residue.degree() >= phi.degree() ? residue % phi : std::move(residue);
}

CyclotomicScalar CyclotomicScalar::zeta(int m, int k) {
  k %= m;
  if (k < 0) k += m;
  return {m, IntPoly::monomial(1, k)};
}

bool CyclotomicScalar::is_one() const { return residue_ == IntPoly::constant(1); }

void CyclotomicScalar::check_same(const CyclotomicScalar& o) const {
  if (m_ != o.m_)
    throw std::invalid_argument("cyclotomic ring mismatch: Q(zeta_" + std::to_string(m_) +
                                ") vs Q(zeta_" + std::to_string(o.m_) + ")");
}

CyclotomicScalar& CyclotomicScalar::operator+=(const CyclotomicScalar& o) {
  check_same(o);
  residue_ += o.residue_;
  return *this;
}

CyclotomicScalar& CyclotomicScalar::operator-=(const CyclotomicScalar& o) {
  check_same(o);
  residue_ -= o.residue_;
  return *this;
}

CyclotomicScalar& CyclotomicScalar::operator*=(const CyclotomicScalar& o) {
  check_same(o);
  if (residue_.is_zero() || o.residue_.is_zero()) {
    residue_ = IntPoly();
    return *this;
  }
  residue_ = (residue_ * o.residue_) % cyclotomic_poly(m_);
  return *this;
}

CyclotomicScalar CyclotomicScalar::operator-() const {
  CyclotomicScalar r = *this;
  r.residue_ = -r.residue_;
  return r;
}

CyclotomicScalar CyclotomicScalar::pow(long k) const {
  if (k < 0) return inverse().pow(-k);
  CyclotomicScalar result(m_, Rational(1));
  CyclotomicScalar base = *this;
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k > 0) base *= base;
  }
  return result;
}

CyclotomicScalar CyclotomicScalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero in Q(zeta_" + std::to_string(m_) + ")");
  // Phi_m is irreducible, so gcd(residue, Phi_m) = 1.
  auto [g, s] = half_extended_gcd(residue_, cyclotomic_poly(m_));
  if (g.degree() != 0) throw std::logic_error("cyclotomic polynomial not coprime to residue");
  return {m_, s};
}

std::string CyclotomicScalar::to_string() const { return residue_.to_string('v'); }

CyclotomicScalar specialize(const LaurentScalar& s, int m) {
  if (m < 1) throw std::invalid_argument("specialize needs m >= 1");
  std::vector<Rational> folded(static_cast<std::size_t>(m), Rational(0));
  for (const auto& [e, c] : s.terms()) {
    int k = e % m;
    if (k < 0) k += m;
    folded[static_cast<std::size_t>(k)] += c;
  }
  return {m, IntPoly(std::move(folded))};
}

}  // namespace qcoord
