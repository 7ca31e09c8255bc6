#include "qcoord/laurent.hpp"

#include <sstream>
#include <stdexcept>

#include "qcoord/intpoly.hpp"

namespace qcoord {

LaurentScalar::LaurentScalar(long constant) {
  if (constant != 0) terms_.emplace(0, Rational(constant));
}

LaurentScalar::LaurentScalar(const Rational& constant) {
  if (constant != 0) terms_.emplace(0, constant);
}

LaurentScalar LaurentScalar::monomial(const Rational& coeff, int exponent) {
  LaurentScalar s;
  if (coeff != 0) s.terms_.emplace(exponent, coeff);
  return s;
}

LaurentScalar LaurentScalar::v(int exponent) { return monomial(Rational(1), exponent); }

bool LaurentScalar::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
}

int LaurentScalar::min_exponent() const {
  if (terms_.empty()) throw std::domain_error("min_exponent of zero");
  return terms_.begin()->first;
}

int LaurentScalar::max_exponent() const {
  if (terms_.empty()) throw std::domain_error("max_exponent of zero");
  return terms_.rbegin()->first;
}

Rational LaurentScalar::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentScalar::add_term(int exponent, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(exponent, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentScalar& LaurentScalar::operator+=(const LaurentScalar& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

LaurentScalar& LaurentScalar::operator-=(const LaurentScalar& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

LaurentScalar operator*(const LaurentScalar& a, const LaurentScalar& b) {
  LaurentScalar r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
  return r;
}

LaurentScalar& LaurentScalar::operator*=(const LaurentScalar& other) {
  *this = *this * other;
  return *this;
}

LaurentScalar LaurentScalar::operator-() const {
  LaurentScalar r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

LaurentScalar LaurentScalar::pow(int k) const {
  if (k < 0) return inverse().pow(-k);
  LaurentScalar result(1L);
  LaurentScalar base = *this;
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k > 0) base *= base;
  }
  return result;
}

LaurentScalar LaurentScalar::inverse() const {
  if (!is_unit()) throw std::domain_error("Laurent scalar " + to_string() + " is not a unit");
  const auto& [e, c] = *terms_.begin();
  return monomial(1 / c, -e);
}

Rational LaurentScalar::at_one() const {
  Rational sum = 0;
  for (const auto& [e, c] : terms_) sum += c;
  return sum;
}

std::string LaurentScalar::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  // Highest power first reads naturally.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      out << qcoord::to_string(mag);
      continue;
    }
    if (mag != 1) out << qcoord::to_string(mag) << "*";
    out << "v";
    if (e != 1) out << "^" << e;
  }
  return out.str();
}

LaurentScalar q_power(int n, int k) { return LaurentScalar::v(2 * n * k); }

namespace {

IntPoly to_poly(const LaurentScalar& s, int shift) {
  std::vector<Rational> c;
  for (const auto& [e, x] : s.terms()) {
    auto idx = static_cast<std::size_t>(e - shift);
    if (c.size() <= idx) c.resize(idx + 1, Rational(0));
    c[idx] = x;
  }
  return IntPoly(std::move(c));
}

LaurentScalar from_poly(const IntPoly& p, int shift) {
  LaurentScalar s;
  for (int k = 0; k <= p.degree(); ++k)
    if (p.coeff(k) != 0) s += LaurentScalar::monomial(p.coeff(k), k + shift);
  return s;
}

}  // namespace

LaurentScalar gcd(const LaurentScalar& a, const LaurentScalar& b) {
  if (a.is_zero() && b.is_zero()) return {};
  IntPoly pa = a.is_zero() ? IntPoly() : to_poly(a, a.min_exponent());
  IntPoly pb = b.is_zero() ? IntPoly() : to_poly(b, b.min_exponent());
  return from_poly(gcd(pa, pb), 0);
}

LaurentScalar exact_divide(const LaurentScalar& a, const LaurentScalar& b) {
  if (b.is_zero()) throw std::domain_error("division by zero Laurent scalar");
  if (a.is_zero()) return {};
  int sa = a.min_exponent();
  int sb = b.min_exponent();
  auto [quot, rem] = to_poly(a, sa).divmod(to_poly(b, sb));
  if (!rem.is_zero())
    throw std::domain_error(b.to_string() + " does not divide " + a.to_string());
  return from_poly(quot, sa - sb);
}

}  // namespace qcoord
