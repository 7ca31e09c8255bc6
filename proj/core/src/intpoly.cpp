#include "qcoord/intpoly.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace qcoord {

IntPoly::IntPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPoly IntPoly::constant(const Rational& c) { return IntPoly({c}); }

IntPoly IntPoly::monomial(const Rational& c, int k) {
  std::vector<Rational> v(static_cast<std::size_t>(k) + 1, Rational(0));
  v.back() = c;
  return IntPoly(std::move(v));
}

void IntPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational IntPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return 0;
  return c_[static_cast<std::size_t>(k)];
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> r(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return IntPoly(std::move(r));
}

IntPoly operator*(const Rational& s, const IntPoly& a) {
  if (s == 0) return {};
  IntPoly r = a;
  for (auto& x : r.c_) x *= s;
  return r;
}

std::pair<IntPoly, IntPoly> IntPoly::divmod(const IntPoly& d) const {
  if (d.is_zero()) throw std::domain_error("polynomial division by zero");
  if (degree() < d.degree()) return {IntPoly(), *this};
  std::vector<Rational> rem = c_;
  std::vector<Rational> quot(c_.size() - d.c_.size() + 1, Rational(0));
  const Rational& lead = d.c_.back();
  for (int k = static_cast<int>(quot.size()) - 1; k >= 0; --k) {
    const Rational& top = rem[static_cast<std::size_t>(k) + d.c_.size() - 1];
    if (top == 0) continue;
    Rational f = top / lead;
    quot[static_cast<std::size_t>(k)] = f;
    for (std::size_t j = 0; j < d.c_.size(); ++j) rem[static_cast<std::size_t>(k) + j] -= f * d.c_[j];
  }
  return {IntPoly(std::move(quot)), IntPoly(std::move(rem))};
}

IntPoly IntPoly::monic() const {
  if (is_zero()) return {};
  return Rational(1 / leading()) * *this;
}

std::string IntPoly::to_string(char var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = c_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      out << qcoord::to_string(mag);
      continue;
    }
    if (mag != 1) out << qcoord::to_string(mag) << "*";
    out << var;
    if (k != 1) out << "^" << k;
  }
  return out.str();
}

IntPoly gcd(IntPoly a, IntPoly b) {
  while (!b.is_zero()) {
    IntPoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

std::pair<IntPoly, IntPoly> half_extended_gcd(const IntPoly& a, const IntPoly& b) {
  // Invariant: r0 = s0*a (mod b), r1 = s1*a (mod b).
  IntPoly r0 = a, r1 = b, s0 = IntPoly::constant(1), s1;
  while (!r1.is_zero()) {
    auto [quot, rem] = r0.divmod(r1);
    IntPoly s2 = s0 - quot * s1;
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0.is_zero()) return {IntPoly(), IntPoly()};
  Rational inv = 1 / r0.leading();
  return {inv * r0, inv * s0};
}

int euler_phi(int m) {
  int result = m;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

const IntPoly& cyclotomic_poly(int m) {
  if (m < 1) throw std::invalid_argument("cyclotomic_poly needs m >= 1");
  static std::mutex mutex;
  static std::map<int, IntPoly> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(m); it != cache.end()) return it->second;
  }
  IntPoly p = IntPoly::monomial(1, m) - IntPoly::constant(1);
  for (int d = 1; d < m; ++d) {
    if (m % d != 0) continue;
    auto [quot, rem] = p.divmod(cyclotomic_poly(d));
    if (!rem.is_zero()) throw std::logic_error("cyclotomic division left a remainder");
    p = std::move(quot);
  }
  std::lock_guard lock(mutex);
  return cache.emplace(m, std::move(p)).first->second;
}

}  // namespace qcoord
