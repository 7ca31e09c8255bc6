#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "qcoord/cyclotomic.hpp"
#include "qcoord/laurent.hpp"
#include "qcoord/ncalg.hpp"

namespace qcoord::testing {

/// Hand-rolled generators for property tests; every draw is a function of the seed.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin() { return integer(0, 1) == 1; }

  Rational rational() {
    int num = integer(-9, 9);
    int den = integer(1, 5);
    Rational r(num, den);
    r.canonicalize();
    return r;
  }

  LaurentScalar laurent(int max_terms = 3, int spread = 6) {
    LaurentScalar s;
    for (int k = integer(0, max_terms); k > 0; --k) s += LaurentScalar::monomial(rational(), integer(-spread, spread));
    return s;
  }

  LaurentScalar nonzero_laurent(int max_terms = 3, int spread = 6) {
    for (;;) {
      LaurentScalar s = laurent(max_terms, spread);
      if (!s.is_zero()) return s;
    }
  }

  /// A word of the given degree in the n^2 generators, any order.
  NcMonomial word(int n, int degree) {
    std::string codes;
    for (int k = 0; k < degree; ++k) codes.push_back(static_cast<char>(integer(0, n * n - 1)));
    return NcMonomial(codes);
  }

  NcPolynomial<LaurentScalar> polynomial(int n, int max_degree, int terms = 3) {
    NcPolynomial<LaurentScalar> p;
    for (int k = 0; k < terms; ++k) p.add_term(word(n, integer(0, max_degree)), nonzero_laurent(2, 4));
    return p;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace qcoord::testing
