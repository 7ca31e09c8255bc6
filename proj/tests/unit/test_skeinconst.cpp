#include "doctest.h"
#include "qcoord/permutation.hpp"
#include "qcoord/skeinconst.hpp"

using namespace qcoord;

namespace {

// Inversion-count generating function, by the product formula
// prod_{j=1..k} (1 + x + ... + x^{j-1}) with x = q^2.
LaurentScalar inversion_polynomial(int k, int n) {
  LaurentScalar out(1L);
  for (int j = 1; j <= k; ++j) {
    LaurentScalar factor;
    for (int e = 0; e < j; ++e) factor += q_power(n, 2 * e);
    out *= factor;
  }
  return out;
}

}  // namespace

TEST_CASE("permutations") {
  Permutation p({3, 1, 2});
  CHECK(p.length() == 2);
  CHECK(p.sign() == 1);
  CHECK(Permutation({2, 1}).sign() == -1);
  CHECK(Permutation(4).is_identity());
  CHECK_THROWS_AS(Permutation({1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({0, 1}), std::invalid_argument);
  for (int k = 0; k <= 6; ++k) {
    auto all = all_permutations(k);
    long expected = 1;
    for (int j = 2; j <= k; ++j) expected *= j;
    CHECK(all.size() == static_cast<std::size_t>(expected));
    for (std::size_t i = 1; i < all.size(); ++i) CHECK(all[i - 1].images() < all[i].images());
  }
}

TEST_CASE("rank-two constants") {
  ConstantTable t = constants(2);
  CHECK(t.c_at(1) == LaurentScalar::monomial(-1, 5));
  CHECK(t.c_at(2) == LaurentScalar::v(1));
  CHECK(t.t == LaurentScalar::monomial(-1, 6));
  CHECK(t.t_half == LaurentScalar::monomial(-1, 6));
  CHECK(t.a == LaurentScalar::v(-5));
  CHECK(t.d_n == -1);
  ConstantTable one = constants(1);
  CHECK(one.c_at(1).is_one());
  CHECK(one.t.is_one());
  CHECK(one.d_n == 1);
  CHECK_THROWS_AS(constants(0), std::invalid_argument);
}

TEST_CASE("constant identities hold for small ranks") {
  for (int n = 1; n <= 6; ++n) {
    CAPTURE(n);
    CHECK(check_constant_identities(n));
    ConstantTable t = constants(n);
    CHECK(t.d_n * t.d_n == 1);
    CHECK(t.t_half * t.t_half == t.t.pow(n));
    for (const auto& c : t.c) CHECK(c.is_unit());
    LaurentScalar prod(1L);
    for (const auto& c : t.c) prod *= c;
    CHECK(prod == t.t_half);
    for (int i = 1; i <= n; ++i) CHECK(t.c_at(i) * t.c_at(dual_state(n, i)) == t.t);
  }
}

TEST_CASE("quantum numbers") {
  CHECK(q_number(1, QNumberKind::integer, 2).is_one());
  CHECK(q_number(2, QNumberKind::integer, 2) == q_power(2, 1) + q_power(2, -1));
  CHECK(q_number(3, QNumberKind::integer, 1) == q_power(1, 2) + LaurentScalar(1L) + q_power(1, -2));
  CHECK(q_number(3, QNumberKind::factorial, 2) ==
        q_number(2, QNumberKind::integer, 2) * q_number(3, QNumberKind::integer, 2));
  CHECK(q_number(0, QNumberKind::factorial, 3).is_one());
  for (int k = 1; k <= 6; ++k) CHECK(q_number(k, QNumberKind::integer, 3).at_one() == k);
}

TEST_CASE("permutation length sum") {
  for (int n = 1; n <= 4; ++n)
    for (int k = 1; k <= 6; ++k) {
      CAPTURE(n);
      CAPTURE(k);
      CHECK(permutation_length_sum(k, n) == inversion_polynomial(k, n));
      CHECK(perm_sum_identity(k, n));
      CHECK(permutation_length_sum(k, n) ==
            q_number(k, QNumberKind::factorial, n) * q_power(n, k * (k - 1) / 2));
    }
  CHECK_THROWS_AS(perm_sum_identity(9, 2), std::invalid_argument);
}

TEST_CASE("height exchange coefficients") {
  HeightExchangeCoeffs generic = height_exchange_coeffs(3, 1, 2);
  CHECK(generic.kind == HeightExchangeCoeffs::Case::generic);
  CHECK(generic.lead == LaurentScalar::v(2));
  CHECK(generic.cross.empty());
  HeightExchangeCoeffs dual = height_exchange_coeffs(3, 1, 3);
  CHECK(dual.kind == HeightExchangeCoeffs::Case::dual);
  CHECK(dual.cross.empty());
  HeightExchangeCoeffs inner = height_exchange_coeffs(3, 3, 1);
  CHECK(inner.cross.size() == 2);
  CHECK(inner.lead == LaurentScalar::v(-4));
  CHECK_THROWS_AS(height_exchange_coeffs(2, 3, 1), std::invalid_argument);
}

TEST_CASE("height exchange degenerates at v = 1") {
  for (int n = 1; n <= 5; ++n)
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        HeightExchangeCoeffs h = height_exchange_coeffs(n, i, j);
        CHECK(h.lead.at_one() == 1);
        for (const auto& [k, c] : h.cross) {
          CHECK(k > j);
          CHECK(c.at_one() == 0);
        }
      }
}
