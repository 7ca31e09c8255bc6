#include "doctest.h"
#include "generators.hpp"
#include "qcoord/ncalg.hpp"
#include "qcoord/qmatrix.hpp"

using namespace qcoord;
using qcoord::testing::Gen;
using Poly = NcPolynomial<LaurentScalar>;

namespace {

NcMonomial w(std::initializer_list<int> codes) {
  std::string s;
  for (int c : codes) s.push_back(static_cast<char>(c));
  return NcMonomial(s);
}

// Rewrites at randomly chosen redexes until nothing applies. Any order must
// land on the same normal form if the system is confluent.
Poly reduce_randomly(const RewriteSystem<LaurentScalar>& rs, Poly p, Gen& g) {
  for (;;) {
    std::vector<std::pair<NcMonomial, std::size_t>> redexes;
    for (const auto& [m, c] : p.terms())
      for (std::size_t i = 0; i + 1 < m.degree(); ++i)
        if (rs.rule(m[i], m[i + 1])) redexes.emplace_back(m, i);
    if (redexes.empty()) return p;
    auto [m, pos] = redexes[static_cast<std::size_t>(g.integer(0, static_cast<int>(redexes.size()) - 1))];
    LaurentScalar c = *p.coefficient(m);
    p -= Poly(m, c);
    p += rs.rewrite_at(m, pos).scaled(c);
  }
}

}  // namespace

TEST_CASE("monomial basics") {
  NcMonomial a = w({0, 1}), b = w({3});
  CHECK((a * b).codes() == w({0, 1, 3}).codes());
  CHECK(NcMonomial::from_pairs(2, {{1, 2}, {2, 1}}) == w({1, 2}));
  CHECK(w({1, 2}).to_string(2) == "u[1,2]*u[2,1]");
  CHECK(w({0, 0, 3}).exponents(4) == std::vector<int>{2, 0, 0, 1});
  CHECK(w({3}) < w({0, 0}));
  CHECK(w({0, 1}) < w({1, 0}));
}

TEST_CASE("polynomial arithmetic is bilinear") {
  Gen g(21);
  for (int trial = 0; trial < 100; ++trial) {
    Poly a = g.polynomial(2, 3), b = g.polynomial(2, 3), c = g.polynomial(2, 3);
    LaurentScalar s = g.laurent();
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + b) * c == a * c + b * c);
    CHECK((a * b) * c == a * (b * c));
    CHECK((a.scaled(s)) * b == (a * b).scaled(s));
    CHECK((a - a).is_zero());
  }
}

TEST_CASE("free algebra dimensions") {
  RewriteSystem<LaurentScalar> free(2, LaurentScalar(1L));
  for (int d = 0; d <= 5; ++d) {
    Integer expected;
    mpz_ui_pow_ui(expected.get_mpz_t(), 4, static_cast<unsigned long>(d));
    CHECK(free.graded_dimension(d) == expected);
  }
  Poly p(w({3, 0, 1}), LaurentScalar(2L));
  CHECK(free.normal_form(p) == p);
}

TEST_CASE("rule validation") {
  RewriteSystem<LaurentScalar> rs(1, 2, LaurentScalar(1L));
  rs.add_rule(w({1, 0}), Poly(w({0, 1}), LaurentScalar::v(2)));
  CHECK_THROWS_AS(rs.add_rule(w({1, 0}), Poly()), std::invalid_argument);
  CHECK_THROWS_AS(rs.add_rule(w({1}), Poly()), std::invalid_argument);
  CHECK_THROWS_AS(rs.add_rule(w({1, 1}), Poly(w({1, 1, 0}), LaurentScalar(1L))), std::invalid_argument);
  // Quantum plane: ba -> v^2 ab, so b^2 a^2 -> v^8 a^2 b^2.
  CHECK(rs.normal_form(w({1, 1, 0, 0})) == Poly(w({0, 0, 1, 1}), LaurentScalar::v(8)));
  CHECK(rs.graded_dimension(3) == 4);
  CHECK_THROWS_AS(rs.rewrite_at(w({0, 1}), 0), std::invalid_argument);
}

TEST_CASE("memoized and uncached normal forms agree") {
  auto alg = build_algebra(2, true);
  auto plain = build_algebra(2, false);
  Gen g(22);
  for (int trial = 0; trial < 60; ++trial) {
    NcMonomial m = g.word(2, g.integer(0, 6));
    CHECK(alg.normal_form(m) == plain.normal_form(m));
  }
}

TEST_CASE("random redex order reaches the same normal form") {
  for (int n : {2, 3}) {
    auto alg = build_algebra(n);
    Gen g(23 + static_cast<std::uint64_t>(n));
    for (int trial = 0; trial < (n == 2 ? 80 : 30); ++trial) {
      NcMonomial m = g.word(n, g.integer(2, n == 2 ? 5 : 4));
      Poly expected = alg.normal_form(m);
      for (int order = 0; order < 3; ++order)
        CHECK(reduce_randomly(alg.system(), Poly(m, LaurentScalar(1L)), g) == expected);
    }
  }
}

TEST_CASE("normal form is idempotent, linear and lands on normal words") {
  auto alg = build_algebra(2);
  const auto& rs = alg.system();
  Gen g(24);
  for (int trial = 0; trial < 100; ++trial) {
    Poly a = g.polynomial(2, 4), b = g.polynomial(2, 4);
    LaurentScalar s = g.laurent();
    Poly na = normal_form(a, rs);
    CHECK(normal_form(na, rs) == na);
    CHECK(normal_form(a.scaled(s) + b, rs) == na.scaled(s) + normal_form(b, rs));
    for (const auto& [m, c] : na.terms()) CHECK(rs.is_normal(m));
    CHECK(multiply(multiply(a, b, rs), a, rs) == multiply(a, multiply(b, a, rs), rs));
  }
}

TEST_CASE("tensor products") {
  auto alg = build_algebra(2);
  const auto& rs = alg.system();
  TensorElement<LaurentScalar> unit(NcMonomial(), NcMonomial(), LaurentScalar(1L));
  auto d11 = alg.coproduct(alg.generator(1, 1));
  CHECK(tensor_multiply(unit, d11, rs) == d11);
  CHECK(tensor_multiply(d11, unit, rs) == d11);
  auto d12 = alg.coproduct(alg.generator(1, 2));
  CHECK(tensor_multiply(d11, d12, rs) == alg.coproduct(alg.multiply(alg.generator(1, 1), alg.generator(1, 2))));
  CHECK(tensor_multiply(d12, d11, rs) == alg.coproduct(alg.multiply(alg.generator(1, 2), alg.generator(1, 1))));
  CHECK(d11.size() == 2);
  CHECK(TensorElement<LaurentScalar>::outer(alg.generator(1, 1), alg.generator(2, 2)) ==
        TensorElement<LaurentScalar>(w({0}), w({3}), LaurentScalar(1L)));
}
