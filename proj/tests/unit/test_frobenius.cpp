#include "doctest.h"
#include "generators.hpp"
#include "qcoord/frobenius.hpp"

using namespace qcoord;
using qcoord::testing::Gen;
using CPoly = NcPolynomial<CyclotomicScalar>;

namespace {

CommutativeSlnPoly x(int n, int i, int j) { return CommutativeSlnPoly::variable(n, i, j); }

CommutativeSlnPoly random_commutative(Gen& g, int n, int max_degree, int terms) {
  CommutativeSlnPoly p(n);
  for (int t = 0; t < terms; ++t) {
    ExponentMatrix e(n);
    for (int k = g.integer(0, max_degree); k > 0; --k) e.at(g.integer(1, n), g.integer(1, n)) += 1;
    p.add_term(e, g.rational());
  }
  return p;
}

Integer brute_count(int n, int m) {
  // Tuples in [0, m-1]^{n^2} with some diagonal entry zero, counted directly.
  const int cells = n * n;
  std::vector<int> e(static_cast<std::size_t>(cells), 0);
  Integer count = 0;
  for (;;) {
    bool zero_diag = false;
    for (int i = 0; i < n; ++i) zero_diag = zero_diag || e[static_cast<std::size_t>(i * n + i)] == 0;
    if (zero_diag) ++count;
    int k = 0;
    while (k < cells && ++e[static_cast<std::size_t>(k)] == m) e[static_cast<std::size_t>(k++)] = 0;
    if (k == cells) return count;
  }
}

}  // namespace

TEST_CASE("commutative polynomials") {
  CommutativeSlnPoly p = x(2, 1, 2) * x(2, 1, 2);
  CHECK(p.to_string() == "x[1,2]^2");
  CHECK(CommutativeSlnPoly::determinant(2) == x(2, 1, 1) * x(2, 2, 2) - x(2, 1, 2) * x(2, 2, 1));
  CHECK((p - p).is_zero());
  CHECK(CommutativeSlnPoly::determinant(3).terms().size() == 6);
}

TEST_CASE("classical normal form") {
  CommutativeSlnPoly one = CommutativeSlnPoly::constant(2, 1);
  CHECK(classical_normal_form(x(2, 1, 1) * x(2, 2, 2)) == one + x(2, 1, 2) * x(2, 2, 1));
  for (int n = 1; n <= 3; ++n) CHECK(classical_normal_form(CommutativeSlnPoly::determinant(n)) == CommutativeSlnPoly::constant(n, 1));
  CHECK(classical_normal_form(x(2, 1, 2)) == x(2, 1, 2));
  CHECK(classical_counit(x(2, 1, 1) * x(2, 2, 2) + x(2, 1, 2)) == 1);
  Gen g(51);
  for (int trial = 0; trial < 60; ++trial) {
    CommutativeSlnPoly a = random_commutative(g, 2, 4, 3), b = random_commutative(g, 2, 4, 3);
    CommutativeSlnPoly na = classical_normal_form(a);
    for (const auto& [e, c] : na.terms()) CHECK(e.is_sln_basis());
    CHECK(classical_normal_form(na) == na);
    CHECK(classical_normal_form(na * classical_normal_form(b)) == classical_normal_form(a * b));
    CHECK(classical_counit(na) == classical_counit(a));
  }
}

TEST_CASE("root-of-unity context") {
  RootOfUnityContext ctx(2, 3);
  CHECK(ctx.v_value() == CyclotomicScalar::zeta(3));
  CHECK(ctx.q_value() == CyclotomicScalar::zeta(3, 4));
  CHECK_THROWS_AS(RootOfUnityContext(2, 2), std::invalid_argument);
  CHECK_THROWS_AS(RootOfUnityContext(3, 9), std::invalid_argument);
  CHECK_THROWS_AS(RootOfUnityContext(2, 0), std::invalid_argument);
}

TEST_CASE("frobenius images") {
  RootOfUnityContext ctx(2, 3);
  const auto& alg = ctx.algebra();
  CPoly u12 = alg.generator(1, 2);
  CHECK(frobenius_image(x(2, 1, 2), ctx) == alg.power(u12, 3));
  CHECK(frobenius_image(CommutativeSlnPoly::determinant(2), ctx) == CPoly::constant(alg.one()));
  CHECK(ctx.generator_power(2, 1) == alg.power(alg.generator(2, 1), 3));
  // The m-th powers are central only at the root of unity.
  auto generic = build_sln(2);
  auto cube = generic.power(generic.generator(1, 2), 3);
  CHECK_FALSE(generic.is_central(cube));
  CHECK(alg.is_central(ctx.generator_power(1, 2)));
}

TEST_CASE("frobenius is an algebra map compatible with the counit") {
  RootOfUnityContext ctx(2, 3);
  const auto& alg = ctx.algebra();
  Gen g(52);
  for (int trial = 0; trial < 50; ++trial) {
    CommutativeSlnPoly a = random_commutative(g, 2, 2, 2), b = random_commutative(g, 2, 2, 2);
    CPoly fa = frobenius_image(a, ctx), fb = frobenius_image(b, ctx);
    CHECK(frobenius_image(a * b, ctx) == alg.multiply(fa, fb));
    CHECK(frobenius_image(a + b, ctx) == fa + fb);
    CHECK(alg.counit(fa) == CyclotomicScalar(3, classical_counit(a)));
  }
}

TEST_CASE("power identities") {
  for (auto [n, m] : {std::pair{2, 3}, std::pair{2, 5}, std::pair{1, 3}}) {
    RootOfUnityContext ctx(n, m);
    CheckReport r = check_power_identities(ctx);
    CHECK(r.suite == "frobenius");
    CHECK(r.passed());
    CHECK(r.checks.size() == static_cast<std::size_t>(2 + 2 * n * n));
  }
}

TEST_CASE("injectivity on low-degree basis monomials") {
  RootOfUnityContext ctx(2, 3);
  InjectivityResult r = check_injectivity_on_basis(ctx, 2);
  CHECK(r.injective);
  CHECK(r.inputs == 14);
  CHECK(r.failure.empty());
}

TEST_CASE("spanning set counts") {
  CHECK(spanning_set_count(1, 7).formula == 1);
  CHECK(spanning_set_count(2, 3).formula == 45);
  CHECK(spanning_set_count(2, 5).formula == 225);
  for (int n = 1; n <= 3; ++n)
    for (int m = 1; m <= 5; ++m) {
      SpanningCount c = spanning_set_count(n, m);
      REQUIRE(c.enumerated.has_value());
      CHECK(c.agrees());
      if (n <= 2 || m <= 3) CHECK(brute_count(n, m) == c.formula);
    }
  CHECK_FALSE(spanning_set_count(4, 7, 1000).enumerated.has_value());
  CHECK_THROWS_AS(spanning_set_count(0, 3), std::invalid_argument);
}
