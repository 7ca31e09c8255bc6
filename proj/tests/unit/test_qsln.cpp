#include "doctest.h"
#include "generators.hpp"
#include "qcoord/frobenius.hpp"
#include "qcoord/qsln.hpp"

using namespace qcoord;
using qcoord::testing::Gen;
using Poly = NcPolynomial<LaurentScalar>;
using CPoly = NcPolynomial<CyclotomicScalar>;

namespace {

Poly u(int n, int i, int j) { return Poly(NcMonomial::generator(generator_code(n, i, j)), LaurentScalar(1L)); }

const SlnAlgebra<LaurentScalar>& sl(int n) {
  static const SlnAlgebra<LaurentScalar> two = build_sln(2);
  static const SlnAlgebra<LaurentScalar> three = build_sln(3);
  return n == 2 ? two : three;
}

CPoly specialize_poly(const Poly& p, int m) {
  return map_coefficients<CyclotomicScalar>(p, [m](const LaurentScalar& s) { return specialize(s, m); });
}

}  // namespace

TEST_CASE("exponent matrices") {
  ExponentMatrix e = ExponentMatrix::of(2, NcMonomial::from_pairs(2, {{2, 1}, {1, 2}, {1, 2}}));
  CHECK(e.at(1, 2) == 2);
  CHECK(e.at(2, 1) == 1);
  CHECK(e.degree() == 3);
  CHECK(e.is_sln_basis());
  CHECK(e.off_diagonal_weight() == 3);
  CHECK(e.monomial() == NcMonomial::from_pairs(2, {{1, 2}, {1, 2}, {2, 1}}));
  CHECK(e.to_string() == "[[0,2],[1,0]]");
  CHECK_FALSE(ExponentMatrix::identity(3).is_sln_basis());
  CHECK(ExponentMatrix::identity(3).min_diagonal() == 1);
  CHECK_THROWS_AS(e.at(3, 1), std::out_of_range);
  CHECK_THROWS_AS(ExponentMatrix(2, {1, 2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(ExponentMatrix(2, {1, -2, 3, 0}), std::invalid_argument);
  ExponentMatrix f = ExponentMatrix::unit(2, 1, 1);
  f += e;
  CHECK(f.scaled(2).degree() == 8);
}

TEST_CASE("basis enumeration") {
  CHECK(basis_monomials(2, 0).size() == 1);
  CHECK(basis_monomials(2, 1).size() == 5);
  CHECK(basis_monomials(2, 2).size() == 14);
  // Degree-d monomials minus those divisible by u11 u22 (or u11 u22 u33).
  CHECK(basis_monomials(3, 3).size() == 1 + 9 + 45 + (165 - 1));
  CHECK(pbw_words(2, 3).size() == 20);
  for (const auto& e : basis_monomials(3, 3)) CHECK(e.is_sln_basis());
}

TEST_CASE("reduction examples") {
  const auto& a = sl(2);
  LaurentScalar q = q_power(2, 1);
  CHECK(a.normal_form(u(2, 1, 1) * u(2, 2, 2)) == Poly::constant(LaurentScalar(1L)) + (u(2, 1, 2) * u(2, 2, 1)).scaled(q));
  CHECK(a.normal_form(quantum_det(2)) == Poly::constant(LaurentScalar(1L)));
  CHECK(a.normal_form(quantum_det(2, DetForm::row)) == Poly::constant(LaurentScalar(1L)));
  CHECK(a.normal_form(u(2, 1, 2)) == u(2, 1, 2));
  CHECK(sl(3).normal_form(quantum_det(3)) == Poly::constant(LaurentScalar(1L)));
  Poly p = a.normal_form(u(2, 2, 2) * u(2, 1, 1) * u(2, 2, 2) * u(2, 1, 1));
  for (const auto& [m, c] : p.terms()) CHECK(ExponentMatrix::of(2, m).is_sln_basis());
}

TEST_CASE("reduction is idempotent and linear") {
  for (int n : {2, 3}) {
    const auto& a = sl(n);
    Gen g(40 + static_cast<std::uint64_t>(n));
    for (int trial = 0; trial < (n == 2 ? 60 : 20); ++trial) {
      Poly x = g.polynomial(n, n == 2 ? 4 : 3), y = g.polynomial(n, n == 2 ? 4 : 3);
      LaurentScalar s = g.laurent();
      Poly nx = a.normal_form(x);
      CHECK(a.normal_form(nx) == nx);
      CHECK(a.normal_form(x.scaled(s) - y) == nx.scaled(s) - a.normal_form(y));
    }
  }
}

TEST_CASE("multiplication is associative") {
  const auto& a = sl(2);
  Gen g(43);
  for (int trial = 0; trial < 200; ++trial) {
    Poly x = g.polynomial(2, 2, 2), y = g.polynomial(2, 2, 2), z = g.polynomial(2, 2, 2);
    CHECK(a.multiply(a.multiply(x, y), z) == a.multiply(x, a.multiply(y, z)));
  }
  const auto& b = sl(3);
  for (int trial = 0; trial < 30; ++trial) {
    Poly x = g.polynomial(3, 2, 2), y = g.polynomial(3, 1, 2), z = g.polynomial(3, 2, 2);
    CHECK(b.multiply(b.multiply(x, y), z) == b.multiply(x, b.multiply(y, z)));
  }
}

TEST_CASE("elimination oracle agrees with the det queue") {
  for (auto [n, m, bound] : {std::tuple{2, 5, 4}, std::tuple{2, 7, 4}, std::tuple{3, 5, 3}}) {
    SlnAlgebra<CyclotomicScalar> queue = build_sln_at_root(n, m);
    SlnAlgebra<CyclotomicScalar> elim = build_sln_at_root(n, m, SlnOptions{default_step_budget(), SlnStrategy::linear_algebra});
    const SlnAlgebra<LaurentScalar>& generic = sl(n);
    for (int d = n; d <= bound; ++d)
      for (const NcMonomial& w : pbw_words(n, d)) {
        if (ExponentMatrix::of(n, w).is_sln_basis()) continue;
        CPoly expected = queue.normal_form(w);
        CHECK(elim.normal_form(w) == expected);
        CHECK(specialize_poly(generic.normal_form(w), m) == expected);
      }
  }
}

TEST_CASE("classical limit agrees with the commutative rewrite") {
  for (int n : {2, 3}) {
    SlnAlgebra<CyclotomicScalar> at_one = build_sln_at_root(n, 1);
    for (int d = n; d <= (n == 2 ? 4 : 3); ++d)
      for (const NcMonomial& w : pbw_words(n, d)) {
        CommutativeSlnPoly expected = classical_normal_form(CommutativeSlnPoly::monomial(ExponentMatrix::of(n, w)));
        CommutativeSlnPoly got(n);
        CPoly reduced = at_one.normal_form(w);
        for (const auto& [m, c] : reduced.terms())
          got.add_term(ExponentMatrix::of(n, m), c.residue().coeff(0));
        CHECK(got == expected);
      }
  }
}

TEST_CASE("coproduct is an algebra map") {
  const auto& a = sl(2);
  auto reduce = [&](const NcMonomial& m) { return a.normal_form(m); };
  Gen g(44);
  for (int trial = 0; trial < 100; ++trial) {
    Poly x = a.normal_form(g.polynomial(2, 2, 2)), y = a.normal_form(g.polynomial(2, 2, 2));
    CHECK(a.coproduct(a.multiply(x, y)) == tensor_multiply(a.coproduct(x), a.coproduct(y), reduce));
  }
  CHECK(a.coproduct(a.det_expansion() - Poly::constant(LaurentScalar(1L))).is_zero());
}

TEST_CASE("counit and antipode") {
  const auto& a = sl(2);
  LaurentScalar q = q_power(2, 1);
  CHECK(a.counit(u(2, 1, 1)).is_one());
  CHECK(a.counit(u(2, 1, 2)).is_zero());
  CHECK(a.counit(u(2, 1, 1) * u(2, 2, 2)).is_one());
  CHECK(a.counit(u(2, 1, 2) * u(2, 2, 1)).is_zero());
  CHECK(a.generator_antipode(1, 1) == u(2, 2, 2));
  CHECK(a.generator_antipode(2, 2) == u(2, 1, 1));
  CHECK(a.generator_antipode(1, 2) == u(2, 1, 2).scaled(-q.inverse()));
  CHECK(a.generator_antipode(2, 1) == u(2, 2, 1).scaled(-q));
  Gen g(45);
  for (int trial = 0; trial < 40; ++trial) {
    Poly x = a.normal_form(g.polynomial(2, 2, 2)), y = a.normal_form(g.polynomial(2, 2, 2));
    CHECK(a.antipode(a.multiply(x, y)) == a.multiply(a.antipode(y), a.antipode(x)));
    CHECK(a.counit(a.multiply(x, y)) == a.counit(x) * a.counit(y));
  }
}

TEST_CASE("hopf report") {
  CheckReport two = check_hopf_axioms(2);
  CHECK(two.suite == "hopf");
  CHECK(two.passed());
  CHECK(two.checks.size() > 50);
}

TEST_CASE("reduction limits") {
  SlnAlgebra<LaurentScalar> tight = build_sln(2, SlnOptions{1, SlnStrategy::det_queue});
  CHECK_NOTHROW(tight.normal_form(u(2, 1, 1) * u(2, 2, 2)));
  CHECK_THROWS_AS(tight.normal_form(u(2, 1, 1) * u(2, 1, 1) * u(2, 2, 2) * u(2, 2, 2)), StepBudgetExceeded);
  CHECK_THROWS_AS(build_sln(2, SlnOptions{default_step_budget(), SlnStrategy::linear_algebra}), std::invalid_argument);
}

TEST_CASE("bigon elements") {
  CHECK(bigon_element(3, 2, 1) == u(3, 2, 1));
  CHECK_THROWS_AS(bigon_element(2, 3, 1), std::out_of_range);
}
