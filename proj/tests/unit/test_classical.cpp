#include <cmath>

#include "doctest.h"
#include "qcoord/classical.hpp"

using namespace qcoord;

namespace {

ComplexMatrix real_matrix(int n, std::initializer_list<double> rows) {
  ComplexMatrix m(n, n);
  auto it = rows.begin();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = *it++;
  return m;
}

bool throws_with(const std::function<void()>& f, const std::string& fragment) {
  try {
    f();
  } catch (const std::invalid_argument& e) {
    return std::string(e.what()).find(fragment) != std::string::npos;
  }
  return false;
}

}  // namespace

TEST_CASE("the matrix A") {
  CHECK(relative_deviation(matrix_A(1), real_matrix(1, {1})) == 0);
  CHECK(relative_deviation(matrix_A(2), real_matrix(2, {0, 1, -1, 0})) == 0);
  CHECK(relative_deviation(matrix_A(3), real_matrix(3, {0, 0, 1, 0, -1, 0, 1, 0, 0})) == 0);
  for (int n = 1; n <= 6; ++n) {
    ComplexMatrix a = matrix_A(n);
    double dn = n % 2 ? 1.0 : -1.0;
    CHECK(relative_deviation(a * a, dn * ComplexMatrix::Identity(n, n)) < 1e-15);
    CHECK(std::abs(a.determinant() - 1.0) < 1e-12);
  }
  CHECK_THROWS_AS(matrix_A(0), std::invalid_argument);
}

TEST_CASE("random SL(n) draws") {
  for (int n = 1; n <= 5; ++n)
    for (std::uint64_t seed : {1u, 2u, 99u}) {
      ComplexMatrix m = random_sln(n, seed);
      CHECK(std::abs(m.determinant() - 1.0) < 1e-12);
      CHECK(relative_deviation(m, random_sln(n, seed)) == 0);
    }
  CHECK(relative_deviation(random_sln(3, 1), random_sln(3, 2)) > 1e-3);
}

TEST_CASE("groupoid words") {
  GroupoidPresentation free = GroupoidPresentation::free_group({"a", "b"});
  GroupoidWord w = free.parse("a b^-1 a");
  CHECK(w.letters.size() == 3);
  CHECK(w.letters[1] == GroupoidLetter{"b", -1});
  CHECK(w.to_string() == "a b^-1 a");
  CHECK(w.inverse().to_string() == "a^-1 b a^-1");
  CHECK(free.parse("1").is_identity());
  CHECK(free.parse("").to_string() == "1");
  CHECK(free.parse("a^1") == free.parse("a"));
  CHECK((w * w.inverse()).letters.size() == 6);
  CHECK(throws_with([&] { free.parse("a c"); }, "unknown generator 'c' at position 2"));
  CHECK(throws_with([&] { free.parse("a^2"); }, "bad exponent '2' at position 2"));
  CHECK_THROWS_AS(GroupoidPresentation::free_group({"a", "a"}), std::invalid_argument);
  CHECK_THROWS_AS(GroupoidPresentation::free_group({""}), std::invalid_argument);
}

TEST_CASE("groupoid composability") {
  GroupoidPresentation path({{"a", "P", "Q"}, {"b", "Q", "R"}});
  GroupoidWord ba = path.parse("b a");
  CHECK(path.composable(ba));
  CHECK_FALSE(path.is_loop(ba));
  CHECK(path.is_loop(path.parse("a^-1 b^-1 b a")));
  CHECK(throws_with([&] { path.parse("a b"); }, "not composable at position 2"));
  GroupoidWord bad;
  bad.letters = {{"a", 1}, {"b", 1}};
  CHECK_FALSE(path.composable(bad));
}

TEST_CASE("representations") {
  GroupoidPresentation free = GroupoidPresentation::free_group({"a", "b"});
  Representation rep = Representation::random(free, 3, 7);
  CHECK(rep.rank() == 3);
  CHECK(rep.seed() == 7);
  const ComplexMatrix& a = rep.assignment().at("a");
  const ComplexMatrix& b = rep.assignment().at("b");
  CHECK(relative_deviation(rep.evaluate(free.parse("a b^-1")), a * b.inverse()) < 1e-12);
  CHECK(relative_deviation(rep.evaluate(free.parse("1")), ComplexMatrix::Identity(3, 3)) == 0);
  CHECK_THROWS_AS(Representation(2, {{"a", real_matrix(2, {2, 0, 0, 1})}}), std::invalid_argument);
  CHECK_THROWS_AS(Representation(2, {{"a", ComplexMatrix::Identity(3, 3)}}), std::invalid_argument);
}

TEST_CASE("stated evaluation") {
  GroupoidPresentation free = GroupoidPresentation::free_group({"a"});
  ComplexMatrix rho = real_matrix(2, {1, 2, 3, 7});
  Representation rep(2, {{"a", rho}});
  ComplexMatrix ar = matrix_A(2) * rho;  // [[3,7],[-1,-2]]
  ComplexMatrix t = stated_matrix(rho);
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j) {
      CHECK(t(i - 1, j - 1) == ar(2 - i, 2 - j));
      StatedArc arc{free.parse("a"), i, j, 0};
      CHECK(eval_arc(arc, rep) == ar(2 - i, 2 - j));
      arc.spin = 1;
      CHECK(eval_arc(arc, rep) == -ar(2 - i, 2 - j));
    }
  StatedArc arc{free.parse("a"), 1, 2, 0};
  StatedKnot knot{free.parse("a"), 1};
  CHECK(eval_knot(knot, rep) == Complex(-8.0));
  StatedWebClassical web{{arc, arc}, {knot}};
  CHECK(eval_web(web, rep) == ar(1, 0) * ar(1, 0) * Complex(-8.0));
  arc.state_out = 3;
  CHECK_THROWS_AS(eval_arc(arc, rep), std::out_of_range);
  knot.spin = 2;
  CHECK_THROWS_AS(eval_knot(knot, rep), std::invalid_argument);
}

TEST_CASE("numeric suites pass") {
  for (int n = 2; n <= 4; ++n) {
    CAPTURE(n);
    CheckReport r = check_stated_matrix_identities(n, 5, 100);
    CHECK(r.passed());
    for (const auto& c : r.checks) CHECK(*c.tolerance == 1e-9);
    CHECK(check_knot_conjugation(n, 5, 100).passed());
  }
  for (int n = 2; n <= 3; ++n) {
    CHECK(check_det_expansion(n, 5, 100).passed());
    CHECK(check_cap_resolution(n, 5, 100).passed());
  }
}

TEST_CASE("numeric suites are deterministic in the seed") {
  CheckReport a = check_det_expansion(3, 17, 20), b = check_det_expansion(3, 17, 20);
  REQUIRE(a.checks.size() == b.checks.size());
  for (std::size_t i = 0; i < a.checks.size(); ++i) CHECK(*a.checks[i].deviation == *b.checks[i].deviation);
}
