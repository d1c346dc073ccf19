#include <doctest.h>

#include <random>

#include "frontdga/charalg.hpp"
#include "frontdga/disks.hpp"
#include "frontdga/fuzz.hpp"

using namespace fdga;

TEST_CASE("degrevlex order") {
  CHECK(degrevlex_greater({2, 0}, {1, 0}));
  CHECK(degrevlex_greater({1, 1, 0}, {2, 0, 0}) == false);
  CHECK(degrevlex_greater({2, 0, 0}, {1, 1, 0}));
  CHECK(degrevlex_greater({1, 0, 1}, {0, 2, 0}) == false);
  CHECK(degrevlex_greater({0, 0, 3}, {2, 0, 0}));
  CHECK(degrevlex_greater({1, 1, 1}, {0, 0, 2}));
}

TEST_CASE("parse and render") {
  CommutativeRing R({"a", "b", "c"});
  CommutativePoly p = R.parse("a^2 b + (1 + c)(a + b)");
  CHECK(R.render(p) == R.render(R.parse(R.render(p))));
  CHECK(R.parse("(a + b)^2") == R.parse("a^2 + b^2"));
  CHECK(R.render(R.parse("b a b")) == "a b^2");
  CHECK_THROWS_AS(R.parse("a + z"), Error);
}

TEST_CASE("abelianization") {
  Dga d = chekanov_dga(load_front(std::string(FRONTS_DIR) + "/trefoil.front"));
  CommutativeRing R = CommutativeRing::of(d);
  CHECK(abelianize(d, d.d(d.id("x")), R) == abelianize(d, d.d(d.id("y")), R));
  CHECK(abelianize(d, d.parse_poly("ab + ba"), R).is_zero());
}

TEST_CASE("Groebner basis of a small ideal") {
  CommutativeRing R({"x", "y"});
  std::vector<CommutativePoly> g = groebner({R.parse("x y + 1"), R.parse("x^2")});
  REQUIRE(g.size() == 1);
  CHECK(g[0] == R.one());

  CharIdeal I(R, {R.parse("x^2 + y"), R.parse("x y")});
  CHECK(I.contains("y^2"));
  CHECK_FALSE(I.contains("x"));
  CHECK_FALSE(I.is_unit_ideal());
}

TEST_CASE("normal form is idempotent and linear") {
  CommutativeRing R({"a", "b", "c", "d"});
  CharIdeal I(R, {R.parse("a b + c"), R.parse("b^2 + d + 1"), R.parse("a c d + b")});
  std::mt19937 rng(9);
  auto random_poly = [&] {
    CommutativePoly p;
    for (int t = 0; t < 4; ++t) {
      Monomial m(4);
      for (auto& e : m) e = static_cast<std::uint16_t>(rng() % 3);
      p += CommutativePoly::monomial(m);
    }
    return p;
  };
  for (int i = 0; i < 40; ++i) {
    CommutativePoly p = random_poly(), q = random_poly();
    CommutativePoly np = I.normal_form(p);
    CHECK(I.normal_form(np) == np);
    CHECK(I.normal_form(p + q) == np + I.normal_form(q));
    CHECK(I.contains(p + np));
    for (const auto& g : I.generators()) CHECK(I.contains(g * p));
  }
}

TEST_CASE("boundaries lie in the characteristic ideal") {
  FuzzParams params;
  for (std::size_t i = 0; i < 40; ++i) {
    Dga d = chekanov_dga(random_front(61, i, params));
    CharIdeal I = char_ideal(d);
    for (GenId g = 0; g < d.size(); ++g) CHECK(I.contains(abelianize(d, d.d(g), I.ring())));
  }
}

TEST_CASE("augmentations vanish on the ideal") {
  Dga d = chekanov_dga(load_front(std::string(FRONTS_DIR) + "/trefoil.front"));
  CharIdeal I = char_ideal(d);
  CHECK_FALSE(I.is_unit_ideal());
  CHECK(I.contains("1 + a + c + a b c"));
}

TEST_CASE("unit ideal for a front without augmentations") {
  Dga d = chekanov_dga(load_front(std::string(FRONTS_DIR) + "/stabilized_unknot.front"));
  CHECK(char_ideal(d).is_unit_ideal());
}

TEST_CASE("Groebner caps") {
  CommutativeRing R({"a", "b", "c", "d", "e"});
  GroebnerCaps tiny;
  tiny.max_pairs = 1;
  CHECK_THROWS_AS(
      groebner({R.parse("a b + c d + 1"), R.parse("b c + d e"), R.parse("a e + b^2"), R.parse("c^2 + a d")}, tiny),
      GroebnerCapExceeded);
}

TEST_CASE("S and Z presentations") {
  std::vector<NamedReport> rs = verify_sz_equivalence(FRONTS_DIR);
  REQUIRE(rs.size() == 3);
  for (const auto& r : rs) {
    INFO(r.name);
    for (const auto& f : r.report.failures) INFO(f);
    CHECK(r.report.ok());
    for (const auto& m : r.report.memberships) CHECK(m.member);
  }
  CHECK(rs[0].report.reduced == rs[1].report.reduced);
  CHECK(rs[0].report.reduced == rs[2].report.reduced);
}

TEST_CASE("presentation checks detect a wrong relation") {
  CommutativeRing R({"a", "b"});
  CharIdeal I(R, {R.parse("a b + 1")});
  Presentation good{{}, {"a b + 1"}, {}};
  CHECK(check_presentation(I, good).ok());
  Presentation bad{{}, {"a b"}, {}};
  CHECK_FALSE(check_presentation(I, bad).ok());
  Presentation elim{{{"a", "b"}}, {}, {}};
  CHECK_FALSE(check_presentation(I, elim).ok());
}

TEST_CASE("S chains and twist knots") {
  for (int k = 1; k <= 3; ++k) {
    FrontDiagram f = s_chain_front(k);
    CHECK(f.crossing_count() == static_cast<std::size_t>(k + 1));
    CHECK(f.closure.size() == static_cast<std::size_t>(k + 2));
  }
  for (int n = 2; n <= 5; ++n) {
    FrontDiagram f = twist_knot_front(n);
    ClassicalInvariants ci = classical_invariants(f);
    CHECK(ci.components.size() == 1);
    CHECK(ci.rotation == 0);
    CHECK(ci.tb == (n % 2 ? -3 : 1));
  }
}

TEST_CASE("twist knot families") {
  for (const auto& e : twist_knot_suite(8)) {
    INFO(e.n);
    CHECK(e.report.ok());
    if (e.n >= 3) CHECK(e.family == (e.n % 2 ? "odd" : "even"));
  }
}

TEST_CASE("pushout of ideals on the trefoil") {
  FrontDiagram f = load_front(std::string(FRONTS_DIR) + "/trefoil.front");
  CHECK(pushout_ideal_check(f, "main").ok());
}
