#include <doctest.h>

#include "frontdga/algebra.hpp"

using namespace fdga;

namespace {

Dga small() {
  Dga d;
  d.add("a", 0);
  d.add("b", 0);
  d.add("c", 0);
  d.add("x", 1);
  d.add("y", 1);
  d.set_d(d.id("x"), d.parse_poly("1 + abc + a + c"));
  d.set_d(d.id("y"), d.parse_poly("1 + cba + c + a"));
  return d;
}

}  // namespace

TEST_CASE("poly arithmetic over GF(2)") {
  Dga d = small();
  Poly a = d.parse_poly("a + b"), b = d.parse_poly("a + c");
  CHECK(d.render(a + b) == "b + c");
  CHECK((a + a).is_zero());
  CHECK(d.render(a * b) == "aa + ac + ba + bc");
  CHECK(d.render(Poly::one() * a) == d.render(a));
  CHECK(Poly::from_words({{0}, {0}, {1}}) == Poly::gen(1));
}

TEST_CASE("render and parse round trip") {
  Dga d = small();
  for (const char* s : {"1", "0", "1 + a + c + abc", "x a + y", "ccc + ba"}) {
    Poly p = d.parse_poly(s);
    CHECK(d.parse_poly(d.render(p)) == p);
  }
  CHECK(d.render(d.parse_poly("0")) == "0");
  CHECK_THROWS_AS(d.parse_poly("a + q"), Error);
}

TEST_CASE("parse_dga reads render_dga") {
  Dga d = small();
  Dga e = parse_dga(render_dga(d));
  CHECK(e == d);
  CHECK(compare_by_name(d, e).empty());
}

TEST_CASE("Leibniz rule") {
  Dga d = small();
  GenId x = d.id("x"), a = d.id("a");
  Poly xa = Poly::gen(x) * Poly::gen(a);
  CHECK(d.differentiate(xa) == d.d(x) * Poly::gen(a));
  Poly ax = Poly::gen(a) * Poly::gen(x);
  CHECK(d.differentiate(ax) == Poly::gen(a) * d.d(x));
}

TEST_CASE("degrees") {
  Dga d = small();
  CHECK(d.degree(d.parse_poly("x a")) == 1);
  CHECK(d.degree(d.parse_poly("1 + abc")) == 0);
  CHECK_FALSE(d.degree(d.parse_poly("x + a")).has_value());
  CHECK_FALSE(d.degree(Poly{}).has_value());
}

TEST_CASE("check_dga flags degree and square failures") {
  Dga d = small();
  CHECK(check_dga(d).ok());

  Dga bad = d;
  bad.set_d(bad.id("x"), bad.parse_poly("a"));
  bad.set_d(bad.id("y"), bad.parse_poly("x"));
  DgaCheck c = check_dga(bad);
  CHECK_FALSE(c.degree_ok);
  CHECK_FALSE(c.failures.empty());

  Dga sq(0);
  sq.add("u", 2);
  sq.add("v", 1);
  sq.add("w", 0);
  sq.set_d(sq.id("u"), sq.parse_poly("v"));
  sq.set_d(sq.id("v"), sq.parse_poly("1 + w"));
  CHECK_FALSE(check_dga(sq).d_squared_zero);
}

TEST_CASE("tame substitution") {
  Dga d = small();
  CHECK_THROWS(tame_substitute(d, d.id("x"), d.parse_poly("x")));
  Dga e = tame_substitute(d, d.id("x"), d.parse_poly("y"));
  CHECK(check_dga(e).ok());
  CHECK(e.d(e.id("x")) == e.parse_poly("abc + cba"));
  CHECK(e.d(e.id("y")) == d.d(d.id("y")));
}

TEST_CASE("stabilize then destabilize is the identity") {
  Dga d = small();
  Dga s = stabilize(d, 3, "e", "f");
  CHECK(s.size() == d.size() + 2);
  CHECK(s.grading(s.id("e")) == 3);
  CHECK(s.grading(s.id("f")) == 2);
  CHECK(check_dga(s).ok());
  CHECK(destabilize(s, s.id("e"), s.id("f")) == d);
  CHECK_THROWS_AS(destabilize(d, d.id("x"), d.id("a")), Error);
}

TEST_CASE("morphisms compose and are checked") {
  Dga d = small();
  DgaMorphism id = DgaMorphism::identity(d);
  CHECK(verify_morphism(id).ok());

  DgaMorphism swap{d, d, {}};
  for (const char* n : {"c", "b", "a", "y", "x"}) swap.images.push_back(Poly::gen(d.id(n)));
  CHECK(verify_morphism(swap).ok());
  DgaMorphism twice = compose(swap, swap);
  for (GenId g = 0; g < d.size(); ++g) CHECK(twice.images[g] == Poly::gen(g));

  DgaMorphism broken = id;
  broken.images[d.id("a")] = d.parse_poly("1 + a");
  CHECK_FALSE(verify_morphism(broken).chain_map);
  broken.images[d.id("a")] = d.parse_poly("x");
  CHECK_FALSE(verify_morphism(broken).graded);
}

TEST_CASE("substitute and evaluate") {
  Dga d = small();
  Poly p = d.parse_poly("abc + a");
  CHECK(substitute(p, d.id("a"), d.parse_poly("1 + b")) == d.parse_poly("bc + bbc + 1 + b"));
  std::vector<Poly> images{Poly::one(), Poly::one(), Poly::one()};
  CHECK(evaluate(p, images).is_zero());
}

TEST_CASE("Laurent polynomials") {
  LaurentPoly p = LaurentPoly::parse("3t+6+2t^-1");
  CHECK(p.coeff(1) == 3);
  CHECK(p.coeff(0) == 6);
  CHECK(p.coeff(-1) == 2);
  CHECK(p.str() == "3t+6+2t^-1");
  CHECK(LaurentPoly::parse(p.str()) == p);
  CHECK(p.eval_minus_one() == 1);
  CHECK(p.inverted() == LaurentPoly::parse("2t+6+3t^-1"));
  CHECK((p - p).is_zero());
  CHECK(LaurentPoly::parse("t+2") * LaurentPoly::parse("t^-1") == LaurentPoly::parse("1+2t^-1"));
  CHECK(LaurentPoly::parse("t").str() == "t");
  CHECK(LaurentPoly().str() == "0");
}
