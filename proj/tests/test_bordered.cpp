#include <doctest.h>

#include "frontdga/bordered.hpp"
#include "frontdga/fuzz.hpp"

using namespace fdga;

namespace {

FrontDiagram load(const char* name) { return load_front(std::string(FRONTS_DIR) + "/" + name + ".front"); }

void check_w(const BorderedPiece& piece, const std::vector<std::pair<std::string, std::string>>& table) {
  REQUIRE(piece.has_right());
  const Dga& r = piece.right->dga;
  for (const auto& [rho, value] : table) {
    INFO(rho);
    CHECK(piece.w_right.at(r.id(rho)) == piece.algebra.parse_poly(value));
  }
}

}  // namespace

TEST_CASE("interval algebra") {
  IntervalAlgebra I = interval_algebra({1, 0, 0, -1});
  CHECK(I.n == 4);
  CHECK(I.dga.size() == 6);
  CHECK(I.dga.grading(I.rho(1, 2)) == 0);
  CHECK(I.dga.grading(I.rho(2, 3)) == -1);
  CHECK(I.dga.grading(I.rho(1, 4)) == 1);
  CHECK(I.dga.d(I.rho(1, 3)) == I.dga.parse_poly("rho1_2 rho2_3"));
  CHECK(check_dga(I.dga).ok());
  for (int n = 1; n <= 8; ++n) {
    std::vector<long> mu(2 * n);
    for (int i = 0; i < 2 * n; ++i) mu[i] = (i * 7 % 5) - 2;
    CHECK(check_dga(interval_algebra(mu).dga).ok());
  }
}

TEST_CASE("type A piece of the trefoil") {
  SplitFront s = split_at(load("trefoil"), "main");
  BorderedPiece a = type_A(s.left);
  CHECK(a.algebra.names() == std::vector<std::string>{"a", "b"});
  check_w(a, {{"rho1_2", "ab + 1"},
              {"rho1_3", "a"},
              {"rho1_4", "0"},
              {"rho2_3", "0"},
              {"rho2_4", "a"},
              {"rho3_4", "ba + 1"}});
  CHECK(verify_morphism(a.w_morphism()).ok());
}

TEST_CASE("type D piece of the trefoil") {
  SplitFront s = split_at(load("trefoil"), "main");
  BorderedPiece d = type_D(s.right);
  const Dga& g = d.algebra;
  CHECK(g.d(g.id("x")) == g.parse_poly("1 + rho1_2 c + rho1_3"));
  CHECK(g.d(g.id("y")) == g.parse_poly("1 + rho2_4 + c rho3_4"));
  CHECK(g.d(g.id("c")) == g.parse_poly("rho2_3"));
  CHECK(check_dga(g).ok());
}

TEST_CASE("type DA piece of the trefoil") {
  FrontDiagram f = load("trefoil_three_pieces");
  std::vector<FrontDiagram> pieces = cut_all(f, assign_potentials(f));
  BorderedPiece da = type_DA(pieces[1]);
  const Dga& g = da.algebra;
  CHECK(g.d(g.id("a")) == g.parse_poly("rho2_3"));
  CHECK(g.d(g.id("b")).is_zero());
  CHECK(g.d(g.id("c")).is_zero());
  check_w(da, {{"rho1_2", "rho1_2 abc + rho1_2 a + rho1_2 c + rho1_3 bc + rho1_3"},
               {"rho1_3", "rho1_2 ab + rho1_2 + rho1_3 b"},
               {"rho1_4", "rho1_4"},
               {"rho2_3", "0"},
               {"rho3_4", "cb rho2_4 + rho2_4 + cba rho3_4 + c rho3_4 + a rho3_4"},
               {"rho2_4", "b rho2_4 + ba rho3_4 + rho3_4"}});
  CHECK(verify_morphism(da.w_morphism()).ok());
}

TEST_CASE("shape checks on typed constructors") {
  SplitFront s = split_at(load("trefoil"), "main");
  CHECK_THROWS_AS(type_D(s.left), Error);
  CHECK_THROWS_AS(type_A(s.right), Error);
}

TEST_CASE("gluing the trefoil pieces gives its algebra") {
  FrontDiagram f = load("trefoil");
  SplitFront s = split_at(f, "main");
  BorderedPiece g = glue(make_piece(s.left), make_piece(s.right));
  CHECK(compare_by_name(g.algebra, chekanov_dga(f)).empty());
  CHECK(verify_morphism(w_prime(make_piece(s.left), make_piece(s.right), g.algebra)).ok());
}

TEST_CASE("pushout on the trefoil and the triple split") {
  PushoutReport r = verify_pushout(load("trefoil"), "main");
  CHECK(r.ok());
  CHECK(r.points == 4);
  FrontDiagram t = load("trefoil_three_pieces");
  CHECK(verify_pushout(t, "left").ok());
  CHECK(verify_pushout(t, "right").ok());
  CHECK(verify_pairing(t).ok());
}

TEST_CASE("pushout holds on random fronts") {
  FuzzParams p;
  for (std::size_t i = 0; i < 150; ++i) {
    FrontDiagram f = random_front(21, i, p);
    PushoutReport r = verify_pushout(f, "cut");
    INFO(render_front(f));
    CHECK(r.ok());
  }
}

TEST_CASE("w tables render one line per generator") {
  SplitFront s = split_at(load("trefoil"), "main");
  std::string t = make_piece(s.left).w_table();
  CHECK(std::count(t.begin(), t.end(), '\n') == 6);
  CHECK(t.find("w(rho1_2) = 1 + ab") != std::string::npos);
}
