#include <doctest.h>

#include "frontdga/disks.hpp"
#include "frontdga/fuzz.hpp"

using namespace fdga;

TEST_CASE("random fronts are valid and bounded") {
  FuzzParams p;
  p.max_vertices = 8;
  for (std::size_t i = 0; i < 300; ++i) {
    FrontDiagram f = random_front(1, i, p);
    CHECK_NOTHROW(f.validate());
    CHECK(f.is_full());
    CHECK(f.divider_index("cut").has_value());
    CHECK(f.vertex_labels().size() <= 8);
    CHECK(parse_front(render_front(f)) == f);
  }
}

TEST_CASE("generation is deterministic per index") {
  FuzzParams p;
  CHECK(random_front(4, 17, p) == random_front(4, 17, p));
  CHECK_FALSE(random_front(4, 17, p) == random_front(5, 17, p));
}

TEST_CASE("seed 1, 100 cases, at most 10 vertices") {
  FuzzParams p;
  p.max_vertices = 10;
  FuzzReport r = run_fuzz(1, 100, p);
  CHECK(r.count == 100);
  CHECK(r.passed == 100);
  CHECK(r.failures.empty());
}

TEST_CASE("empty run") {
  FuzzReport r = run_fuzz(1, 0, FuzzParams{});
  CHECK(r.count == 0);
  CHECK(r.failures.empty());
}

TEST_CASE("reports do not depend on the thread count") {
  FuzzParams one, many;
  one.threads = 1;
  many.threads = 4;
  one.mayer_vietoris = many.mayer_vietoris = true;
  FuzzReport a = run_fuzz(9, 80, one), b = run_fuzz(9, 80, many);
  CHECK(a.passed == b.passed);
  CHECK(a.augmented == b.augmented);
  CHECK(a.mv_runs == b.mv_runs);
}

TEST_CASE("disabled corners produce minimized counterexamples") {
  for (bool upper : {true, false}) {
    FuzzParams p;
    (upper ? p.sweep.upper_corners : p.sweep.lower_corners) = false;
    FuzzReport r = run_fuzz(3, 60, p);
    REQUIRE_FALSE(r.failures.empty());
    for (const auto& f : r.failures) {
      CHECK_FALSE(f.failures.empty());
      CHECK_FALSE(check_front(f.minimized, p).failures.empty());
      CHECK(f.minimized.vertex_labels().size() <= random_front(3, f.index, p).vertex_labels().size());
    }
  }
}

TEST_CASE("minimizer drops what the predicate ignores") {
  FrontDiagram f = parse_front("L 1\nL 3\nX 2 a\nX 2 b\n| cut\nX 2 c\nR x\nR y\nend\n");
  auto has_c = [](const FrontDiagram& g) {
    for (const auto& l : g.vertex_labels())
      if (l == "c") return true;
    return false;
  };
  FrontDiagram m = minimize_front(f, has_c);
  CHECK(m.crossing_count() == 1);
  CHECK(has_c(m));
}
