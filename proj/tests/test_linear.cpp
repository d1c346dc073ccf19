#include <doctest.h>

#include <random>
#include <set>

#include "frontdga/constructions.hpp"
#include "frontdga/fuzz.hpp"
#include "frontdga/linear.hpp"
#include "oracles.hpp"

using namespace fdga;

namespace {

FrontDiagram load(const char* name) { return load_front(std::string(FRONTS_DIR) + "/" + name + ".front"); }

std::map<long, long> nonzero(const std::map<long, long>& h) {
  std::map<long, long> r;
  for (auto [k, v] : h)
    if (v) r[k] = v;
  return r;
}

}  // namespace

TEST_CASE("BitVec basics") {
  BitVec v(130);
  CHECK_FALSE(v.any());
  CHECK(v.lowest() == 130);
  v.set(129);
  v.set(3);
  CHECK(v.count() == 2);
  CHECK(v.lowest() == 3);
  v.flip(3);
  CHECK(v.lowest() == 129);
  BitVec w(130);
  w.set(129);
  v ^= w;
  CHECK_FALSE(v.any());
}

TEST_CASE("echelon rank matches the dense oracle") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    std::size_t rows = rng() % 12 + 1, dim = rng() % 90 + 1;
    std::vector<BitVec> vs;
    std::vector<std::vector<std::uint8_t>> dense;
    for (std::size_t r = 0; r < rows; ++r) {
      BitVec v(dim);
      std::vector<std::uint8_t> d(dim);
      for (std::size_t c = 0; c < dim; ++c)
        if (rng() % 4 == 0) v.set(c), d[c] = 1;
      if (r > 2 && rng() % 3 == 0) {
        v ^= vs[r - 1];
        for (std::size_t c = 0; c < dim; ++c) d[c] ^= dense[r - 1][c];
      }
      vs.push_back(v);
      dense.push_back(d);
    }
    CHECK(gf2_rank(vs, dim) == oracle::rank(dense));
  }
}

TEST_CASE("echelon records dependencies") {
  Gf2Echelon e(4, 3);
  BitVec a(4), b(4), c(4);
  a.set(0);
  b.set(1);
  c.set(0);
  c.set(1);
  CHECK(e.insert(a));
  CHECK(e.insert(b));
  BitVec dep;
  CHECK_FALSE(e.insert(c, &dep));
  CHECK(dep.get(0));
  CHECK(dep.get(1));
  CHECK(e.rank() == 2);
  CHECK(e.in_span(c));
}

TEST_CASE("trefoil augmentations") {
  Dga d = chekanov_dga(load("trefoil"));
  std::vector<Augmentation> augs = find_augmentations(d);
  REQUIRE(augs.size() == 5);
  std::vector<std::string> bits;
  for (const auto& e : augs) {
    bits.push_back(augmentation_bitmap(d, e));
    CHECK(is_augmentation(d, e));
    CHECK(chekanov_polynomial(d, e) == LaurentPoly::parse("t+2"));
  }
  CHECK(bits == std::vector<std::string>{"001", "011", "100", "110", "111"});
  CHECK(oracle::augmentations(d) == augs);
}

TEST_CASE("unknot and stabilized unknot") {
  Dga u = chekanov_dga(load("unknot"));
  std::vector<Augmentation> augs = find_augmentations(u);
  REQUIRE(augs.size() == 1);
  CHECK(chekanov_polynomial(u, augs[0]) == LaurentPoly::parse("t"));
  CHECK(find_augmentations(chekanov_dga(load("stabilized_unknot"))).empty());
}

TEST_CASE("augmentation_problem names the failing generator") {
  Dga d = chekanov_dga(load("trefoil"));
  Augmentation zero(d.size(), 0);
  CHECK(augmentation_problem(d, zero).find('x') != std::string::npos);
  Augmentation odd(d.size(), 0);
  odd[d.id("x")] = 1;
  CHECK_FALSE(is_augmentation(d, odd));
}

TEST_CASE("augmentation cap") {
  Dga d = chekanov_dga(load("trefoil"));
  CHECK_THROWS_AS(find_augmentations(d, 2), AugmentationCapExceeded);
}

TEST_CASE("search and homology agree with the oracles on random fronts") {
  FuzzParams p;
  p.max_vertices = 9;
  std::size_t augmented = 0;
  for (std::size_t i = 0; i < 400; ++i) {
    FrontDiagram f = random_front(31, i, p);
    Dga d = chekanov_dga(f);
    std::vector<Augmentation> augs = find_augmentations(d);
    INFO(render_front(f));
    REQUIRE(oracle::augmentations(d) == augs);
    for (const auto& e : augs) {
      ++augmented;
      LinearizedComplex c = linearize(d, e);
      std::map<long, long> h = nonzero(homology(c));
      CHECK(h == nonzero(oracle::linearized_homology(d, e)));
      CHECK(h == nonzero(homology_transposed(c)));
    }
  }
  CHECK(augmented > 10);
}

TEST_CASE("linearized differential squares to zero") {
  Dga d = chekanov_dga(load("trefoil"));
  for (const auto& e : find_augmentations(d)) {
    LinearizedComplex c = linearize(d, e);
    for (std::size_t j = 0; j < c.size(); ++j) CHECK_FALSE(c.apply(c.boundary[j]).any());
  }
}

TEST_CASE("duality on random augmented knots") {
  FuzzParams p;
  std::size_t checked = 0;
  for (std::size_t i = 0; i < 400; ++i) {
    FrontDiagram f = random_front(41, i, p);
    ClassicalInvariants ci = classical_invariants(f);
    Dga d = chekanov_dga(f);
    if (ci.rotation != 0 || d.modulus() != 0 || ci.components.size() != 1) continue;
    for (const auto& e : find_augmentations(d)) {
      DualityReport r = duality_report(chekanov_polynomial(d, e), ci.tb);
      INFO(render_front(f));
      CHECK(r.ok());
      ++checked;
    }
  }
  CHECK(checked > 0);
}

TEST_CASE("Mayer-Vietoris on the trefoil splits") {
  FrontDiagram f = load("trefoil");
  Dga d = chekanov_dga(f);
  for (const auto& e : find_augmentations(d)) {
    MayerVietorisReport mv = mayer_vietoris(f, "main", e);
    CHECK(mv.ok());
    CHECK(nonzero(mv.h_whole) == std::map<long, long>{{0, 2}, {1, 1}});
  }
  FrontDiagram t = load("trefoil_three_pieces");
  Dga dt = chekanov_dga(t);
  for (const auto& e : find_augmentations(dt)) {
    CHECK(mayer_vietoris(t, "left", e).ok());
    CHECK(mayer_vietoris(t, "right", e).ok());
  }
}

TEST_CASE("connected sum of trefoils") {
  FrontDiagram k = load("trefoil");
  FrontDiagram s = connected_sum(k, k);
  Dga ds = chekanov_dga(s), dk = chekanov_dga(k);
  CHECK(classical_invariants(s).tb == 3);
  std::vector<Augmentation> augs = find_augmentations(dk);
  std::set<std::string> polys;
  for (const auto& e1 : augs)
    for (const auto& e2 : augs) {
      Augmentation e(ds.size(), 0);
      for (GenId g = 0; g < dk.size(); ++g) {
        if (auto id = ds.find(dk.name(g) + "_1")) e[*id] = e1[g];
        if (auto id = ds.find(dk.name(g) + "_2")) e[*id] = e2[g];
      }
      REQUIRE(is_augmentation(ds, e));
      LaurentPoly p = chekanov_polynomial(ds, e);
      CHECK(p == chekanov_polynomial(dk, e1) + chekanov_polynomial(dk, e2) - LaurentPoly::parse("t"));
      polys.insert(p.str());
      CHECK(mayer_vietoris(s, "sum", e).ok());
    }
  CHECK(polys == std::set<std::string>{"t+4"});
  CHECK(find_augmentations(ds).size() >= 25);
}
