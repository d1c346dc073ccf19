// Acceptance gate: one PASS/FAIL line per criterion. With --criterion N only
// that criterion runs; the exit status is nonzero if any selected one fails.
#include <chrono>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "frontdga/bordered.hpp"
#include "frontdga/charalg.hpp"
#include "frontdga/constructions.hpp"
#include "frontdga/disks.hpp"
#include "frontdga/fuzz.hpp"
#include "frontdga/linear.hpp"
#include "oracles.hpp"

using namespace fdga;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream note;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) note << "failed: ";
      else note << "; ";
      note << what;
      pass = false;
    }
  }
};

FrontDiagram load(const std::string& name) { return load_front(std::string(FRONTS_DIR) + "/" + name + ".front"); }

LaurentPoly poly_of(const std::map<long, long>& h) {
  LaurentPoly p;
  for (auto [deg, dim] : h)
    if (dim) p.add(deg, dim);
  return p;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// 1
void golden_differentials(Outcome& o) {
  auto t0 = std::chrono::steady_clock::now();
  Dga d = chekanov_dga(load("trefoil"));
  o.require(d.names() == std::vector<std::string>{"a", "b", "c", "x", "y"}, "generator list");
  o.require(d.d(d.id("x")) == d.parse_poly("1 + abc + a + c"), "dx");
  o.require(d.d(d.id("y")) == d.parse_poly("1 + cba + c + a"), "dy");
  for (const char* g : {"a", "b", "c"}) {
    o.require(d.d(d.id(g)).is_zero(), std::string("d") + g);
    o.require(d.grading(d.id(g)) == 0, std::string("|") + g + "|");
  }
  o.require(d.grading(d.id("x")) == 1 && d.grading(d.id("y")) == 1, "|x|, |y|");
  double s = seconds_since(t0);
  o.require(s < 1.0, "runtime");
  o.note << "dx = " << d.render(d.d(d.id("x"))) << ", dy = " << d.render(d.d(d.id("y")));
}

// 2
void bordered_tables(Outcome& o) {
  auto w_matches = [&](const BorderedPiece& piece, const std::vector<std::pair<std::string, std::string>>& table,
                       const std::string& tag) {
    for (const auto& [rho, value] : table)
      o.require(piece.w_right.at(piece.right->dga.id(rho)) == piece.algebra.parse_poly(value), tag + " " + rho);
  };
  SplitFront s = split_at(load("trefoil"), "main");
  BorderedPiece a = type_A(s.left);
  w_matches(a, {{"rho1_2", "ab + 1"}, {"rho1_3", "a"}, {"rho1_4", "0"},
                {"rho2_3", "0"}, {"rho2_4", "a"}, {"rho3_4", "ba + 1"}}, "A w");

  BorderedPiece d = type_D(s.right);
  const Dga& g = d.algebra;
  o.require(g.d(g.id("x")) == g.parse_poly("1 + rho1_2 c + rho1_3"), "D dx");
  o.require(g.d(g.id("y")) == g.parse_poly("1 + rho2_4 + c rho3_4"), "D dy");
  o.require(g.d(g.id("c")) == g.parse_poly("rho2_3"), "D dc");

  FrontDiagram t = load("trefoil_three_pieces");
  BorderedPiece da = type_DA(cut_all(t, assign_potentials(t)).at(1));
  const Dga& h = da.algebra;
  o.require(h.d(h.id("a")) == h.parse_poly("rho2_3"), "DA da");
  o.require(h.d(h.id("b")).is_zero() && h.d(h.id("c")).is_zero(), "DA db, dc");
  w_matches(da, {{"rho1_2", "rho1_2 abc + rho1_2 a + rho1_2 c + rho1_3 bc + rho1_3"},
                 {"rho1_3", "rho1_2 ab + rho1_2 + rho1_3 b"},
                 {"rho1_4", "rho1_4"},
                 {"rho2_3", "0"},
                 {"rho3_4", "cb rho2_4 + rho2_4 + cba rho3_4 + c rho3_4 + a rho3_4"},
                 {"rho2_4", "b rho2_4 + ba rho3_4 + rho3_4"}}, "DA w");
  o.note << "A table 6/6, D differentials 3/3, DA table 6/6";
}

// 3
void pushout(Outcome& o) {
  auto t0 = std::chrono::steady_clock::now();
  o.require(verify_pushout(load("trefoil"), "main").ok(), "trefoil main");
  FrontDiagram t = load("trefoil_three_pieces");
  o.require(verify_pushout(t, "left").ok() && verify_pushout(t, "right").ok(), "triple split lines");
  o.require(verify_pairing(t).ok(), "triple split bracketings");
  FuzzParams p;
  p.max_vertices = 12;
  FuzzReport r = run_fuzz(2024, 600, p);
  o.require(r.failures.empty(), std::to_string(r.failures.size()) + " fuzz failures");
  for (const auto& f : r.failures) std::cerr << render_front(f.minimized);
  double s = seconds_since(t0);
  o.require(s < 60.0, "runtime");
  o.note << r.passed << "/" << r.count << " fuzzed fronts (<= 12 vertices) in " << s << " s";
}

// 4
void well_formed(Outcome& o) {
  std::size_t checked = 0;
  auto check = [&](const Dga& d, const std::string& what) {
    ++checked;
    o.require(check_dga(d).ok(), what);
  };
  for (const auto& entry : std::filesystem::directory_iterator(FRONTS_DIR)) {
    std::string path = entry.path().string(), name = entry.path().stem().string();
    if (entry.path().extension() == ".dga") {
      check(load_dga(path), name);
      continue;
    }
    FrontDiagram f = load_front(path);
    PotentialMap pot = assign_potentials(f);
    if (f.is_full()) check(chekanov_dga(f), name);
    else check(make_piece(f).algebra, name);
    if (f.is_full() && !f.divider_names().empty())
      for (const auto& piece : cut_all(f, pot)) {
        BorderedPiece b = make_piece(piece);
        check(b.algebra, name + " piece");
        if (b.has_right()) check(b.right->dga, name + " right line");
      }
  }
  for (int n = 1; n <= 8; ++n) {
    std::vector<long> flat(2 * n, 0), stair(2 * n);
    for (int i = 0; i < 2 * n; ++i) stair[i] = n - i;
    check(interval_algebra(flat).dga, "I_" + std::to_string(n));
    check(interval_algebra(stair).dga, "I_" + std::to_string(n));
    check(interval_algebra(flat, 2).dga, "I_" + std::to_string(n) + " mod 2");
  }
  for (const char* k : {"unknot", "trefoil"}) {
    FrontDiagram f = load(k);
    check(chekanov_dga(two_copy(f).front), std::string("2-copy ") + k);
    FrontDiagram w = whitehead_double(f).front;
    check(chekanov_dga(w), std::string("W ") + k);
    check(apply_tangle_rule(w, TangleRuleId::X_to_C, "clasp").morphism.target, std::string("W ") + k + " X->C");
  }
  for (int n = 2; n <= 8; ++n) check(chekanov_dga(twist_knot_front(n)), "twist " + std::to_string(n));
  FuzzParams p;
  for (std::size_t i = 0; i < 100; ++i) {
    FrontDiagram f = random_front(77, i, p);
    for (const auto& piece : cut_all(f, assign_potentials(f))) check(make_piece(piece).algebra, "fuzz piece");
  }
  o.note << checked << " algebras";
}

// 5
void augmentations(Outcome& o) {
  Dga u = chekanov_dga(load("unknot"));
  std::vector<Augmentation> ua = find_augmentations(u);
  o.require(ua.size() == 1 && chekanov_polynomial(u, ua[0]) == LaurentPoly::parse("t"), "unknot");

  Dga t = chekanov_dga(load("trefoil"));
  std::vector<Augmentation> ta = find_augmentations(t);
  o.require(ta.size() == 5, "trefoil count");
  o.require(oracle::augmentations(t) == ta, "trefoil oracle search");
  for (const auto& e : ta) {
    o.require(chekanov_polynomial(t, e) == LaurentPoly::parse("t+2"), "trefoil polynomial");
    o.require(poly_of(oracle::linearized_homology(t, e)) == LaurentPoly::parse("t+2"), "trefoil oracle homology");
  }
  FrontDiagram s = load("stabilized_unknot");
  o.require(classical_invariants(s).rotation != 0, "stabilized unknot rotation");
  o.require(find_augmentations(chekanov_dga(s)).empty(), "stabilized unknot augmentations");
  o.require(oracle::augmentations(chekanov_dga(s)).empty(), "stabilized unknot oracle");
  o.note << "unknot 1 (t), trefoil " << ta.size() << " (t+2), r = " << classical_invariants(s).rotation
         << " front 0";
}

// 6
void tame_sequences(Outcome& o) {
  Dga c = make_piece(load("tangle_C")).algebra;
  RecipeRun p = run_recipe(parallel_break_recipe(), make_piece(load("tangle_P")).algebra, c);
  o.require(p.matches, "P->C");
  o.require(p.final.d(p.final.id("p")) == p.final.parse_poly("1 + rho1_2"), "dp");
  o.require(p.final.d(p.final.id("q")) == p.final.parse_poly("1 + rho3_4"), "dq");
  RecipeRun x = run_recipe(clasp_unhook_recipe(), make_piece(load("tangle_X")).algebra, c);
  o.require(x.matches, "X->C");
  std::size_t destab = 0;
  for (const auto& step : clasp_unhook_recipe().steps) destab += step.kind == RecipeStep::Kind::destabilize;
  o.require(destab == 2, "two destabilizations");
  o.note << "P->C " << p.log.size() << " steps, X->C " << x.log.size() << " steps, both end at dp = 1+rho12, dq = 1+rho34";
}

// 7
void whitehead(Outcome& o) {
  auto t0 = std::chrono::steady_clock::now();
  const LaurentPoly p1 = LaurentPoly::parse("t+2");
  const LaurentPoly p2 = LaurentPoly::parse("3t+6+2t^-1");
  const LaurentPoly p3 = p1 + (LaurentPoly::parse("t+2+t^-1") * (p2 - LaurentPoly::parse("t")));

  FrontDiagram k = load("trefoil");
  Dga kd = chekanov_dga(k);
  TwoCopy w = whitehead_double(k);
  Dga wd = chekanov_dga(w.front);
  std::map<std::string, Augmentation> by_poly;
  for (const auto& e : find_augmentations(wd)) by_poly.emplace(chekanov_polynomial(wd, e).str(), e);
  for (const auto& e : find_augmentations(kd))
    o.require(chekanov_polynomial(wd, proper_augmentation(kd, e, w, wd)) == p2, "proper augmentation of W(K)");
  o.require(by_poly.count(p1.str()) && by_poly.count(p2.str()), "W(trefoil) carries t+2 and p2");

  TwoCopy ww = whitehead_double(w.front);
  Dga wwd = chekanov_dga(ww.front);
  std::set<std::string> found;
  for (const auto& [poly, e] : by_poly) {
    Augmentation pe = proper_augmentation(wd, e, ww, wwd);
    o.require(is_augmentation(wwd, pe), "proper augmentation of W(W(K))");
    found.insert(chekanov_polynomial(wwd, pe).str());
  }
  o.require(found.count(p2.str()) && found.count(p3.str()), "W(W(trefoil)) carries p2 and p3");
  double s = seconds_since(t0);
  o.require(s < 300.0, "runtime");
  o.note << "W: {" << p1.str() << ", " << p2.str() << "}; W(W) (" << wwd.size() << " generators): {" << p2.str()
         << ", " << p3.str() << "} in " << s << " s";
}

// 8
void nsew(Outcome& o) {
  std::size_t cases = 0;
  for (const char* name : {"unknot", "trefoil"}) {
    FrontDiagram k = load(name);
    Dga kd = chekanov_dga(k);
    TwoCopy tc = two_copy(k);
    Dga dd = chekanov_dga(tc.front);
    for (const auto& e : find_augmentations(kd)) {
      Augmentation pe = proper_augmentation(kd, e, tc, dd);
      o.require(is_augmentation(dd, pe), std::string(name) + " proper augmentation");
      NsewSplit split = nsew_split(tc, dd, pe);
      o.require(split.closed, std::string(name) + " split closed");
      LemmaReport lr = nsew_lemmas(split, homology(linearize(kd, e)));
      o.require(lr.ok(), std::string(name) + " lemmas");
      ++cases;
    }
  }
  o.note << cases << " proper augmentations, N/S/W/E lemmas hold";
}

// 9
void mayer_vietoris_check(Outcome& o) {
  FrontDiagram t = load("trefoil");
  FrontDiagram t3 = load("trefoil_three_pieces");
  std::size_t runs = 0;
  for (const auto& e : find_augmentations(chekanov_dga(t))) {
    o.require(mayer_vietoris(t, "main", e).ok(), "trefoil main");
    ++runs;
  }
  for (const auto& e : find_augmentations(chekanov_dga(t3)))
    for (const char* line : {"left", "right"}) {
      o.require(mayer_vietoris(t3, line, e).ok(), std::string("triple split ") + line);
      ++runs;
    }

  FuzzParams p;
  p.max_vertices = 12;
  p.mayer_vietoris = true;
  FuzzReport r = run_fuzz(99, 4000, p);
  o.require(r.failures.empty(), "fuzz Mayer-Vietoris failures");
  o.require(r.augmented >= 100, "fewer than 100 augmented fuzz fronts");

  Dga kd = chekanov_dga(t);
  FrontDiagram sum = connected_sum(t, t);
  Dga sd = chekanov_dga(sum);
  std::set<std::string> polys;
  for (const auto& e1 : find_augmentations(kd))
    for (const auto& e2 : find_augmentations(kd)) {
      Augmentation e(sd.size(), 0);
      for (GenId g = 0; g < kd.size(); ++g) {
        if (auto id = sd.find(kd.name(g) + "_1")) e[*id] = e1[g];
        if (auto id = sd.find(kd.name(g) + "_2")) e[*id] = e2[g];
      }
      o.require(is_augmentation(sd, e), "combined augmentation");
      LaurentPoly P = chekanov_polynomial(sd, e);
      o.require(P == chekanov_polynomial(kd, e1) + chekanov_polynomial(kd, e2) - LaurentPoly::parse("t"),
                "P = P1 + P2 - t");
      o.require(mayer_vietoris(sum, "sum", e).ok(), "connected sum exactness");
      polys.insert(P.str());
    }
  o.require(polys == std::set<std::string>{"t+4"}, "trefoil#trefoil polynomial");
  o.note << runs << " trefoil runs; fuzz " << r.augmented << " augmented fronts, " << r.mv_runs
         << " runs; trefoil#trefoil = " << (polys.empty() ? "?" : *polys.begin());
}

// 10
void duality(Outcome& o) {
  std::size_t checked = 0;
  auto all_on = [&](const FrontDiagram& f, const std::string& name) {
    ClassicalInvariants ci = classical_invariants(f);
    if (ci.rotation != 0 || ci.components.size() != 1) return;
    Dga d = chekanov_dga(f);
    for (const auto& e : find_augmentations(d)) {
      DualityReport r = duality_report(chekanov_polynomial(d, e), ci.tb);
      o.require(r.ok(), name);
      ++checked;
    }
  };
  FrontDiagram t = load("trefoil");
  all_on(load("unknot"), "unknot");
  all_on(t, "trefoil");
  all_on(connected_sum(t, t), "trefoil#trefoil");
  all_on(whitehead_double(t).front, "W(trefoil)");
  all_on(whitehead_double(load("unknot")).front, "W(unknot)");
  for (int n = 2; n <= 8; ++n) all_on(twist_knot_front(n), "twist " + std::to_string(n));
  FuzzParams p;
  for (std::size_t i = 0; i < 1500; ++i) all_on(random_front(123, i, p), "fuzz " + std::to_string(i));
  o.note << checked << " augmentations on r = 0 knots";
}

// 11
void characteristic_algebra(Outcome& o) {
  std::size_t memberships = 0;
  for (const auto& nr : verify_sz_equivalence(FRONTS_DIR)) {
    o.require(nr.report.ok(), nr.name);
    memberships += nr.report.memberships.size() + nr.report.eliminations.size();
  }
  std::size_t odd = 0, even = 0;
  for (const auto& e : twist_knot_suite(8)) {
    o.require(e.report.ok(), "K_-" + std::to_string(e.n));
    odd += e.family == "odd";
    even += e.family == "even";
  }
  o.require(odd > 0 && even > 0, "both families exercised");
  o.note << memberships << " S/Z/3S checks; twist knots: " << odd << " odd, " << even << " even";
}

struct Criterion {
  const char* title;
  std::function<void(Outcome&)> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria{
      {"golden differentials", golden_differentials},
      {"bordered tables", bordered_tables},
      {"pushout", pushout},
      {"DGA well-formedness", well_formed},
      {"augmentations and polynomials", augmentations},
      {"stable tame sequences", tame_sequences},
      {"Whitehead doubles", whitehead},
      {"NSEW lemmas", nsew},
      {"Mayer-Vietoris", mayer_vietoris_check},
      {"duality", duality},
      {"characteristic algebra", characteristic_algebra},
  };
  int only = 0;
  for (int i = 1; i + 1 < argc; ++i)
    if (std::strcmp(argv[i], "--criterion") == 0) only = std::atoi(argv[i + 1]);

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (only && static_cast<int>(i + 1) != only) continue;
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    try {
      criteria[i].run(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    failed += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << " (" << criteria[i].title << ", "
              << static_cast<long>(seconds_since(t0) * 1000) << " ms): " << o.note.str() << std::endl;
  }
  return failed ? 1 : 0;
}
