// frontdga: command-line front to DGA toolkit.
#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "frontdga/bordered.hpp"
#include "frontdga/charalg.hpp"
#include "frontdga/constructions.hpp"
#include "frontdga/disks.hpp"
#include "frontdga/front.hpp"
#include "frontdga/fuzz.hpp"
#include "frontdga/linear.hpp"

using nlohmann::ordered_json;
using namespace fdga;

namespace {

struct Report {
  std::ostringstream text;
  ordered_json json = ordered_json::object();
  bool failed = false;
};

struct Options {
  std::string input;
  std::string line;
  std::string rule = "P->C";
  std::string site = "site";
  std::string fronts_dir = "fronts";
  int pair = 1;
  std::uint64_t seed = 1;
  std::uint64_t cap = std::uint64_t{1} << 20;
  std::size_t count = 100;
  int max_vertices = 10;
  int iterate = 1;
  unsigned threads = 0;
  bool json = false;
  bool trace = false;
  bool mv = false;
  bool suite = false;
  bool search = false;
  std::string inject;
};

ordered_json dga_json(const Dga& d) {
  ordered_json gens = ordered_json::array();
  for (GenId g = 0; g < d.size(); ++g)
    gens.push_back({{"name", d.name(g)}, {"grading", d.grading(g)}, {"d", d.render(d.d(g))}});
  return {{"modulus", d.modulus()}, {"generators", gens}};
}

ordered_json homology_json(const std::map<long, long>& h) {
  ordered_json j = ordered_json::object();
  for (auto [deg, dim] : h)
    if (dim) j[std::to_string(deg)] = dim;
  return j;
}

std::string homology_text(const std::map<long, long>& h) {
  std::string s;
  for (auto [deg, dim] : h)
    if (dim) s += (s.empty() ? "" : " ") + ("H" + std::to_string(deg) + "=" + std::to_string(dim));
  return s.empty() ? "0" : s;
}

void add_failures(Report& r, const std::vector<std::string>& failures) {
  for (const auto& f : failures) r.text << "  " << f << "\n";
  if (!failures.empty()) r.failed = true;
}

SweepOptions sweep_options(const Options& o) {
  SweepOptions s;
  if (o.trace) s.trace = [](const std::string& line) { std::cout << "trace: " << line << "\n"; };
  return s;
}

void cmd_dga(const Options& o, Report& r) {
  FrontDiagram f = load_front(o.input);
  Dga d = chekanov_dga(f, assign_potentials(f), sweep_options(o));
  r.text << render_dga(d);
  r.json = dga_json(d);
  DgaCheck c = check_dga(d);
  add_failures(r, c.failures);
}

void cmd_split(const Options& o, Report& r) {
  FrontDiagram f = load_front(o.input);
  std::vector<std::string> lines = o.line.empty() ? f.divider_names() : std::vector<std::string>{o.line};
  if (lines.empty()) throw Error("front has no dividers");
  PotentialMap pot = assign_potentials(f);
  for (const auto& line : lines) {
    SplitFront s = split_at(f, pot, line);
    BorderedPiece left = make_piece(s.left), right = make_piece(s.right);
    r.text << "line " << line << " (" << s.points << " points)\n";
    r.text << "left piece\n" << render_dga(left.algebra) << "w table\n" << left.w_table();
    r.text << "right piece\n" << render_dga(right.algebra);
    r.json[line] = {{"points", s.points},
                    {"potentials", s.potentials},
                    {"left", dga_json(left.algebra)},
                    {"w", left.w_table()},
                    {"right", dga_json(right.algebra)}};
  }
}

void cmd_glue(const Options& o, Report& r) {
  FrontDiagram f = load_front(o.input);
  if (o.line.empty()) throw Error("glue needs --line");
  SplitFront s = split_at(f, o.line);
  BorderedPiece g = glue(make_piece(s.left), make_piece(s.right));
  r.text << render_dga(g.algebra);
  r.json = dga_json(g.algebra);
  std::vector<std::string> diff = compare_by_name(g.algebra, chekanov_dga(f));
  r.json["matches_whole"] = diff.empty();
  if (!diff.empty()) r.text << "differs from the algebra of the whole front:\n";
  add_failures(r, diff);
}

void cmd_verify_pushout(const Options& o, Report& r) {
  FrontDiagram f = load_front(o.input);
  PushoutReport p = o.line.empty() ? verify_pairing(f) : verify_pushout(f, o.line);
  r.json = {{"w", p.w_ok}, {"w_prime", p.w_prime_ok}, {"dga", p.dga_ok}, {"glue", p.glue_matches},
            {"failures", p.failures}};
  if (p.ok()) {
    r.text << "all checks passed\n";
  } else {
    r.text << "pushout check failed\n";
    add_failures(r, p.failures);
    r.failed = true;
  }
}

std::vector<Augmentation> augmentations_of(const Dga& d, const Options& o) {
  return find_augmentations(d, o.cap);
}

void cmd_augs(const Options& o, Report& r) {
  FrontDiagram f = load_front(o.input);
  Dga d = chekanov_dga(f);
  std::vector<Augmentation> augs = augmentations_of(d, o);
  std::vector<std::string> deg0;
  for (GenId g = 0; g < d.size(); ++g)
    if (d.reduce(d.grading(g)) == 0) deg0.push_back(d.name(g));
  r.text << augs.size() << " augmentations over";
  for (const auto& n : deg0) r.text << " " << n;
  r.text << "\n";
  ordered_json list = ordered_json::array();
  for (const auto& e : augs) {
    std::string bits = augmentation_bitmap(d, e);
    r.text << bits << "\n";
    list.push_back(bits);
  }
  r.json = {{"degree_zero", deg0}, {"augmentations", list}};
}

void cmd_polys(const Options& o, Report& r) {
  FrontDiagram f = load_front(o.input);
  Dga d = chekanov_dga(f);
  std::vector<Augmentation> augs = augmentations_of(d, o);
  std::map<std::string, int> counts;
  ClassicalInvariants ci = classical_invariants(f);
  bool duality = true;
  for (const auto& e : augs) {
    LaurentPoly p = chekanov_polynomial(d, e);
    ++counts[p.str()];
    if (ci.rotation == 0 && d.modulus() == 0) duality = duality && duality_report(p, ci.tb).ok();
  }
  r.text << augs.size() << " augmentations; polynomials: {";
  bool first = true;
  for (const auto& [p, n] : counts) {
    r.text << (first ? "" : ", ") << p << ": " << n;
    first = false;
  }
  r.text << "}\n";
  ordered_json pj = ordered_json::object();
  for (const auto& [p, n] : counts) pj[p] = n;
  r.json = {{"augmentations", augs.size()}, {"polynomials", pj}, {"tb", ci.tb}, {"rotation", ci.rotation},
            {"duality", duality}};
  if (!duality) {
    r.text << "duality check failed\n";
    r.failed = true;
  }
}

void cmd_mayer_vietoris(const Options& o, Report& r) {
  FrontDiagram f = load_front(o.input);
  if (o.line.empty()) throw Error("mayer-vietoris needs --line");
  Dga d = chekanov_dga(f);
  std::vector<Augmentation> augs = augmentations_of(d, o);
  r.json = ordered_json::array();
  for (const auto& e : augs) {
    MayerVietorisReport mv = mayer_vietoris(f, o.line, e);
    std::string bits = augmentation_bitmap(d, e);
    r.text << bits << ": " << (mv.ok() ? "exact" : "FAILED") << "; H(I) " << homology_text(mv.h_interval)
           << "; H(left) " << homology_text(mv.h_left) << "; H(right) " << homology_text(mv.h_right)
           << "; H(whole) " << homology_text(mv.h_whole) << "; rank i_* " << homology_text(mv.inclusion_rank)
           << "\n";
    add_failures(r, mv.failures);
    if (!mv.ok()) r.failed = true;
    r.json.push_back({{"augmentation", bits},
                      {"ok", mv.ok()},
                      {"interval", homology_json(mv.h_interval)},
                      {"left", homology_json(mv.h_left)},
                      {"right", homology_json(mv.h_right)},
                      {"whole", homology_json(mv.h_whole)},
                      {"inclusion_rank", homology_json(mv.inclusion_rank)}});
  }
  if (augs.empty()) r.text << "no augmentations\n";
}

void cmd_double(const Options& o, Report& r) {
  FrontDiagram f = load_front(o.input);
  TwoCopy tc = two_copy(f);
  Dga kd = chekanov_dga(f), dd = chekanov_dga(tc.front);
  r.text << render_front(tc.front) << "quadrants:";
  ordered_json quad = ordered_json::object();
  for (const auto& [label, q] : tc.quadrant) {
    r.text << " " << label << "=" << quadrant_char(q);
    quad[label] = std::string(1, quadrant_char(q));
  }
  r.text << "\n";
  ordered_json lemmas = ordered_json::array();
  for (const auto& e : augmentations_of(kd, o)) {
    Augmentation pe = proper_augmentation(kd, e, tc, dd);
    NsewSplit split = nsew_split(tc, dd, pe);
    LemmaReport lr = nsew_lemmas(split, homology(linearize(kd, e)));
    std::string bits = augmentation_bitmap(kd, e);
    r.text << bits << ": NSEW lemmas " << (lr.ok() && split.closed ? "hold" : "FAIL") << "\n";
    add_failures(r, lr.failures);
    add_failures(r, split.leaks);
    lemmas.push_back({{"augmentation", bits}, {"ok", lr.ok() && split.closed}});
  }
  r.json = {{"front", render_front(tc.front)}, {"quadrants", quad}, {"lemmas", lemmas}};
}

void cmd_whitehead(const Options& o, Report& r) {
  FrontDiagram f = load_front(o.input);
  std::vector<Augmentation> augs = augmentations_of(chekanov_dga(f), o);
  r.json = ordered_json::array();
  for (int level = 1; level <= o.iterate; ++level) {
    Dga kd = chekanov_dga(f);
    TwoCopy w = whitehead_double(f);
    Dga wd = chekanov_dga(w.front);
    ClassicalInvariants ci = classical_invariants(w.front);
    std::map<std::string, int> counts;
    std::vector<Augmentation> next;
    for (const auto& e : augs) {
      Augmentation pe = proper_augmentation(kd, e, w, wd);
      if (!augmentation_problem(wd, pe).empty()) {
        r.text << "proper augmentation invalid: " << augmentation_problem(wd, pe) << "\n";
        r.failed = true;
        continue;
      }
      std::string p = chekanov_polynomial(wd, pe).str();
      if (!counts.count(p)) next.push_back(pe);
      ++counts[p];
    }
    r.text << "level " << level << ": " << wd.size() << " generators, tb " << ci.tb << ", r " << ci.rotation
           << "; proper polynomials:";
    ordered_json pj = ordered_json::object();
    for (const auto& [p, n] : counts) {
      r.text << " " << p << " (x" << n << ")";
      pj[p] = n;
    }
    r.text << "\n";
    ordered_json entry = {{"level", level}, {"generators", wd.size()}, {"tb", ci.tb}, {"proper", pj}};
    if (o.search) {
      std::map<std::string, int> all;
      for (const auto& e : find_augmentations(wd, o.cap)) {
        std::string p = chekanov_polynomial(wd, e).str();
        if (!all.count(p) && !counts.count(p)) next.push_back(e);
        ++all[p];
      }
      r.text << "  all augmentations:";
      ordered_json aj = ordered_json::object();
      for (const auto& [p, n] : all) {
        r.text << " " << p << " (x" << n << ")";
        aj[p] = n;
      }
      r.text << "\n";
      entry["all"] = aj;
    }
    r.json.push_back(entry);
    f = w.front;
    augs = std::move(next);
  }
}

void cmd_tangle(const Options& o, Report& r) {
  FrontDiagram f = load_front(o.input);
  TangleResult t = apply_tangle_rule(f, parse_rule(o.rule), o.site, o.pair);
  const DgaMorphism& m = t.morphism;
  r.text << "rule " << rule_name(parse_rule(o.rule)) << " at " << o.site << "\n";
  r.text << "input\n" << render_front(f) << "output\n" << render_front(t.front);
  r.text << "morphism (" << (t.source_is_input ? "input -> output" : "output -> input") << ")\n";
  ordered_json images = ordered_json::object();
  for (GenId g = 0; g < m.source.size(); ++g) {
    std::string img = m.target.render(m.images[g]);
    r.text << "  " << m.source.name(g) << " -> " << img << "\n";
    images[m.source.name(g)] = img;
  }
  r.text << "local sequence " << (t.local.matches ? "matches" : "DOES NOT match") << "; morphism "
         << (t.check.ok() ? "is a chain map" : "FAILED") << "\n";
  add_failures(r, t.check.failures);
  if (!t.local.matches || !t.check.ok()) r.failed = true;
  r.json = {{"rule", rule_name(parse_rule(o.rule))}, {"output", render_front(t.front)},
            {"source_is_input", t.source_is_input}, {"images", images},
            {"local_match", t.local.matches}, {"chain_map", t.check.ok()}};
}

void presentation_text(Report& r, const std::string& name, const PresentationReport& p) {
  r.text << name << ": " << (p.ok() ? "ok" : "FAILED") << "\n";
  for (const auto& m : p.memberships)
    r.text << "  " << m.poly << (m.member ? " in ideal" : " NOT in ideal, remainder " + m.remainder) << "\n";
  r.text << "  reduced:";
  for (const auto& s : p.reduced) r.text << " " << s << ";";
  r.text << "\n";
  add_failures(r, p.failures);
  if (!p.ok()) r.failed = true;
}

void cmd_charalg(const Options& o, Report& r) {
  if (o.suite) {
    for (const auto& nr : verify_sz_equivalence(o.fronts_dir)) presentation_text(r, nr.name, nr.report);
    for (const auto& e : twist_knot_suite(8)) {
      std::string name = "K_-" + std::to_string(e.n) + " (" + (e.family.empty() ? "no family" : e.family) +
                         ", tb " + std::to_string(e.tb) + ")";
      presentation_text(r, name, e.report);
    }
    r.json = {{"ok", !r.failed}};
    return;
  }
  if (o.input.empty()) throw Error("charalg needs an input or --suite");
  Dga d = o.input.ends_with(".dga") ? load_dga(o.input) : chekanov_dga(load_front(o.input));
  CharIdeal ideal = char_ideal(d);
  ordered_json basis = ordered_json::array();
  r.text << "ideal basis (" << ideal.basis().size() << "):\n";
  for (const auto& b : ideal.basis()) {
    r.text << "  " << ideal.ring().render(b) << "\n";
    basis.push_back(ideal.ring().render(b));
  }
  r.json = {{"basis", basis}, {"unit", ideal.is_unit_ideal()}};
}

void cmd_fuzz(const Options& o, Report& r) {
  FuzzParams p;
  p.max_vertices = o.max_vertices;
  p.mayer_vietoris = o.mv;
  p.threads = o.threads;
  p.cap = o.cap;
  if (o.inject == "upper") p.sweep.upper_corners = false;
  else if (o.inject == "lower") p.sweep.lower_corners = false;
  else if (!o.inject.empty()) throw Error("--inject takes upper or lower");
  FuzzReport f = run_fuzz(o.seed, o.count, p);
  r.text << f.count << " cases, " << f.passed << " passed, " << f.failures.size() << " failed";
  if (o.mv) r.text << ", " << f.augmented << " augmented, " << f.mv_runs << " Mayer-Vietoris runs";
  r.text << "\n";
  ordered_json fails = ordered_json::array();
  for (const auto& ff : f.failures) {
    r.text << "case " << ff.index << " minimized:\n" << render_front(ff.minimized);
    add_failures(r, ff.failures);
    fails.push_back({{"index", ff.index}, {"front", render_front(ff.minimized)}, {"failures", ff.failures}});
  }
  if (!f.failures.empty()) r.failed = true;
  r.json = {{"count", f.count}, {"passed", f.passed}, {"augmented", f.augmented},
            {"mv_runs", f.mv_runs}, {"failures", fails}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Chekanov-Eliashberg DGAs of Legendrian fronts over GF(2)"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--json", o.json, "JSON output");

  auto input = [&](CLI::App* c, bool required = true) {
    auto* opt = c->add_option("input", o.input, "front file")->check(CLI::ExistingFile);
    if (required) opt->required();
  };
  auto cap = [&](CLI::App* c) { c->add_option("--cap", o.cap, "augmentation search cap"); };

  std::map<std::string, void (*)(const Options&, Report&)> handlers;
  auto sub = [&](const std::string& name, const std::string& help, void (*fn)(const Options&, Report&)) {
    handlers[name] = fn;
    return app.add_subcommand(name, help);
  };

  auto* dga = sub("dga", "algebra of a front", cmd_dga);
  input(dga);
  dga->add_flag("--trace", o.trace, "print sweep transitions");
  auto* split = sub("split", "piece algebras and w table at a divider", cmd_split);
  input(split);
  split->add_option("--line", o.line, "divider name (default: all)");
  auto* gl = sub("glue", "glue the pieces at a divider", cmd_glue);
  input(gl);
  gl->add_option("--line", o.line, "divider name")->required();
  auto* vp = sub("verify-pushout", "check the pushout at one divider or all", cmd_verify_pushout);
  input(vp);
  vp->add_option("--line", o.line, "divider name (default: all, both bracketings)");
  auto* augs = sub("augs", "list augmentations", cmd_augs);
  input(augs);
  cap(augs);
  auto* polys = sub("polys", "linearized homology polynomials", cmd_polys);
  input(polys);
  cap(polys);
  auto* mv = sub("mayer-vietoris", "Mayer-Vietoris exactness per augmentation", cmd_mayer_vietoris);
  input(mv);
  cap(mv);
  mv->add_option("--line", o.line, "divider name")->required();
  auto* dbl = sub("double", "2-copy with NSEW lemmas", cmd_double);
  input(dbl);
  cap(dbl);
  auto* wh = sub("whitehead", "Whitehead doubles and proper-augmentation polynomials", cmd_whitehead);
  input(wh);
  cap(wh);
  wh->add_flag("--search", o.search, "also search all augmentations of each double");
  wh->add_option("--iterate", o.iterate, "number of doublings")->check(CLI::Range(1, 4));
  auto* tg = sub("tangle", "apply a tangle replacement", cmd_tangle);
  input(tg);
  tg->add_option("--rule", o.rule, "P->C, C->P or X->C");
  tg->add_option("--site", o.site, "divider marking the tangle");
  tg->add_option("--pair", o.pair, "closure pair of the window for C->P");
  auto* ch = sub("charalg", "abelianized characteristic algebra", cmd_charalg);
  ch->add_option("input", o.input, "front or .dga file")->check(CLI::ExistingFile);
  ch->add_flag("--suite", o.suite, "run the S/Z and twist knot checks");
  ch->add_option("--fronts", o.fronts_dir, "directory with tangle_S.front and tangle_Z.dga");
  auto* fz = sub("fuzz", "random fronts through the invariant suite", cmd_fuzz);
  fz->add_option("--seed", o.seed, "seed");
  fz->add_option("--count", o.count, "number of fronts");
  fz->add_option("--max-vertices", o.max_vertices, "vertex bound")->check(CLI::Range(1, 40));
  fz->add_flag("--mv", o.mv, "also check Mayer-Vietoris on augmented fronts");
  fz->add_option("--threads", o.threads, "worker threads (0: all cores)");
  fz->add_option("--inject", o.inject, "disable upper or lower corners to test the harness");
  cap(fz);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  Report r;
  try {
    for (auto* s : app.get_subcommands()) handlers.at(s->get_name())(o, r);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  if (o.json) std::cout << r.json.dump(2) << "\n";
  else std::cout << r.text.str();
  return r.failed ? 1 : 0;
}
