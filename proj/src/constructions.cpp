#include "frontdga/constructions.hpp"

#include <regex>
#include <set>

#include "frontdga/bordered.hpp"
#include "frontdga/disks.hpp"

namespace fdga {

namespace {

std::string fresh_label(std::set<std::string>& used, const std::string& base) {
  std::string s = base;
  for (int k = 2; used.count(s); ++k) s = base + "." + std::to_string(k);
  used.insert(s);
  return s;
}

std::set<std::string> label_set(const FrontDiagram& f) {
  auto v = f.vertex_labels();
  return {v.begin(), v.end()};
}

}  // namespace

FrontDiagram connected_sum(const FrontDiagram& k1, const FrontDiagram& k2) {
  if (!k1.is_full() || !k2.is_full()) throw Error("connected sum needs full fronts");
  k1.validate();
  k2.validate();
  FrontDiagram out;
  out.name = k1.name + "#" + k2.name;
  for (const auto& e : k1.events) {
    if (auto* x = std::get_if<Crossing>(&e))
      out.events.push_back(Crossing{x->position, x->label + "_1"});
    else if (std::holds_alternative<LeftCusp>(e))
      out.events.push_back(e);
  }
  out.events.push_back(Divider{"sum"});
  bool skipped = false;
  for (const auto& e : k2.events) {
    if (auto* c = std::get_if<LeftCusp>(&e)) {
      if (!skipped) {
        if (c->position != 1) throw Error("second summand must start with a cusp at position 1");
        skipped = true;
        continue;
      }
      out.events.push_back(e);
    } else if (auto* x = std::get_if<Crossing>(&e)) {
      out.events.push_back(Crossing{x->position, x->label + "_2"});
    }
  }
  for (const auto& l : k2.closure) out.closure.push_back(l + "_2");
  for (std::size_t j = 1; j < k1.closure.size(); ++j) out.closure.push_back(k1.closure[j] + "_1");
  out.validate();
  return out;
}

char quadrant_char(Quadrant q) {
  switch (q) {
    case Quadrant::N: return 'N';
    case Quadrant::E: return 'E';
    case Quadrant::S: return 'S';
    case Quadrant::W: return 'W';
  }
  return '?';
}

namespace {

Quadrant classify(int upper_copy, int lower_copy) {
  if (upper_copy == 1) return lower_copy == 1 ? Quadrant::N : Quadrant::E;
  return lower_copy == 2 ? Quadrant::S : Quadrant::W;
}

// Shared body of two_copy and whitehead_double.
TwoCopy double_front(const FrontDiagram& k, const PotentialMap& pot, bool clasp) {
  if (!k.is_full()) throw Error("doubling needs a full front");
  if (k.closure.empty()) throw Error("doubling needs at least one right cusp");
  TwoCopy tc;
  FrontDiagram& f = tc.front;
  f.name = (clasp ? "W(" : "2(") + k.name + ")";
  std::set<std::string> used;
  std::vector<int> copy;  // per doubled position, 1 = upper copy

  auto cross = [&](int pos, const std::string& label, const std::string& origin) {
    tc.quadrant[label] = classify(copy[pos - 1], copy[pos]);
    tc.origin[label] = origin;
    std::swap(copy[pos - 1], copy[pos]);
    f.events.push_back(Crossing{pos, label});
  };
  for (const auto& l : k.vertex_labels()) used.insert(l);
  for (const auto& l : k.vertex_labels())
    for (const char* s : {"_N", "_E", "_S", "_W"}) used.insert(l + s);

  int cusp_no = 0;
  for (std::size_t i = 0; i < k.events.size(); ++i) {
    const Event& e = k.events[i];
    if (auto* c = std::get_if<LeftCusp>(&e)) {
      const int p = 2 * c->position - 1;
      const long mu_lower = pot.at(i + 1, c->position + 1);
      f.events.push_back(LeftCusp{p});
      copy.insert(copy.begin() + (p - 1), {1, 1});
      if (!clasp)
        f.overrides.push_back({static_cast<int>(f.events.size()), p + 1, mu_lower + 1});
      f.events.push_back(LeftCusp{p + 2});
      copy.insert(copy.begin() + (p + 1), {2, 2});
      f.overrides.push_back({static_cast<int>(f.events.size()), p + 3, mu_lower});
      cross(p + 1, fresh_label(used, "l" + std::to_string(++cusp_no)), "");
    } else if (auto* x = std::get_if<Crossing>(&e)) {
      const int p = 2 * x->position - 1;
      cross(p + 1, x->label + "_W", x->label);
      cross(p, x->label + "_N", x->label);
      cross(p + 2, x->label + "_S", x->label);
      cross(p + 1, x->label + "_E", x->label);
    }
  }
  // right cusps: one W crossing each, the top one after the site divider
  for (std::size_t j = 1; j < k.closure.size(); ++j)
    cross(4 * static_cast<int>(j) + 2, k.closure[j] + "_W", k.closure[j]);
  f.events.push_back(Divider{clasp ? "clasp" : "site"});
  cross(2, k.closure[0] + "_W", k.closure[0]);
  if (clasp) {
    tc.clasp = fresh_label(used, "b");
    cross(2, tc.clasp, "");
  }
  for (const auto& l : k.closure) {
    for (const char* s : {"_N", "_S"}) {
      f.closure.push_back(l + s);
      tc.quadrant[l + s] = s[1] == 'N' ? Quadrant::N : Quadrant::S;
      tc.origin[l + s] = l;
    }
  }
  f.validate();
  return tc;
}

}  // namespace

TwoCopy two_copy(const FrontDiagram& k, const PotentialMap& pot) { return double_front(k, pot, false); }
TwoCopy two_copy(const FrontDiagram& k) { return two_copy(k, assign_potentials(k)); }
TwoCopy whitehead_double(const FrontDiagram& k, const PotentialMap& pot) {
  return double_front(k, pot, true);
}
TwoCopy whitehead_double(const FrontDiagram& k) { return whitehead_double(k, assign_potentials(k)); }

Augmentation proper_augmentation(const Dga& k_dga, const Augmentation& eps, const TwoCopy& doubled,
                                 const Dga& doubled_dga) {
  if (auto why = augmentation_problem(k_dga, eps); !why.empty())
    throw Error("not an augmentation: " + why);
  Augmentation out(doubled_dga.size(), 0);
  for (GenId g = 0; g < doubled_dga.size(); ++g) {
    const std::string& name = doubled_dga.name(g);
    if (name == doubled.clasp) {
      out[g] = 1;
      continue;
    }
    auto q = doubled.quadrant.find(name);
    auto o = doubled.origin.find(name);
    if (q == doubled.quadrant.end() || o == doubled.origin.end() || o->second.empty()) continue;
    if (q->second != Quadrant::N && q->second != Quadrant::S) continue;
    if (auto h = k_dga.find(o->second)) out[g] = eps[*h];
  }
  return out;
}

NsewSplit nsew_split(const TwoCopy& doubled, const Dga& doubled_dga, const Augmentation& eps) {
  NsewSplit out;
  LinearizedComplex whole = linearize(doubled_dga, eps);
  std::vector<Quadrant> q(whole.size());
  std::map<Quadrant, std::vector<std::size_t>> members;
  for (std::size_t i = 0; i < whole.size(); ++i) {
    auto it = doubled.quadrant.find(whole.names[i]);
    if (it == doubled.quadrant.end()) throw Error("no quadrant for " + whole.names[i]);
    q[i] = it->second;
    members[q[i]].push_back(i);
  }
  for (Quadrant quad : {Quadrant::N, Quadrant::E, Quadrant::S, Quadrant::W}) {
    const auto& idx = members[quad];
    std::map<std::size_t, std::size_t> local;
    for (std::size_t k = 0; k < idx.size(); ++k) local[idx[k]] = k;
    LinearizedComplex part;
    part.modulus = whole.modulus;
    for (std::size_t i : idx) {
      part.names.push_back(whole.names[i]);
      part.grading.push_back(whole.grading[i]);
      BitVec col(idx.size());
      for (std::size_t j = 0; j < whole.size(); ++j) {
        if (!whole.boundary[i].get(j)) continue;
        auto it = local.find(j);
        if (it == local.end()) {
          out.closed = false;
          out.leaks.push_back("d" + whole.names[i] + " meets " + whole.names[j]);
        } else {
          col.set(it->second);
        }
      }
      part.boundary.push_back(col);
    }
    out.homology[quad] = homology(part);
    out.parts.emplace(quad, std::move(part));
  }
  out.total = homology(whole);
  return out;
}

LemmaReport nsew_lemmas(const NsewSplit& split, const std::map<long, long>& base) {
  LemmaReport r;
  auto dim = [](const std::map<long, long>& h, long k) {
    auto it = h.find(k);
    return it == h.end() ? 0L : it->second;
  };
  std::set<long> degrees;
  for (const auto& [q, h] : split.homology)
    for (const auto& [k, v] : h) degrees.insert(k), degrees.insert(k - 1), degrees.insert(k + 1);
  for (const auto& [k, v] : base) degrees.insert(k), degrees.insert(k - 1), degrees.insert(k + 1);
  auto fail = [&](bool& flag, const std::string& s) {
    flag = false;
    r.failures.push_back(s);
  };
  const auto& hn = split.homology.at(Quadrant::N);
  const auto& hs = split.homology.at(Quadrant::S);
  const auto& hw = split.homology.at(Quadrant::W);
  const auto& he = split.homology.at(Quadrant::E);
  for (long k : degrees) {
    const std::string ks = std::to_string(k);
    if (dim(hn, k) != dim(base, k)) fail(r.n_ok, "H_" + ks + "(N) differs");
    if (dim(hs, k) != dim(base, k)) fail(r.s_ok, "H_" + ks + "(S) differs");
    if (dim(hw, k) != dim(base, k + 1)) fail(r.w_ok, "H_" + ks + "(W) differs from H_" + std::to_string(k + 1));
    if (k < 0 && dim(he, k) != dim(base, k - 1))
      fail(r.e_ok, "H_" + ks + "(E) differs from H_" + std::to_string(k - 1));
    long sum = dim(hn, k) + dim(hs, k) + dim(hw, k) + dim(he, k);
    if (sum != dim(split.total, k)) fail(r.total_ok, "H_" + ks + " is not the direct sum");
  }
  return r;
}

// ---------------------------------------------------------------------------
// Tangle rules

std::string rule_name(TangleRuleId r) {
  switch (r) {
    case TangleRuleId::P_to_C: return "P->C";
    case TangleRuleId::C_to_P: return "C->P";
    case TangleRuleId::X_to_C: return "X->C";
  }
  return "?";
}

TangleRuleId parse_rule(const std::string& s) {
  if (s == "P->C" || s == "PC" || s == "P2C") return TangleRuleId::P_to_C;
  if (s == "C->P" || s == "CP" || s == "C2P") return TangleRuleId::C_to_P;
  if (s == "X->C" || s == "XC" || s == "X2C") return TangleRuleId::X_to_C;
  throw Error("unknown tangle rule '" + s + "' (expected P->C, C->P or X->C)");
}

namespace {

using K = RecipeStep::Kind;

RecipeStep add(std::string g, long grading, std::string d) { return {K::add, std::move(g), std::move(d), grading}; }
RecipeStep sub(std::string g, std::string phi) { return {K::substitute, std::move(g), std::move(phi), 0}; }
RecipeStep destab(std::string a, std::string b) { return {K::destabilize, std::move(a), std::move(b), 0}; }
RecipeStep rename(std::string a, std::string b) { return {K::rename, std::move(a), std::move(b), 0}; }

}  // namespace

Recipe parallel_break_recipe() {
  return {{"a"},
          {"x", "y"},
          {"p", "q"},
          {add("c", 1, "1 + rho1_2"),
           sub("a", "c rho2_3 + rho1_3 + 1"),
           sub("x", "c a + c c rho2_3 + c rho1_3 + c"),
           sub("y", "c rho2_4 + rho1_4 + x rho3_4"),
           destab("x", "a"),
           rename("c", "p"),
           rename("y", "q")}};
}

Recipe clasp_unhook_recipe() {
  return {{"a", "b"},
          {"x", "y"},
          {"p", "q"},
          {add("c", 1, "b"),
           add("d", 1, "a + rho1_3 + x rho2_3 + rho1_2 a c rho2_3 + rho1_3 c rho2_3"),
           sub("x", "rho1_2 a c + rho1_3 c"),
           sub("y", "c a rho3_4 + c rho2_4"),
           sub("a", "rho1_3 + x rho2_3"),
           destab("d", "a"),
           destab("c", "b"),
           rename("x", "p"),
           rename("y", "q")}};
}

namespace {

std::string shift_rhos(const std::string& text, int shift) {
  if (shift == 0) return text;
  static const std::regex re(R"(rho(\d+)_(\d+))");
  std::string out;
  auto it = std::sregex_iterator(text.begin(), text.end(), re);
  std::size_t last = 0;
  for (; it != std::sregex_iterator(); ++it) {
    const auto& m = *it;
    out += text.substr(last, m.position() - last);
    out += rho_name(std::stoi(m[1]) + shift, std::stoi(m[2]) + shift);
    last = m.position() + m.length();
  }
  return out + text.substr(last);
}

// Same generators in the same order, some renamed.
Dga renamed(const Dga& d, const std::map<std::string, std::string>& names) {
  Dga out(d.modulus());
  for (GenId g = 0; g < d.size(); ++g) {
    auto it = names.find(d.name(g));
    out.add(it == names.end() ? d.name(g) : it->second, d.grading(g));
  }
  for (GenId g = 0; g < d.size(); ++g) out.set_d(g, d.d(g));
  return out;
}

}  // namespace

RecipeRun run_recipe(const Recipe& r, const Dga& lhs, const Dga& rhs, int shift) {
  RecipeRun run{lhs, lhs, lhs, rhs, {}, {}, false};
  Dga cur = lhs;
  for (GenId g = 0; g < lhs.size(); ++g) run.images.push_back(Poly::gen(g));
  for (const auto& st : r.steps) {
    switch (st.kind) {
      case K::add: {
        if (cur.find(st.first)) throw Error("recipe adds existing generator " + st.first);
        Poly d = cur.parse_poly(shift_rhos(st.second, shift));
        GenId g = cur.add(st.first, st.grading, d);
        if (!cur.differentiate(d).is_zero())
          throw Error("recipe: d" + st.first + " = " + cur.render(d) + " is not a cycle");
        run.log.push_back("add " + st.first + " |" + st.first + "|=" + std::to_string(st.grading) +
                          " d" + st.first + " = " + cur.render(cur.d(g)));
        run.extended = cur;
        break;
      }
      case K::substitute: {
        GenId g = cur.id(st.first);
        Poly phi = cur.parse_poly(shift_rhos(st.second, shift));
        cur = tame_substitute(cur, g, phi);
        for (auto& im : run.images) im = substitute(im, g, Poly::gen(g) + phi);
        run.log.push_back(st.first + " -> " + st.first + " + " + cur.render(phi) + "; d" + st.first +
                          " = " + cur.render(cur.d(g)));
        break;
      }
      case K::destabilize: {
        GenId a = cur.id(st.first), b = cur.id(st.second);
        Dga next = destabilize(cur, a, b);
        std::vector<Poly> proj(cur.size());
        for (GenId h = 0; h < cur.size(); ++h)
          if (h != a && h != b) proj[h] = Poly::gen(next.id(cur.name(h)));
        for (auto& im : run.images) im = evaluate(im, proj);
        cur = std::move(next);
        run.log.push_back("destabilize (" + st.first + ", " + st.second + ")");
        break;
      }
      case K::rename: {
        if (cur.find(st.second)) throw Error("recipe renames onto existing generator " + st.second);
        cur = renamed(cur, {{st.first, st.second}});
        run.log.push_back("rename " + st.first + " -> " + st.second);
        break;
      }
    }
  }
  run.final = cur;
  run.matches = compare_by_name(run.final, run.expected).empty();
  return run;
}

FrontDiagram mark_last_crossing(const FrontDiagram& front, const std::string& name) {
  FrontDiagram out = front;
  std::erase_if(out.events, [&](const Event& e) {
    auto* d = std::get_if<Divider>(&e);
    return d && d->name == name;
  });
  std::size_t last = out.events.size();
  for (std::size_t i = 0; i < out.events.size(); ++i)
    if (std::holds_alternative<Crossing>(out.events[i])) last = i;
  if (last == out.events.size()) throw Error("front " + front.name + " has no crossing");
  // overrides refer to columns, which shift past the new divider
  for (auto& o : out.overrides)
    if (o.column > static_cast<int>(last)) ++o.column;
  out.events.insert(out.events.begin() + static_cast<std::ptrdiff_t>(last), Divider{name});
  out.validate();
  return out;
}

namespace {

// Local view of the piece right of the site: which global labels play the
// pattern's roles.
struct Site {
  std::size_t divider = 0;
  int pair = 1;  // first closure pair of the window
  std::vector<std::string> crossing_labels;
  std::vector<std::string> cusp_labels;  // the window's two closure labels
};

Site locate(const FrontDiagram& f, const std::string& site, std::size_t crossings, int pair) {
  Site s;
  auto idx = f.divider_index(site);
  if (!idx) throw Error("front " + f.name + " has no divider '" + site + "'");
  s.divider = *idx;
  int pos = 0;
  for (std::size_t i = s.divider + 1; i < f.events.size(); ++i) {
    if (std::holds_alternative<Divider>(f.events[i])) continue;
    auto* x = std::get_if<Crossing>(&f.events[i]);
    if (!x) throw Error("site '" + site + "' must be followed only by the pattern crossings");
    if (pos && x->position != pos) throw Error("pattern crossings at different positions");
    pos = x->position;
    s.crossing_labels.push_back(x->label);
  }
  if (s.crossing_labels.size() != crossings)
    throw Error("site '" + site + "' has " + std::to_string(s.crossing_labels.size()) +
                " crossings, the pattern needs " + std::to_string(crossings));
  if (pos) {
    if (pos % 2) throw Error("pattern crossing must sit between two closure pairs");
    pair = pos / 2;
  }
  if (pair < 1 || static_cast<std::size_t>(pair) + 1 > f.closure.size())
    throw Error("closure pairs " + std::to_string(pair) + "," + std::to_string(pair + 1) +
                " do not exist");
  s.pair = pair;
  s.cusp_labels = {f.closure[pair - 1], f.closure[pair]};
  return s;
}

std::map<std::string, std::string> local_names(const Site& s, const Dga& piece,
                                               const std::vector<std::string>& crossings,
                                               const std::vector<std::string>& cusps) {
  std::map<std::string, std::string> m;
  for (std::size_t i = 0; i < crossings.size(); ++i) m[s.crossing_labels[i]] = crossings[i];
  for (std::size_t i = 0; i < cusps.size(); ++i) m[s.cusp_labels[i]] = cusps[i];
  for (GenId g = 0; g < piece.size(); ++g) {
    const std::string& n = piece.name(g);
    if (!m.count(n) && n.rfind("rho", 0) != 0) m[n] = "@" + n;
  }
  return m;
}

}  // namespace

TangleResult apply_tangle_rule(const FrontDiagram& front, TangleRuleId rule, const std::string& site,
                               int pair) {
  if (!front.is_full()) throw Error("tangle rules apply to full fronts");
  front.validate();
  const Recipe recipe = rule == TangleRuleId::X_to_C ? clasp_unhook_recipe() : parallel_break_recipe();
  const bool forward = rule != TangleRuleId::C_to_P;
  const std::size_t pattern_crossings = forward ? recipe.lhs_crossings.size() : 0;

  Site s = locate(front, site, pattern_crossings, pair);
  PotentialMap pot = assign_potentials(front);
  const int p = 2 * s.pair;

  // the replaced front keeps the events left of the site and its potentials
  FrontDiagram out;
  out.name = front.name + "'";
  out.events.assign(front.events.begin(), front.events.begin() + static_cast<std::ptrdiff_t>(s.divider) + 1);
  out.closure = front.closure;
  out.modulus = front.modulus;
  for (std::size_t i = 0; i < s.divider; ++i)
    if (auto* c = std::get_if<LeftCusp>(&front.events[i]))
      out.overrides.push_back({static_cast<int>(i + 1), c->position + 1, pot.at(i + 1, c->position + 1)});
  Site t = s;
  t.crossing_labels.clear();
  if (!forward) {
    auto mu = pot.boundary(s.divider + 1);
    if (pot.reduce(mu[p - 1] - mu[p]) != 0)
      throw Error("the added crossing would have grading " + std::to_string(mu[p - 1] - mu[p]) +
                  ", the rule needs 0");
    std::set<std::string> used = label_set(front);
    t.crossing_labels.push_back(fresh_label(used, "a"));
    out.events.push_back(Crossing{p, t.crossing_labels.back()});
  }
  out.validate();
  PotentialMap out_pot = assign_potentials(out);

  // grading hypothesis on the removed or added crossings
  const FrontDiagram& pside = forward ? front : out;
  const PotentialMap& ppot = forward ? pot : out_pot;
  for (std::size_t i = s.divider + 1; i < pside.events.size(); ++i)
    if (!std::holds_alternative<Crossing>(pside.events[i])) continue;
    else if (long g = crossing_grading(pside, ppot, i); ppot.reduce(g) != 0)
      throw Error("crossing " + std::get<Crossing>(pside.events[i]).label + " has grading " +
                  std::to_string(g) + ", the rule needs 0");

  const FrontDiagram& source = forward ? front : out;
  const FrontDiagram& target = forward ? out : front;
  const PotentialMap& spot = forward ? pot : out_pot;
  const PotentialMap& tpot = forward ? out_pot : pot;
  const Site& ss = forward ? s : t;
  const Site& ts = forward ? t : s;

  SplitFront ssplit = split_at(source, spot, site);
  SplitFront tsplit = split_at(target, tpot, site);
  if (ssplit.potentials != tsplit.potentials) throw Error("site potentials changed by the rule");
  BorderedPiece A = make_piece(tsplit.left);
  BorderedPiece Ts = make_piece(ssplit.right);
  BorderedPiece Tt = make_piece(tsplit.right);
  auto snames = local_names(ss, Ts.algebra, recipe.lhs_crossings, recipe.lhs_cusps);
  auto tnames = local_names(ts, Tt.algebra, {}, recipe.rhs_cusps);
  const int shift = 2 * (s.pair - 1);

  TangleResult res;
  res.front = out;
  res.source_is_input = forward;
  res.local = run_recipe(recipe, renamed(Ts.algebra, snames), renamed(Tt.algebra, tnames), shift);

  Dga sdga = chekanov_dga(source, spot);
  Dga tdga = chekanov_dga(target, tpot);
  // local final names -> target polys
  std::map<std::string, std::string> back;
  for (const auto& [g, l] : tnames) back[l] = g;
  const Dga& fin = res.local.final;
  std::vector<Poly> lift(fin.size());
  for (GenId g = 0; g < fin.size(); ++g) {
    const std::string& n = fin.name(g);
    if (auto it = back.find(n); it != back.end()) {
      lift[g] = Poly::gen(tdga.id(it->second));
    } else if (auto rho = A.right->dga.find(n)) {
      lift[g] = tdga.import(A.algebra, A.w_right[*rho]);
    } else {
      throw Error("recipe left unexpected generator " + n);
    }
  }
  res.morphism = DgaMorphism{sdga, tdga, std::vector<Poly>(sdga.size())};
  for (GenId g = 0; g < sdga.size(); ++g) {
    const std::string& n = sdga.name(g);
    if (auto it = snames.find(n); it != snames.end())
      res.morphism.images[g] = evaluate(res.local.images[res.local.start.id(it->second)], lift);
    else
      res.morphism.images[g] = Poly::gen(tdga.id(n));
  }
  res.check = verify_morphism(res.morphism);
  if (!res.local.matches)
    for (auto& m : compare_by_name(res.local.final, res.local.expected))
      res.check.failures.push_back("local: " + m);
  return res;
}

}  // namespace fdga
