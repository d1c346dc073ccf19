#include "frontdga/charalg.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "frontdga/bordered.hpp"
#include "frontdga/disks.hpp"

namespace fdga {

namespace {

unsigned total_degree(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0U); }

bool divides(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Monomial quotient(const Monomial& b, const Monomial& a) {
  Monomial q(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) q[i] = static_cast<std::uint16_t>(b[i] - a[i]);
  return q;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial l(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) l[i] = std::max(a[i], b[i]);
  return l;
}

bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] && b[i]) return false;
  return true;
}

// Sorts decreasing and cancels repeated monomials in pairs.
std::vector<Monomial> canonical(std::vector<Monomial> ms) {
  std::sort(ms.begin(), ms.end(), degrevlex_greater);
  std::vector<Monomial> out;
  for (std::size_t i = 0; i < ms.size();) {
    std::size_t j = i;
    while (j < ms.size() && ms[j] == ms[i]) ++j;
    if ((j - i) % 2) out.push_back(ms[i]);
    i = j;
  }
  return out;
}

}  // namespace

bool degrevlex_greater(const Monomial& a, const Monomial& b) {
  unsigned da = total_degree(a), db = total_degree(b);
  if (da != db) return da > db;
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

CommutativePoly CommutativePoly::one(std::size_t nvars) { return monomial(Monomial(nvars, 0)); }

CommutativePoly CommutativePoly::var(std::size_t nvars, std::size_t i) {
  Monomial m(nvars, 0);
  m.at(i) = 1;
  return monomial(std::move(m));
}

CommutativePoly CommutativePoly::monomial(Monomial m) {
  CommutativePoly p;
  p.terms_.push_back(std::move(m));
  return p;
}

bool CommutativePoly::mentions(std::size_t var) const {
  return std::any_of(terms_.begin(), terms_.end(), [&](const Monomial& m) { return m[var] > 0; });
}

CommutativePoly& CommutativePoly::operator+=(const CommutativePoly& o) {
  std::vector<Monomial> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() && b != o.terms_.end()) {
    if (*a == *b) {
      ++a, ++b;
    } else if (degrevlex_greater(*a, *b)) {
      out.push_back(*a++);
    } else {
      out.push_back(*b++);
    }
  }
  out.insert(out.end(), a, terms_.end());
  out.insert(out.end(), b, o.terms_.end());
  terms_ = std::move(out);
  return *this;
}

CommutativePoly operator*(const CommutativePoly& a, const CommutativePoly& b) {
  std::vector<Monomial> ms;
  ms.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_) {
      Monomial m(x.size());
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = static_cast<std::uint16_t>(x[i] + y[i]);
      ms.push_back(std::move(m));
    }
  CommutativePoly p;
  p.terms_ = canonical(std::move(ms));
  return p;
}

CommutativePoly CommutativePoly::times(const Monomial& m) const {
  CommutativePoly p;
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial r(t.size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = static_cast<std::uint16_t>(t[i] + m[i]);
    p.terms_.push_back(std::move(r));
  }
  return p;  // multiplication by a monomial preserves the order
}

std::size_t CommutativeRing::index(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) throw Error("unknown variable '" + std::string(name) + "'");
  return static_cast<std::size_t>(it - names_.begin());
}

namespace {

class Parser {
 public:
  Parser(const CommutativeRing& ring, std::string_view text) : ring_(ring), s_(text) {}

  CommutativePoly run() {
    CommutativePoly p = expr();
    skip();
    if (i_ != s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
    return p;
  }

 private:
  void skip() {
    while (i_ < s_.size() && (std::isspace(static_cast<unsigned char>(s_[i_])) || s_[i_] == '*')) ++i_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw Error("cannot parse '" + std::string(s_) + "': " + what);
  }

  CommutativePoly expr() {
    CommutativePoly p = term();
    for (skip(); i_ < s_.size() && s_[i_] == '+'; skip()) {
      ++i_;
      p += term();
    }
    return p;
  }

  CommutativePoly term() {
    CommutativePoly p = ring_.one();
    bool any = false;
    for (skip(); i_ < s_.size() && s_[i_] != '+' && s_[i_] != ')'; skip()) {
      p = p * factor();
      any = true;
    }
    if (!any) fail("empty term");
    return p;
  }

  CommutativePoly factor() {
    CommutativePoly base;
    if (s_[i_] == '(') {
      ++i_;
      base = expr();
      skip();
      if (i_ >= s_.size() || s_[i_] != ')') fail("missing ')'");
      ++i_;
    } else if (s_[i_] == '0' || s_[i_] == '1') {
      base = s_[i_] == '1' ? ring_.one() : CommutativePoly{};
      ++i_;
    } else {
      std::size_t best = 0, which = 0;
      for (std::size_t v = 0; v < ring_.size(); ++v) {
        const std::string& n = ring_.names()[v];
        if (n.size() > best && s_.substr(i_, n.size()) == n) best = n.size(), which = v;
      }
      if (!best) fail("unknown name at '" + std::string(s_.substr(i_)) + "'");
      i_ += best;
      base = CommutativePoly::var(ring_.size(), which);
    }
    if (i_ < s_.size() && s_[i_] == '^') {
      ++i_;
      std::size_t start = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      if (start == i_) fail("missing exponent");
      int k = std::stoi(std::string(s_.substr(start, i_ - start)));
      CommutativePoly r = ring_.one();
      for (int j = 0; j < k; ++j) r = r * base;
      return r;
    }
    return base;
  }

  const CommutativeRing& ring_;
  std::string_view s_;
  std::size_t i_ = 0;
};

}  // namespace

CommutativePoly CommutativeRing::parse(std::string_view text) const { return Parser(*this, text).run(); }

std::string CommutativeRing::render(const CommutativePoly& p) const {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& m : p.terms()) {
    if (!out.empty()) out += " + ";
    std::string t;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (!m[i]) continue;
      if (!t.empty()) t += " ";
      t += names_[i];
      if (m[i] > 1) t += "^" + std::to_string(m[i]);
    }
    out += t.empty() ? "1" : t;
  }
  return out;
}

CommutativePoly abelianize(const Dga& d, const Poly& p, const CommutativeRing& ring) {
  std::vector<std::size_t> slot(d.size());
  for (GenId g = 0; g < d.size(); ++g) slot[g] = ring.index(d.name(g));
  std::vector<Monomial> ms;
  for (const auto& w : p.words()) {
    Monomial m(ring.size(), 0);
    for (GenId g : w) ++m[slot[g]];
    ms.push_back(std::move(m));
  }
  CommutativePoly out;
  for (auto& m : canonical(std::move(ms))) out += CommutativePoly::monomial(std::move(m));
  return out;
}

CommutativePoly normal_form(const CommutativePoly& p, const std::vector<CommutativePoly>& basis) {
  CommutativePoly rest = p, rem;
  while (!rest.is_zero()) {
    const Monomial t = rest.lead();
    const CommutativePoly* hit = nullptr;
    for (const auto& g : basis)
      if (divides(g.lead(), t)) {
        hit = &g;
        break;
      }
    if (hit) {
      rest += hit->times(quotient(t, hit->lead()));
    } else {
      CommutativePoly lt = CommutativePoly::monomial(t);
      rem += lt;
      rest += lt;
    }
  }
  return rem;
}

std::vector<CommutativePoly> groebner(std::vector<CommutativePoly> gens, const GroebnerCaps& caps) {
  std::vector<CommutativePoly> G;
  for (auto& g : gens) {
    CommutativePoly r = normal_form(g, G);
    if (!r.is_zero()) G.push_back(std::move(r));
  }
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 0; j < G.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);
  std::size_t processed = 0;
  while (!pairs.empty()) {
    // normal strategy: smallest lcm first
    auto best = std::min_element(pairs.begin(), pairs.end(), [&](auto& x, auto& y) {
      return degrevlex_greater(lcm(G[y.first].lead(), G[y.second].lead()),
                               lcm(G[x.first].lead(), G[x.second].lead()));
    });
    auto [i, j] = *best;
    *best = pairs.back();
    pairs.pop_back();
    if (++processed > caps.max_pairs)
      throw GroebnerCapExceeded("Gröbner basis: more than " + std::to_string(caps.max_pairs) +
                                " S-pairs");
    const Monomial& a = G[i].lead();
    const Monomial& b = G[j].lead();
    if (coprime(a, b)) continue;
    Monomial l = lcm(a, b);
    if (total_degree(l) > caps.max_degree)
      throw GroebnerCapExceeded("Gröbner basis: S-pair degree " + std::to_string(total_degree(l)) +
                                " exceeds " + std::to_string(caps.max_degree));
    CommutativePoly s = G[i].times(quotient(l, a)) + G[j].times(quotient(l, b));
    CommutativePoly r = normal_form(s, G);
    if (r.is_zero()) continue;
    if (total_degree(r.lead()) == 0) return {r};  // unit ideal
    G.push_back(std::move(r));
    if (G.size() > caps.max_basis)
      throw GroebnerCapExceeded("Gröbner basis: more than " + std::to_string(caps.max_basis) +
                                " elements");
    for (std::size_t k = 0; k + 1 < G.size(); ++k) pairs.emplace_back(k, G.size() - 1);
  }
  // minimal, then reduced
  std::vector<CommutativePoly> min;
  for (std::size_t k = 0; k < G.size(); ++k) {
    bool redundant = false;
    for (std::size_t m = 0; m < G.size() && !redundant; ++m) {
      if (m == k || !divides(G[m].lead(), G[k].lead())) continue;
      redundant = G[m].lead() != G[k].lead() || m < k;
    }
    if (!redundant) min.push_back(G[k]);
  }
  std::vector<CommutativePoly> out;
  for (std::size_t k = 0; k < min.size(); ++k) {
    std::vector<CommutativePoly> others;
    for (std::size_t m = 0; m < min.size(); ++m)
      if (m != k) others.push_back(min[m]);
    CommutativePoly tail = min[k] + CommutativePoly::monomial(min[k].lead());
    out.push_back(CommutativePoly::monomial(min[k].lead()) + normal_form(tail, others));
  }
  std::sort(out.begin(), out.end(),
            [](const auto& x, const auto& y) { return degrevlex_greater(y.lead(), x.lead()); });
  return out;
}

CharIdeal::CharIdeal(CommutativeRing ring, std::vector<CommutativePoly> generators, const GroebnerCaps& caps)
    : ring_(std::move(ring)), generators_(std::move(generators)), basis_(groebner(generators_, caps)) {}

bool CharIdeal::is_unit_ideal() const {
  return basis_.size() == 1 && total_degree(basis_.front().lead()) == 0;
}

CharIdeal char_ideal(const Dga& d, const GroebnerCaps& caps) {
  CommutativeRing ring = CommutativeRing::of(d);
  std::vector<CommutativePoly> gens;
  for (GenId g = 0; g < d.size(); ++g) {
    CommutativePoly p = abelianize(d, d.d(g), ring);
    if (!p.is_zero()) gens.push_back(std::move(p));
  }
  return CharIdeal(std::move(ring), std::move(gens), caps);
}

MembershipCheck check_member(const CharIdeal& ideal, std::string_view poly) {
  CommutativePoly r = ideal.normal_form(ideal.ring().parse(poly));
  return {std::string(poly), ideal.ring().render(r), r.is_zero()};
}

namespace {

CommutativePoly substitute_var(const CommutativePoly& p, std::size_t v, const CommutativePoly& f) {
  CommutativePoly out;
  for (const auto& m : p.terms()) {
    Monomial rest = m;
    rest[v] = 0;
    CommutativePoly t = CommutativePoly::monomial(rest);
    for (int k = 0; k < m[v]; ++k) t = t * f;
    out += t;
  }
  return out;
}

}  // namespace

bool PresentationReport::ok() const {
  auto members = [](const std::vector<MembershipCheck>& v) {
    return std::all_of(v.begin(), v.end(), [](const auto& c) { return c.member; });
  };
  return members(memberships) && members(eliminations) && free_ok && relations_ok;
}

PresentationReport check_presentation(const CharIdeal& ideal, const Presentation& p,
                                      const std::vector<std::string>& memberships) {
  PresentationReport r;
  const CommutativeRing& ring = ideal.ring();
  for (const auto& m : memberships) r.memberships.push_back(check_member(ideal, m));
  for (const auto& [v, f] : p.eliminations) r.eliminations.push_back(check_member(ideal, v + " + " + f));
  for (const auto& c : r.memberships)
    if (!c.member) r.failures.push_back(c.poly + " not in the ideal (remainder " + c.remainder + ")");
  for (const auto& c : r.eliminations)
    if (!c.member) r.failures.push_back("elimination " + c.poly + " fails (remainder " + c.remainder + ")");

  std::vector<CommutativePoly> reduced;
  for (CommutativePoly g : ideal.generators()) {
    for (auto it = p.eliminations.rbegin(); it != p.eliminations.rend(); ++it)
      g = substitute_var(g, ring.index(it->first), ring.parse(it->second));
    for (const auto& [v, f] : p.eliminations)
      if (g.mentions(ring.index(v))) throw Error("elimination of " + v + " is not triangular");
    reduced.push_back(std::move(g));
  }
  auto got = groebner(reduced);
  std::vector<CommutativePoly> claim;
  for (const auto& s : p.relations) claim.push_back(ring.parse(s));
  auto want = groebner(claim);
  for (const auto& g : got) r.reduced.push_back(ring.render(g));
  // free variables survive elimination untouched
  for (const auto& v : p.free_vars) {
    std::size_t i = ring.index(v);
    for (const auto& g : got)
      if (g.mentions(i)) {
        r.free_ok = false;
        r.failures.push_back(v + " is not free: it occurs in " + ring.render(g));
        break;
      }
  }
  if (got != want) {
    r.relations_ok = false;
    std::string s;
    for (const auto& g : r.reduced) s += (s.empty() ? "" : ", ") + g;
    r.failures.push_back("reduced ideal is <" + s + ">, not the claimed relations");
  }
  return r;
}

std::vector<std::string> interval_base_relations() {
  return {"rho1_2 rho2_3", "rho2_3 rho3_4", "rho1_2 rho2_4 + rho1_3 rho3_4", "rho1_2 rho3_4 + 1"};
}

FrontDiagram s_chain_front(int k) {
  if (k < 0) throw Error("negative tangle count");
  FrontDiagram f;
  f.name = std::to_string(k) + "S";
  f.left_strands = 4;
  for (int i = 1; i <= k; ++i) f.events.push_back(LeftCusp{2 * i + 1});
  for (int i = 1; i <= k + 1; ++i) f.events.push_back(Crossing{2 * i, "a" + std::to_string(i)});
  for (int i = 1; i <= k + 2; ++i) f.closure.push_back("x" + std::to_string(i));
  f.validate();
  return f;
}

FrontDiagram twist_knot_front(int n) {
  if (n < 2) throw Error("twist knots K_-n need n >= 2");
  FrontDiagram s = s_chain_front(n - 2);
  FrontDiagram f;
  f.name = "K_-" + std::to_string(n);
  f.events = {LeftCusp{1}, LeftCusp{3}, Crossing{2, "a"}, Crossing{2, "b"}, Divider{"twist"}};
  f.events.insert(f.events.end(), s.events.begin(), s.events.end());
  f.closure = s.closure;
  f.validate();
  return f;
}

std::vector<NamedReport> verify_sz_equivalence(const std::string& fronts_dir, const GroebnerCaps& caps) {
  std::vector<NamedReport> out;
  const auto base = interval_base_relations();

  Dga s = make_piece(load_front(fronts_dir + "/tangle_S.front")).algebra;
  out.push_back({"S", check_presentation(char_ideal(s, caps),
                                         {{{"a", "rho3_4"}, {"b", "rho1_2"}}, base, {"x", "y", "z"}},
                                         {"b + rho1_2", "rho1_2 rho3_4 + 1", "rho2_3"})});

  Dga z = load_dga(fronts_dir + "/tangle_Z.dga");
  out.push_back({"Z", check_presentation(char_ideal(z, caps),
                                         {{{"c", "rho1_2"},
                                           {"e", "rho1_3 rho3_4"},
                                           {"b", "rho1_2 (1 + d c) + rho1_4 c"}},
                                          base,
                                          {"a", "d", "x", "y"}},
                                         {"c + rho1_2", "rho1_2 rho3_4 + 1", "rho2_3",
                                          "e + rho1_3 rho3_4", "b + rho1_2 (1 + d c) + rho1_4 c"})});

  Dga s3 = make_piece(s_chain_front(3)).algebra;
  out.push_back({"3S", check_presentation(char_ideal(s3, caps),
                                          {{{"a1", "rho3_4"}, {"a2", "rho1_2"}, {"a3", "rho3_4"}, {"a4", "rho1_2"}},
                                           base,
                                           {"x1", "x2", "x3", "x4", "x5"}},
                                          {"rho1_2 + a2", "rho1_2 + a4", "a1 + rho3_4", "a3 + rho3_4",
                                           "rho1_2 rho3_4 + 1"})});
  return out;
}

std::vector<TwistKnotEntry> twist_knot_suite(int max_n, const GroebnerCaps& caps) {
  std::vector<TwistKnotEntry> out;
  for (int n = 2; n <= max_n; ++n) {
    FrontDiagram f = twist_knot_front(n);
    Dga d = chekanov_dga(f);
    CharIdeal I = char_ideal(d, caps);
    TwistKnotEntry e;
    e.n = n;
    e.generators = d.size();
    e.tb = classical_invariants(f).tb;
    const int k = n - 2;
    Presentation p;
    for (int i = 1; i <= k + 2; ++i) p.free_vars.push_back("x" + std::to_string(i));
    if (n == 2) {
      for (const auto& g : I.basis()) p.relations.push_back(I.ring().render(g));
    } else if (n % 2) {
      e.family = "odd";
      for (int i = 1; i <= k + 1; ++i) p.eliminations.push_back({"a" + std::to_string(i), "1 + a b"});
      p.relations = {"(a b + 1)^2 + 1"};
    } else {
      e.family = "even";
      for (int i = 2; i <= k + 1; ++i)
        p.eliminations.push_back({"a" + std::to_string(i), i % 2 ? "a1" : "1 + a b"});
      p.relations = {"(a b + 1) a1 + 1"};
    }
    e.report = check_presentation(I, p);
    out.push_back(std::move(e));
  }
  return out;
}

PushoutIdealReport pushout_ideal_check(const FrontDiagram& front, const std::string& divider,
                                       const GroebnerCaps& caps) {
  PushoutIdealReport r;
  PotentialMap pot = assign_potentials(front);
  SplitFront s = split_at(front, pot, divider);
  BorderedPiece L = make_piece(s.left);
  BorderedPiece R = make_piece(s.right);
  BorderedPiece G = glue(L, R);
  Dga whole = chekanov_dga(front, pot);
  CommutativeRing ring = CommutativeRing::of(whole);
  DgaMorphism wp = w_prime(L, R, G.algebra);

  std::vector<CommutativePoly> glued;
  for (GenId g = 0; g < L.algebra.size(); ++g)
    glued.push_back(abelianize(whole, whole.import(L.algebra, L.algebra.d(g)), ring));
  for (GenId g = 0; g < R.algebra.size(); ++g)
    glued.push_back(abelianize(whole, whole.import(G.algebra, wp.apply(R.algebra.d(g))), ring));
  std::erase_if(glued, [](const CommutativePoly& p) { return p.is_zero(); });

  CharIdeal mine(ring, glued, caps);
  CharIdeal theirs = char_ideal(whole, caps);
  for (const auto& g : glued)
    if (!theirs.contains(g)) {
      r.glued_in_whole = false;
      r.failures.push_back(ring.render(g) + " not in the ideal of the whole front");
    }
  for (const auto& g : theirs.generators())
    if (!mine.contains(g)) {
      r.whole_in_glued = false;
      r.failures.push_back(ring.render(g) + " not in the ideal generated by the pieces");
    }
  return r;
}

}  // namespace fdga
