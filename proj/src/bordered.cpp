#include "frontdga/bordered.hpp"

#include <sstream>

namespace fdga {

IntervalAlgebra interval_algebra(const std::vector<long>& mu, int modulus) {
  IntervalAlgebra I{static_cast<int>(mu.size()), mu, Dga(modulus)};
  const int n = I.n;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) I.dga.add(rho_name(i, j), mu[i - 1] - mu[j - 1] - 1);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      std::vector<Word> ws;
      for (int k = i + 1; k < j; ++k) ws.push_back({I.rho(i, k), I.rho(k, j)});
      I.dga.set_d(I.rho(i, j), Poly::from_words(std::move(ws)));
    }
  return I;
}

DgaMorphism BorderedPiece::w_morphism() const {
  if (!right) throw Error("piece " + front.name + " has no right line");
  return DgaMorphism{right->dga, algebra, w_right};
}

std::string BorderedPiece::w_table() const {
  std::ostringstream out;
  if (!right) return "";
  for (GenId g = 0; g < right->dga.size(); ++g)
    out << "w(" << right->dga.name(g) << ") = " << algebra.render(w_right[g]) << "\n";
  return out.str();
}

BorderedPiece make_piece(const FrontDiagram& f, const SweepOptions& opts) {
  PotentialMap pot = assign_potentials(f);
  PieceDga pd = piece_dga(f, pot, opts);
  BorderedPiece p;
  p.front = f;
  p.n_left = f.left_strands;
  p.mu_left = pot.boundary(0);
  if (f.open_right) {
    p.n_right = f.right_strands();
    p.mu_right = pot.boundary(f.events.size());
    p.right = interval_algebra(p.mu_right, pot.modulus());
    p.w_right.resize(p.right->dga.size());
    for (int i = 1; i <= p.n_right; ++i)
      for (int j = i + 1; j <= p.n_right; ++j)
        p.w_right[p.right->rho(i, j)] = pd.to_poly(half_disks_A(f, i, j, opts));
  }
  p.algebra = std::move(pd.dga);
  return p;
}

BorderedPiece type_A(const FrontDiagram& f, const SweepOptions& opts) {
  if (f.left_strands != 0 || !f.open_right) throw Error("type A piece needs only a right line");
  return make_piece(f, opts);
}

BorderedPiece type_D(const FrontDiagram& f, const SweepOptions& opts) {
  if (f.open_right) throw Error("type D piece cannot have a right line");
  return make_piece(f, opts);
}

BorderedPiece type_DA(const FrontDiagram& f, const SweepOptions& opts) {
  if (!f.open_right) throw Error("type DA piece needs a right line");
  return make_piece(f, opts);
}

namespace {

std::size_t rho_count(int n) { return static_cast<std::size_t>(n) * (n > 0 ? n - 1 : 0) / 2; }

// Images of a piece's generators in `target`, by name.
std::vector<Poly> by_name(const Dga& source, const Dga& target, std::size_t count) {
  std::vector<Poly> out(source.size());
  for (GenId g = 0; g < count; ++g) out[g] = Poly::gen(target.id(source.name(g)));
  return out;
}

}  // namespace

BorderedPiece glue(const BorderedPiece& left, const BorderedPiece& right) {
  if (!left.right) throw Error("left piece " + left.front.name + " has no right line");
  if (left.n_right != right.n_left)
    throw Error("boundary mismatch: " + std::to_string(left.n_right) + " vs " +
                std::to_string(right.n_left) + " points");
  if (left.mu_right != right.mu_left) throw Error("boundary potentials differ");
  if (left.algebra.modulus() != right.algebra.modulus()) throw Error("grading moduli differ");

  const std::size_t lv = left.algebra.size() - rho_count(left.n_left);
  const std::size_t rv = right.algebra.size() - rho_count(right.n_left);

  BorderedPiece g;
  g.front.name = left.front.name + "+" + right.front.name;
  g.front.left_strands = left.front.left_strands;
  g.front.events = left.front.events;
  g.front.events.insert(g.front.events.end(), right.front.events.begin(), right.front.events.end());
  g.front.closure = right.front.closure;
  g.front.open_right = right.front.open_right;
  g.front.modulus = left.front.modulus;
  g.front.overrides = left.front.overrides;
  const int shift = static_cast<int>(left.front.events.size());
  for (auto o : right.front.overrides) {
    o.column += shift;
    g.front.overrides.push_back(o);
  }

  Dga out(left.algebra.modulus());
  for (GenId h = 0; h < lv; ++h) out.add(left.algebra.name(h), left.algebra.grading(h));
  for (GenId h = 0; h < rv; ++h) out.add(right.algebra.name(h), right.algebra.grading(h));
  for (GenId h = static_cast<GenId>(lv); h < left.algebra.size(); ++h)
    out.add(left.algebra.name(h), left.algebra.grading(h));

  std::vector<Poly> lmap = by_name(left.algebra, out, left.algebra.size());
  std::vector<Poly> rmap = by_name(right.algebra, out, rv);
  for (int i = 1; i <= right.n_left; ++i)
    for (int j = i + 1; j <= right.n_left; ++j)
      rmap[right.algebra.id(rho_name(i, j))] =
          evaluate(left.w_right[left.right->rho(i, j)], lmap);

  for (GenId h = 0; h < left.algebra.size(); ++h)
    out.set_d(out.id(left.algebra.name(h)), evaluate(left.algebra.d(h), lmap));
  for (GenId h = 0; h < rv; ++h)
    out.set_d(out.id(right.algebra.name(h)), evaluate(right.algebra.d(h), rmap));

  g.n_left = left.n_left;
  g.mu_left = left.mu_left;
  g.n_right = right.n_right;
  g.mu_right = right.mu_right;
  if (right.right) {
    g.right = right.right;
    for (const auto& w : right.w_right) g.w_right.push_back(evaluate(w, rmap));
  }
  g.algebra = std::move(out);
  return g;
}

DgaMorphism w_prime(const BorderedPiece& left, const BorderedPiece& right, const Dga& glued) {
  const std::size_t rv = right.algebra.size() - rho_count(right.n_left);
  std::vector<Poly> lmap = by_name(left.algebra, glued, left.algebra.size());
  DgaMorphism f{right.algebra, glued, by_name(right.algebra, glued, rv)};
  for (int i = 1; i <= right.n_left; ++i)
    for (int j = i + 1; j <= right.n_left; ++j)
      f.images[right.algebra.id(rho_name(i, j))] =
          evaluate(left.w_right[left.right->rho(i, j)], lmap);
  return f;
}

namespace {

void check_algebra(PushoutReport& r, const Dga& d, const std::string& what) {
  auto c = check_dga(d);
  if (c.ok()) return;
  r.dga_ok = false;
  for (auto& s : c.failures) r.failures.push_back(what + ": " + s);
}

void check_map(PushoutReport& r, bool& flag, const DgaMorphism& f, const std::string& what) {
  auto c = verify_morphism(f);
  if (c.ok()) return;
  flag = false;
  for (auto& s : c.failures) r.failures.push_back(what + ": " + s);
}

void compare(PushoutReport& r, const BorderedPiece& glued, const BorderedPiece& whole,
             const std::string& what) {
  for (auto& s : compare_by_name(glued.algebra, whole.algebra)) {
    r.glue_matches = false;
    r.failures.push_back(what + ": " + s);
  }
  if (!r.glue_matches || !whole.right) return;
  for (GenId g = 0; g < whole.w_right.size(); ++g) {
    Poly a = glued.w_right.at(g);
    Poly b = glued.algebra.import(whole.algebra, whole.w_right[g]);
    if (a != b) {
      r.glue_matches = false;
      r.failures.push_back(what + ": w(" + whole.right->dga.name(g) + ") " +
                           glued.algebra.render(a) + " vs " + glued.algebra.render(b));
    }
  }
}

}  // namespace

PushoutReport verify_pushout(const FrontDiagram& front, const std::string& divider,
                             const SweepOptions& opts) {
  PushoutReport r;
  PotentialMap pot = assign_potentials(front);
  SplitFront s = split_at(front, pot, divider);
  r.points = s.points;
  r.potentials = s.potentials;
  BorderedPiece L = make_piece(s.left, opts);
  BorderedPiece R = make_piece(s.right, opts);
  BorderedPiece whole = make_piece(front, opts);
  check_algebra(r, L.algebra, "left piece");
  check_algebra(r, R.algebra, "right piece");
  check_algebra(r, L.right->dga, "I_n");
  check_map(r, r.w_ok, L.w_morphism(), "w");
  BorderedPiece G = glue(L, R);
  check_algebra(r, G.algebra, "glued");
  check_map(r, r.w_prime_ok, w_prime(L, R, G.algebra), "w'");
  DgaMorphism inc{L.algebra, G.algebra, by_name(L.algebra, G.algebra, L.algebra.size())};
  check_map(r, r.w_prime_ok, inc, "inclusion");
  compare(r, G, whole, "glue vs whole");
  return r;
}

std::vector<FrontDiagram> cut_all(const FrontDiagram& front, const PotentialMap& pot) {
  std::vector<FrontDiagram> out;
  std::size_t begin = 0;
  for (std::size_t i = 0; i < front.events.size(); ++i) {
    if (!std::holds_alternative<Divider>(front.events[i])) continue;
    out.push_back(sub_front(front, pot, begin, i, front.name + "_" + std::to_string(out.size() + 1)));
    begin = i + 1;
  }
  out.push_back(sub_front(front, pot, begin, front.events.size(),
                          front.name + "_" + std::to_string(out.size() + 1)));
  return out;
}

PushoutReport verify_pairing(const FrontDiagram& front, const SweepOptions& opts) {
  PushoutReport r;
  PotentialMap pot = assign_potentials(front);
  std::vector<BorderedPiece> pieces;
  for (const auto& p : cut_all(front, pot)) pieces.push_back(make_piece(p, opts));
  BorderedPiece whole = make_piece(front, opts);
  for (const auto& p : pieces) {
    check_algebra(r, p.algebra, p.front.name);
    if (p.right) {
      check_algebra(r, p.right->dga, p.front.name + " right line");
      check_map(r, r.w_ok, p.w_morphism(), "w of " + p.front.name);
    }
  }
  BorderedPiece lfold = pieces.front();
  for (std::size_t i = 1; i < pieces.size(); ++i) {
    check_map(r, r.w_prime_ok, w_prime(lfold, pieces[i], glue(lfold, pieces[i]).algebra),
              "w' at line " + std::to_string(i));
    lfold = glue(lfold, pieces[i]);
  }
  BorderedPiece rfold = pieces.back();
  for (std::size_t i = pieces.size() - 1; i-- > 0;) rfold = glue(pieces[i], rfold);
  check_algebra(r, lfold.algebra, "left bracketing");
  check_algebra(r, rfold.algebra, "right bracketing");
  compare(r, lfold, whole, "left bracketing vs whole");
  compare(r, rfold, whole, "right bracketing vs whole");
  return r;
}

}  // namespace fdga
