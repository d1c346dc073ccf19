#include "frontdga/disks.hpp"

#include <sstream>

namespace fdga {

std::vector<Vertex> vertices(const FrontDiagram& f) {
  std::vector<Vertex> out;
  for (std::size_t i = 0; i < f.events.size(); ++i)
    if (auto* c = std::get_if<Crossing>(&f.events[i]))
      out.push_back({Vertex::Kind::crossing, i, c->label});
  for (std::size_t j = 0; j < f.closure.size(); ++j)
    out.push_back({Vertex::Kind::right_cusp, j, f.closure[j]});
  return out;
}

namespace {

struct Sweeper {
  const FrontDiagram& f;
  const SweepOptions& opts;
  std::vector<DiskWord> out;
  std::vector<std::size_t> upper, lower;

  void note(std::size_t col, int u, int l, const std::string& what) const {
    if (!opts.trace) return;
    std::ostringstream s;
    s << "col " << col << " (" << u << "," << l << ") " << what;
    opts.trace(s.str());
  }

  void emit(std::optional<std::pair<int, int>> rho) { out.push_back({upper, lower, rho}); }

  void run(std::size_t col, int u, int l) {
    if (col == 0) {
      if (f.left_strands > 0) {
        note(col, u, l, "reach left line");
        emit(std::pair{u, l});
      } else {
        note(col, u, l, "dead: no left cusp");
      }
      return;
    }
    const Event& e = f.events[col - 1];
    if (auto* c = std::get_if<LeftCusp>(&e)) {
      const int k = c->position;
      if (k == u && k + 1 == l) {
        note(col, u, l, "close at left cusp");
        emit(std::nullopt);
      } else if (u < k && k + 1 < l) {
        run(col - 1, u, l - 2);
      } else if (k + 1 < u) {
        run(col - 1, u - 2, l - 2);
      } else if (k > l) {
        run(col - 1, u, l);
      } else {
        note(col, u, l, "dead: cusp touches one side");
      }
      return;
    }
    if (auto* x = std::get_if<Crossing>(&e)) {
      const int k = x->position;
      if (k + 1 == u) {
        if (opts.upper_corners) {
          note(col, u, l, "upper corner " + x->label);
          upper.push_back(col - 1);
          run(col - 1, u, l);
          upper.pop_back();
        }
        note(col, u, l, "upper pass " + x->label);
        run(col - 1, u - 1, l);
      } else if (k == u && k + 1 < l) {
        run(col - 1, u + 1, l);
      } else if (k == u) {
        note(col, u, l, "dead: pinch at " + x->label);
      } else if (k == l) {
        if (opts.lower_corners) {
          note(col, u, l, "lower corner " + x->label);
          lower.push_back(col - 1);
          run(col - 1, u, l);
          lower.pop_back();
        }
        note(col, u, l, "lower pass " + x->label);
        run(col - 1, u, l + 1);
      } else if (k + 1 == l) {
        run(col - 1, u, l - 1);
      } else {
        run(col - 1, u, l);
      }
      return;
    }
    run(col - 1, u, l);  // divider
  }
};

}  // namespace

std::vector<DiskWord> sweep(const FrontDiagram& f, std::size_t column, int u, int l,
                            const SweepOptions& opts) {
  if (!(1 <= u && u < l && l <= f.strands_at(column)))
    throw Error("bad sweep interval (" + std::to_string(u) + "," + std::to_string(l) + ")");
  Sweeper s{f, opts, {}, {}, {}};
  s.run(column, u, l);
  return std::move(s.out);
}

std::vector<DiskWord> enumerate_disks(const FrontDiagram& f, const Vertex& v,
                                      const SweepOptions& opts) {
  if (v.kind == Vertex::Kind::crossing) {
    const auto& x = std::get<Crossing>(f.events.at(v.index));
    return sweep(f, v.index, x.position, x.position + 1, opts);
  }
  int top = 2 * static_cast<int>(v.index) + 1;
  return sweep(f, f.events.size(), top, top + 1, opts);
}

std::vector<DiskWord> half_disks_A(const FrontDiagram& f, int i, int j, const SweepOptions& opts) {
  if (!f.open_right) throw Error("piece has no right line");
  const int n = f.right_strands();
  if (!(1 <= i && i < j && j <= n))
    throw Error("bad interval (" + std::to_string(i) + "," + std::to_string(j) + ")");
  return sweep(f, f.events.size(), i, j, opts);
}

std::string rho_name(int i, int j) { return "rho" + std::to_string(i) + "_" + std::to_string(j); }

Poly PieceDga::to_poly(const DiskWord& w) const {
  Word out;
  for (auto e : w.upper) out.push_back(*event_gen.at(e));
  if (w.rho) out.push_back(rho.at(*w.rho));
  for (auto it = w.lower.rbegin(); it != w.lower.rend(); ++it) out.push_back(*event_gen.at(*it));
  return Poly::word(std::move(out));
}

Poly PieceDga::to_poly(const std::vector<DiskWord>& ws) const {
  std::vector<Word> all;
  for (const auto& w : ws) all.push_back(to_poly(w).words().front());
  return Poly::from_words(std::move(all));
}

long crossing_grading(const FrontDiagram& f, const PotentialMap& pot, std::size_t index) {
  const auto& x = std::get<Crossing>(f.events.at(index));
  return pot.reduce(pot.at(index, x.position) - pot.at(index, x.position + 1));
}

PieceDga piece_dga(const FrontDiagram& f, const PotentialMap& pot, const SweepOptions& opts) {
  PieceDga p{Dga(pot.modulus()), std::vector<std::optional<GenId>>(f.events.size()), {}, {}};
  for (std::size_t i = 0; i < f.events.size(); ++i)
    if (auto* x = std::get_if<Crossing>(&f.events[i]))
      p.event_gen[i] = p.dga.add(x->label, crossing_grading(f, pot, i));
  for (const auto& label : f.closure) p.cusp_gen.push_back(p.dga.add(label, 1));
  const int n = f.left_strands;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      p.rho[{i, j}] = p.dga.add(rho_name(i, j), pot.at(0, i) - pot.at(0, j) - 1);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      std::vector<Word> ws;
      for (int k = i + 1; k < j; ++k) ws.push_back({p.rho[{i, k}], p.rho[{k, j}]});
      p.dga.set_d(p.rho[{i, j}], Poly::from_words(std::move(ws)));
    }
  for (const auto& v : vertices(f)) {
    Poly d = p.to_poly(enumerate_disks(f, v, opts));
    if (v.kind == Vertex::Kind::right_cusp) {
      d += Poly::one();
      p.dga.set_d(p.cusp_gen[v.index], std::move(d));
    } else {
      p.dga.set_d(*p.event_gen[v.index], std::move(d));
    }
  }
  return p;
}

Dga chekanov_dga(const FrontDiagram& f, const PotentialMap& pot, const SweepOptions& opts) {
  if (!f.is_full()) throw Error("Ch(K) needs a full front; use a bordered piece instead");
  return piece_dga(f, pot, opts).dga;
}

Dga chekanov_dga(const FrontDiagram& f) { return chekanov_dga(f, assign_potentials(f)); }

}  // namespace fdga
