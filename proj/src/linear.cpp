#include "frontdga/linear.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <optional>
#include <set>

#include "frontdga/bordered.hpp"

namespace fdga {

void BitVec::set(std::size_t i, bool v) {
  if (v)
    w_[i >> 6] |= std::uint64_t{1} << (i & 63);
  else
    w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
}

BitVec& BitVec::operator^=(const BitVec& o) {
  if (o.n_ != n_) throw Error("bit vector size mismatch");
  for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
  return *this;
}

bool BitVec::any() const {
  return std::any_of(w_.begin(), w_.end(), [](std::uint64_t x) { return x != 0; });
}

std::size_t BitVec::lowest() const {
  for (std::size_t i = 0; i < w_.size(); ++i)
    if (w_[i]) return i * 64 + static_cast<std::size_t>(std::countr_zero(w_[i]));
  return n_;
}

std::size_t BitVec::count() const {
  std::size_t c = 0;
  for (auto x : w_) c += static_cast<std::size_t>(std::popcount(x));
  return c;
}

BitVec Gf2Echelon::reduce(BitVec v, BitVec* combo) const {
  for (std::size_t r = 0; r < rows_.size(); ++r)
    if (v.get(pivots_[r])) {
      v ^= rows_[r];
      if (combo) *combo ^= combos_[r];
    }
  return v;
}

bool Gf2Echelon::insert(const BitVec& v, BitVec* dependency) {
  if (v.size() != dim_) throw Error("echelon dimension mismatch");
  const std::size_t tag = added_++;
  BitVec combo(inputs_);
  BitVec r = reduce(v, inputs_ ? &combo : nullptr);
  if (inputs_) {
    if (tag >= inputs_) throw Error("echelon input budget exceeded");
    combo.flip(tag);
  }
  if (!r.any()) {
    if (dependency && inputs_) *dependency = combo;
    return false;
  }
  pivots_.push_back(r.lowest());
  rows_.push_back(std::move(r));
  if (inputs_) combos_.push_back(std::move(combo));
  return true;
}

std::size_t gf2_rank(const std::vector<BitVec>& vectors, std::size_t dim) {
  Gf2Echelon e(dim);
  for (const auto& v : vectors) e.insert(v);
  return e.rank();
}

std::size_t gf2_rank_transposed(const std::vector<BitVec>& cols, std::size_t dim) {
  std::vector<BitVec> rows(dim, BitVec(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < dim; ++i)
      if (cols[j].get(i)) rows[i].set(j);
  return gf2_rank(rows, cols.size());
}

// ---------------------------------------------------------------------------

bool eps_value(const Poly& p, const Augmentation& eps) {
  bool v = false;
  for (const auto& w : p.words())
    if (std::all_of(w.begin(), w.end(), [&](GenId g) { return eps.at(g) != 0; })) v = !v;
  return v;
}

std::string augmentation_problem(const Dga& d, const Augmentation& eps) {
  if (eps.size() != d.size()) return "augmentation has wrong length";
  for (GenId g = 0; g < d.size(); ++g) {
    if (eps[g] && d.grading(g) != 0) return d.name(g) + " has nonzero grading but eps = 1";
    if (eps_value(d.d(g), eps)) return "eps(d" + d.name(g) + ") = 1";
  }
  return "";
}

std::vector<Augmentation> find_augmentations(const Dga& d, std::uint64_t cap) {
  std::vector<GenId> vars;
  std::vector<int> var_of(d.size(), -1);
  for (GenId g = 0; g < d.size(); ++g)
    if (d.grading(g) == 0) {
      var_of[g] = static_cast<int>(vars.size());
      vars.push_back(g);
    }
  // each constraint: XOR of monomials (sorted variable sets) must vanish
  struct Constraint {
    std::vector<std::vector<int>> monomials;
    bool constant = false;
  };
  std::vector<std::vector<Constraint>> trigger(vars.size());
  for (GenId g = 0; g < d.size(); ++g) {
    std::map<std::vector<int>, int> mons;
    for (const auto& w : d.d(g).words()) {
      std::vector<int> m;
      bool ok = true;
      for (GenId h : w) {
        if (var_of[h] < 0) {
          ok = false;
          break;
        }
        m.push_back(var_of[h]);
      }
      if (!ok) continue;
      std::sort(m.begin(), m.end());
      m.erase(std::unique(m.begin(), m.end()), m.end());
      mons[m] ^= 1;
    }
    Constraint c;
    int last = -1;
    for (auto& [m, parity] : mons) {
      if (!parity) continue;
      if (m.empty()) {
        c.constant = true;
        continue;
      }
      last = std::max(last, m.back());
      c.monomials.push_back(m);
    }
    if (last < 0) {
      if (c.constant) return {};
      continue;
    }
    trigger[last].push_back(std::move(c));
  }

  std::vector<Augmentation> out;
  std::vector<std::uint8_t> val(vars.size(), 0);
  std::uint64_t nodes = 0;
  std::function<void(std::size_t)> go = [&](std::size_t i) {
    if (i == vars.size()) {
      Augmentation eps(d.size(), 0);
      for (std::size_t k = 0; k < vars.size(); ++k) eps[vars[k]] = val[k];
      out.push_back(std::move(eps));
      return;
    }
    for (std::uint8_t b : {0, 1}) {
      if (++nodes > cap) throw AugmentationCapExceeded(vars.size(), cap);
      val[i] = b;
      bool ok = true;
      for (const auto& c : trigger[i]) {
        bool s = c.constant;
        for (const auto& m : c.monomials)
          if (std::all_of(m.begin(), m.end(), [&](int v) { return val[v] != 0; })) s = !s;
        if (s) {
          ok = false;
          break;
        }
      }
      if (ok) go(i + 1);
    }
    val[i] = 0;
  };
  go(0);
  return out;
}

std::string augmentation_bitmap(const Dga& d, const Augmentation& eps) {
  std::string s;
  for (GenId g = 0; g < d.size(); ++g)
    if (d.grading(g) == 0) s += eps.at(g) ? '1' : '0';
  return s;
}

// ---------------------------------------------------------------------------

BitVec LinearizedComplex::apply(const BitVec& v) const {
  BitVec out(size());
  for (std::size_t j = 0; j < size(); ++j)
    if (v.get(j)) out ^= boundary[j];
  return out;
}

BitVec linear_part(const Dga& d, const Poly& p, const Augmentation& eps) {
  BitVec out(d.size());
  for (const auto& w : p.words()) {
    std::size_t zeros = 0, where = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
      if (!eps.at(w[i])) {
        ++zeros;
        where = i;
      }
    if (zeros == 0) {
      for (GenId g : w) out.flip(g);
    } else if (zeros == 1) {
      out.flip(w[where]);
    }
  }
  return out;
}

LinearizedComplex linearize(const Dga& d, const Augmentation& eps) {
  if (auto why = augmentation_problem(d, eps); !why.empty()) throw Error("not an augmentation: " + why);
  LinearizedComplex c;
  c.modulus = d.modulus();
  for (GenId g = 0; g < d.size(); ++g) {
    c.names.push_back(d.name(g));
    c.grading.push_back(d.grading(g));
    c.boundary.push_back(linear_part(d, d.d(g), eps));
  }
  return c;
}

namespace {

std::vector<std::size_t> in_degree(const LinearizedComplex& c, long k) {
  std::vector<std::size_t> idx;
  for (std::size_t j = 0; j < c.size(); ++j)
    if (c.grading[j] == c.reduce(k)) idx.push_back(j);
  return idx;
}

std::vector<BitVec> columns(const LinearizedComplex& c, const std::vector<std::size_t>& idx) {
  std::vector<BitVec> out;
  for (auto j : idx) out.push_back(c.boundary[j]);
  return out;
}

std::set<long> degrees(const std::vector<const LinearizedComplex*>& cs, int modulus) {
  std::set<long> ks;
  if (modulus > 0) {
    for (long k = 0; k < modulus; ++k) ks.insert(k);
    return ks;
  }
  for (auto* c : cs)
    for (long g : c->grading) ks.insert({g - 1, g, g + 1});
  return ks;
}

std::map<long, long> homology_with(const LinearizedComplex& c,
                                   const std::function<std::size_t(const std::vector<BitVec>&)>& rank) {
  std::map<long, long> dims;
  for (long k : degrees({&c}, c.modulus)) {
    auto here = in_degree(c, k);
    if (here.empty()) continue;
    long h = static_cast<long>(here.size()) - static_cast<long>(rank(columns(c, here))) -
             static_cast<long>(rank(columns(c, in_degree(c, k + 1))));
    if (h != 0) dims[c.reduce(k)] = h;
  }
  return dims;
}

}  // namespace

std::map<long, long> homology(const LinearizedComplex& c) {
  return homology_with(c, [&](const std::vector<BitVec>& v) { return gf2_rank(v, c.size()); });
}

std::map<long, long> homology_transposed(const LinearizedComplex& c) {
  return homology_with(c, [&](const std::vector<BitVec>& v) { return gf2_rank_transposed(v, c.size()); });
}

LaurentPoly chekanov_polynomial(const LinearizedComplex& c) {
  LaurentPoly p;
  for (auto [k, dim] : homology(c)) p.add(k, dim);
  return p;
}

LaurentPoly chekanov_polynomial(const Dga& d, const Augmentation& eps) {
  return chekanov_polynomial(linearize(d, eps));
}

DualityReport duality_report(const LaurentPoly& p, long tb) {
  DualityReport r;
  LaurentPoly q = p - LaurentPoly::monomial(1);
  r.symmetric = q == q.inverted();
  r.p_at_minus_one = p.eval_minus_one();
  r.tb = tb;
  r.euler_ok = r.p_at_minus_one == tb;
  return r;
}

// ---------------------------------------------------------------------------

namespace {

// Matrix given by columns; maps vectors of length cols.size() to length dim.
struct Gf2Map {
  std::size_t dim = 0;
  std::vector<BitVec> cols;

  BitVec apply(const BitVec& v) const {
    BitVec out(dim);
    for (std::size_t j = 0; j < cols.size(); ++j)
      if (v.get(j)) out ^= cols[j];
    return out;
  }

  std::optional<BitVec> solve(const BitVec& b) const {
    Gf2Echelon e(dim, cols.size());
    for (const auto& c : cols) e.insert(c);
    BitVec combo(cols.size());
    if (e.reduce(b, &combo).any()) return std::nullopt;
    return combo;
  }

  std::size_t rank() const { return gf2_rank(cols, dim); }
};

BitVec unit(std::size_t n, std::size_t i) {
  BitVec v(n);
  v.set(i);
  return v;
}

BitVec embed(const std::vector<std::size_t>& idx, const BitVec& combo, std::size_t n) {
  BitVec v(n);
  for (std::size_t t = 0; t < idx.size(); ++t)
    if (combo.get(t)) v.set(idx[t]);
  return v;
}

std::vector<BitVec> cycles(const LinearizedComplex& c, long k) {
  auto idx = in_degree(c, k);
  Gf2Echelon e(c.size(), idx.size());
  std::vector<BitVec> out;
  for (auto j : idx) {
    BitVec dep;
    if (!e.insert(c.boundary[j], &dep)) out.push_back(embed(idx, dep, c.size()));
  }
  return out;
}

std::vector<BitVec> boundaries(const LinearizedComplex& c, long k) {
  return columns(c, in_degree(c, k + 1));
}

// Rank of the map induced on H_k by F from the given cycles into target.
std::size_t induced_rank(const std::vector<BitVec>& images, const LinearizedComplex& target, long k) {
  Gf2Echelon e(target.size());
  for (const auto& b : boundaries(target, k)) e.insert(b);
  const std::size_t base = e.rank();
  for (const auto& v : images) e.insert(v);
  return e.rank() - base;
}

}  // namespace

MayerVietorisReport mayer_vietoris(const FrontDiagram& front, const std::string& divider,
                                   const Augmentation& eps) {
  if (!front.is_full()) throw Error("Mayer-Vietoris needs a full front");
  MayerVietorisReport r;
  PotentialMap pot = assign_potentials(front);
  Dga ch = chekanov_dga(front, pot);
  if (auto why = augmentation_problem(ch, eps); !why.empty())
    throw Error("not an augmentation of Ch(K): " + why);
  SplitFront s = split_at(front, pot, divider);
  r.points = s.points;
  BorderedPiece L = make_piece(s.left);
  BorderedPiece R = make_piece(s.right);
  const Dga& A = L.algebra;
  const Dga& D = R.algebra;
  const Dga& I = L.right->dga;

  Augmentation eA(A.size()), eI(I.size()), eD(D.size());
  for (GenId g = 0; g < A.size(); ++g) eA[g] = eps[ch.id(A.name(g))];
  for (GenId g = 0; g < I.size(); ++g) eI[g] = eps_value(L.w_right[g], eA);
  for (GenId g = 0; g < D.size(); ++g) {
    auto h = ch.find(D.name(g));
    eD[g] = h ? eps[*h] : eI[I.id(D.name(g))];
  }
  for (auto [alg, e, what] : {std::tuple{&A, &eA, "A"}, {&I, &eI, "I"}, {&D, &eD, "D"}}) {
    auto why = augmentation_problem(*alg, *e);
    if (!why.empty()) {
      r.augmentations_ok = false;
      r.failures.push_back(std::string("induced augmentation of ") + what + ": " + why);
    }
  }
  if (!r.augmentations_ok) return r;

  LinearizedComplex cI = linearize(I, eI), cA = linearize(A, eA), cD = linearize(D, eD),
                    cC = linearize(ch, eps);
  const std::size_t nA = cA.size(), nM = nA + cD.size();
  LinearizedComplex cM;
  cM.modulus = ch.modulus();
  for (const auto* part : {&cA, &cD})
    for (std::size_t j = 0; j < part->size(); ++j) {
      cM.names.push_back(part->names[j]);
      cM.grading.push_back(part->grading[j]);
      BitVec col(nM);
      std::size_t shift = part == &cA ? 0 : nA;
      for (std::size_t i = 0; i < part->size(); ++i)
        if (part->boundary[j].get(i)) col.set(shift + i);
      cM.boundary.push_back(std::move(col));
    }

  Gf2Map f{nM, {}}, g{cC.size(), {}}, inc{cD.size(), {}};
  for (GenId j = 0; j < I.size(); ++j) {
    BitVec col(nM);
    BitVec wa = linear_part(A, L.w_right[j], eA);
    for (std::size_t i = 0; i < nA; ++i)
      if (wa.get(i)) col.set(i);
    col.set(nA + D.id(I.name(j)));
    f.cols.push_back(std::move(col));
    inc.cols.push_back(unit(cD.size(), D.id(I.name(j))));
  }
  for (GenId j = 0; j < A.size(); ++j) g.cols.push_back(unit(cC.size(), ch.id(A.name(j))));
  for (GenId j = 0; j < D.size(); ++j) {
    if (auto h = ch.find(D.name(j))) {
      g.cols.push_back(unit(cC.size(), *h));
    } else {
      Poly w = ch.import(A, L.w_right[I.id(D.name(j))]);
      g.cols.push_back(linear_part(ch, w, eps));
    }
  }

  // chain maps and short exactness
  auto chain = [&](const Gf2Map& F, const LinearizedComplex& src, const LinearizedComplex& dst,
                   const char* what) {
    for (std::size_t j = 0; j < src.size(); ++j)
      if (F.apply(src.boundary[j]) != dst.apply(F.cols[j])) {
        r.chain_maps_ok = false;
        r.failures.push_back(std::string(what) + " is not a chain map at " + src.names[j]);
      }
  };
  chain(f, cI, cM, "f");
  chain(g, cM, cC, "g");
  for (std::size_t j = 0; j < f.cols.size(); ++j)
    if (g.apply(f.cols[j]).any()) {
      r.ses_exact = false;
      r.failures.push_back("g f != 0 at " + cI.names[j]);
    }
  const std::size_t rf = f.rank(), rg = g.rank();
  if (rf != cI.size()) {
    r.ses_exact = false;
    r.failures.push_back("f is not injective");
  }
  if (rg != cC.size()) {
    r.ses_exact = false;
    r.failures.push_back("g is not surjective");
  }
  if (rf + rg != nM) {
    r.ses_exact = false;
    r.failures.push_back("im f != ker g");
  }

  r.h_interval = homology(cI);
  r.h_left = homology(cA);
  r.h_right = homology(cD);
  r.h_whole = homology(cC);
  if (!r.ses_exact || !r.chain_maps_ok) return r;

  auto dim_at = [&](const std::map<long, long>& h, long k) {
    auto it = h.find(reduce_grading(k, cC.modulus));
    return it == h.end() ? 0L : it->second;
  };
  auto mapped = [](const Gf2Map& F, const std::vector<BitVec>& zs) {
    std::vector<BitVec> out;
    for (const auto& z : zs) out.push_back(F.apply(z));
    return out;
  };
  auto hM = homology(cM);
  std::map<long, long> rank_f, rank_g, rank_delta;
  const auto ks = degrees({&cI, &cM, &cC}, cC.modulus);
  for (long k : ks) {
    rank_f[k] = static_cast<long>(induced_rank(mapped(f, cycles(cI, k)), cM, k));
    rank_g[k] = static_cast<long>(induced_rank(mapped(g, cycles(cM, k)), cC, k));
    long ir = static_cast<long>(induced_rank(mapped(inc, cycles(cI, k)), cD, k));
    if (ir) r.inclusion_rank[cC.reduce(k)] = ir;
    // connecting map H_k(Ch) -> H_{k-1}(I)
    std::vector<BitVec> deltas;
    for (const auto& z : cycles(cC, k)) {
      auto m = g.solve(z);
      if (!m) throw Error("internal: g not surjective on a cycle");
      auto i = f.solve(cM.apply(*m));
      if (!i) {
        r.les_exact = false;
        r.failures.push_back("boundary of a lift is not in im f at degree " + std::to_string(k));
        continue;
      }
      deltas.push_back(*i);
      if (induced_rank({f.apply(*i)}, cM, k - 1) != 0) {
        r.les_exact = false;
        r.failures.push_back("f_* delta != 0 at degree " + std::to_string(k));
      }
    }
    rank_delta[k] = static_cast<long>(induced_rank(deltas, cI, k - 1));
  }
  for (long k : ks) {
    auto look = [&](std::map<long, long>& m, long kk) {
      if (cC.modulus > 0) kk = cC.reduce(kk);
      auto it = m.find(kk);
      return it == m.end() ? 0L : it->second;
    };
    const std::string at = " at degree " + std::to_string(k);
    if (look(rank_delta, k + 1) + look(rank_f, k) != dim_at(r.h_interval, k)) {
      r.les_exact = false;
      r.failures.push_back("not exact at H(I)" + at);
    }
    if (look(rank_f, k) + look(rank_g, k) != dim_at(hM, k)) {
      r.les_exact = false;
      r.failures.push_back("not exact at H(A)+H(D)" + at);
    }
    if (look(rank_g, k) + look(rank_delta, k) != dim_at(r.h_whole, k)) {
      r.les_exact = false;
      r.failures.push_back("not exact at H(Ch)" + at);
    }
  }
  return r;
}

}  // namespace fdga
