// Augmentations, linearized complexes and their GF(2) homology.
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "frontdga/algebra.hpp"
#include "frontdga/front.hpp"

namespace fdga {

/// Dense GF(2) vector.
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}
  std::size_t size() const { return n_; }
  bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1U; }
  void set(std::size_t i, bool v = true);
  void flip(std::size_t i) { w_[i >> 6] ^= std::uint64_t{1} << (i & 63); }
  BitVec& operator^=(const BitVec& o);
  bool any() const;
  /// Lowest set index, or size() when zero.
  std::size_t lowest() const;
  std::size_t count() const;
  bool operator==(const BitVec&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> w_;
};

/// Row-echelon accumulator that remembers how each pivot row was formed.
class Gf2Echelon {
 public:
  /// With `inputs > 0`, remembers which inputs (up to that many) form each row.
  explicit Gf2Echelon(std::size_t dim, std::size_t inputs = 0) : dim_(dim), inputs_(inputs) {}
  /// Adds v as input number `rows_added()`; false if dependent, in which case
  /// `dependency` (when tracking) receives the inputs summing to zero with v.
  bool insert(const BitVec& v, BitVec* dependency = nullptr);
  std::size_t rank() const { return rows_.size(); }
  std::size_t rows_added() const { return added_; }
  /// Reduces v against the pivots; `combo` receives the inputs used.
  BitVec reduce(BitVec v, BitVec* combo = nullptr) const;
  bool in_span(const BitVec& v) const { return !reduce(v).any(); }

 private:
  std::size_t dim_;
  std::size_t inputs_;
  std::size_t added_ = 0;
  std::vector<BitVec> rows_;
  std::vector<BitVec> combos_;
  std::vector<std::size_t> pivots_;
};

std::size_t gf2_rank(const std::vector<BitVec>& vectors, std::size_t dim);
/// Rank of the matrix whose columns are `cols`, computed on its transpose.
std::size_t gf2_rank_transposed(const std::vector<BitVec>& cols, std::size_t dim);

using Augmentation = std::vector<std::uint8_t>;  // indexed by generator id

class AugmentationCapExceeded : public Error {
 public:
  AugmentationCapExceeded(std::size_t free_vars, std::uint64_t cap)
      : Error("augmentation search over " + std::to_string(free_vars) +
              " degree-0 generators exceeded cap " + std::to_string(cap)),
        free_vars(free_vars) {}
  std::size_t free_vars;
};

/// ε extended multiplicatively to a poly.
bool eps_value(const Poly& p, const Augmentation& eps);
/// Empty string when eps is an augmentation, otherwise the first violation.
std::string augmentation_problem(const Dga& d, const Augmentation& eps);
inline bool is_augmentation(const Dga& d, const Augmentation& eps) {
  return augmentation_problem(d, eps).empty();
}

/// All augmentations, in lexicographic order of their values on degree-0
/// generators (taken in generator order).
std::vector<Augmentation> find_augmentations(const Dga& d, std::uint64_t cap = std::uint64_t{1} << 20);

std::string augmentation_bitmap(const Dga& d, const Augmentation& eps);

/// Linearized complex with basis = all generators of the algebra.
struct LinearizedComplex {
  std::vector<std::string> names;
  std::vector<long> grading;
  int modulus = 0;
  std::vector<BitVec> boundary;  // column per basis element

  std::size_t size() const { return names.size(); }
  long reduce(long g) const { return reduce_grading(g, modulus); }
  BitVec apply(const BitVec& v) const;
};

/// Linear term of p after h -> h + ε(h), as a vector over the generators.
BitVec linear_part(const Dga& d, const Poly& p, const Augmentation& eps);
LinearizedComplex linearize(const Dga& d, const Augmentation& eps);

/// dim H_k keyed by degree (residue when modulus > 0); zero entries omitted.
std::map<long, long> homology(const LinearizedComplex& c);
/// Same, with every rank computed on transposed matrices.
std::map<long, long> homology_transposed(const LinearizedComplex& c);
/// Degrees are residues mod m when m > 0.
LaurentPoly chekanov_polynomial(const LinearizedComplex& c);
LaurentPoly chekanov_polynomial(const Dga& d, const Augmentation& eps);

struct DualityReport {
  bool symmetric = false;
  bool euler_ok = false;
  long p_at_minus_one = 0;
  long tb = 0;
  bool ok() const { return symmetric && euler_ok; }
};

/// P - t symmetric under t -> 1/t, and P(-1) = tb.
DualityReport duality_report(const LaurentPoly& p, long tb);

struct MayerVietorisReport {
  bool augmentations_ok = true;
  bool chain_maps_ok = true;
  bool ses_exact = true;
  bool les_exact = true;
  int points = 0;
  std::map<long, long> h_interval, h_left, h_right, h_whole;
  /// rank of the inclusion I -> D on homology, per degree
  std::map<long, long> inclusion_rank;
  std::vector<std::string> failures;
  bool ok() const { return augmentations_ok && chain_maps_ok && ses_exact && les_exact; }
};

/// eps is an augmentation of chekanov_dga(front), indexed by its generator ids.
MayerVietorisReport mayer_vietoris(const FrontDiagram& front, const std::string& divider,
                                   const Augmentation& eps);

}  // namespace fdga
