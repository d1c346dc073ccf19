// Admissible disks and half-disks, enumerated by a right-to-left sweep.
#pragma once

#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "frontdga/algebra.hpp"
#include "frontdga/front.hpp"

namespace fdga {

struct Vertex {
  enum class Kind { crossing, right_cusp };
  Kind kind;
  std::size_t index;  // event index or closure index
  std::string label;
};

/// Crossings in event order, then right cusps top to bottom.
std::vector<Vertex> vertices(const FrontDiagram& f);

struct DiskWord {
  std::vector<std::size_t> upper;  // crossing event indices, right to left
  std::vector<std::size_t> lower;  // crossing event indices, right to left
  std::optional<std::pair<int, int>> rho;  // interval on the left boundary line

  bool operator==(const DiskWord&) const = default;
};

struct SweepOptions {
  bool upper_corners = true;  // switches used only to test the fuzz harness
  bool lower_corners = true;
  std::function<void(const std::string&)> trace;
};

/// Sweeps leftward from `column` with boundary strands at positions u < l.
std::vector<DiskWord> sweep(const FrontDiagram& f, std::size_t column, int u, int l,
                            const SweepOptions& opts = {});

/// Disks (and half-disks reaching the left line) whose rightmost point is v.
std::vector<DiskWord> enumerate_disks(const FrontDiagram& f, const Vertex& v,
                                      const SweepOptions& opts = {});

/// Half-disks bounded on the right by the segment between points i < j of
/// the right dividing line.
std::vector<DiskWord> half_disks_A(const FrontDiagram& f, int i, int j,
                                   const SweepOptions& opts = {});

/// ρ generator naming shared by every algebra built here.
std::string rho_name(int i, int j);

/// The algebra of a front or piece: crossings, then right cusps, then the
/// ρ_ij of the left line (if any), with disk differentials.
struct PieceDga {
  Dga dga;
  std::vector<std::optional<GenId>> event_gen;  // per event
  std::vector<GenId> cusp_gen;
  std::map<std::pair<int, int>, GenId> rho;

  Poly to_poly(const DiskWord& w) const;
  Poly to_poly(const std::vector<DiskWord>& ws) const;
};

PieceDga piece_dga(const FrontDiagram& f, const PotentialMap& pot, const SweepOptions& opts = {});

/// Ch(K) of a full front.
Dga chekanov_dga(const FrontDiagram& f, const PotentialMap& pot, const SweepOptions& opts = {});
Dga chekanov_dga(const FrontDiagram& f);

/// Grading of the crossing at event `index`.
long crossing_grading(const FrontDiagram& f, const PotentialMap& pot, std::size_t index);

}  // namespace fdga
