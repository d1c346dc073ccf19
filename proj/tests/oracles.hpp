// Slow reference implementations used to cross-check the library.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "frontdga/algebra.hpp"
#include "frontdga/disks.hpp"
#include "frontdga/front.hpp"

namespace oracle {

/// Every pair of boundary paths from (u, l) at `column` leftward, branching
/// on follow/switch at each crossing a boundary meets, kept when each switch
/// covers exactly one quadrant and the paths close at a left cusp or reach
/// the left line.
std::vector<fdga::DiskWord> disks(const fdga::FrontDiagram& f, std::size_t column, int u, int l);

/// Sorted rendering of disk words, for multiset comparison.
std::vector<std::string> canonical(const std::vector<fdga::DiskWord>& ws);

/// All ε on degree-0 generators, by trying every assignment.
std::vector<std::vector<std::uint8_t>> augmentations(const fdga::Dga& d);

/// Linear part of ∂ under ε by expanding every word in full; homology by
/// dense elimination. Keyed by degree.
std::map<long, long> linearized_homology(const fdga::Dga& d, const std::vector<std::uint8_t>& eps);

/// Dense GF(2) rank.
std::size_t rank(std::vector<std::vector<std::uint8_t>> rows);

}  // namespace oracle
