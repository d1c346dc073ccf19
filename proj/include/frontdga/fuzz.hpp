// Random simple fronts and the invariant suite run over them.
#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "frontdga/disks.hpp"
#include "frontdga/front.hpp"

namespace fdga {

struct FuzzParams {
  int min_vertices = 2;
  int max_vertices = 12;
  bool mayer_vietoris = false;      // also run Mayer-Vietoris on up to `mv_per_case` augmentations
  std::size_t mv_per_case = 2;
  std::uint64_t cap = std::uint64_t{1} << 16;
  SweepOptions sweep;               // corner switches allow fault injection
  unsigned threads = 0;             // 0: hardware concurrency
};

/// Valid full front with a divider "cut"; depends only on (seed, index).
FrontDiagram random_front(std::uint64_t seed, std::size_t index, const FuzzParams& params);

struct FuzzCase {
  std::size_t index = 0;
  FrontDiagram front;
  std::vector<std::string> failures;
  std::size_t augmentations = 0;
  std::size_t mv_runs = 0;
  bool cap_hit = false;
};

FuzzCase check_front(const FrontDiagram& front, const FuzzParams& params);

/// Greedy shrinking: drops crossings and cusp pairs while `still_fails` holds.
FrontDiagram minimize_front(const FrontDiagram& front,
                            const std::function<bool(const FrontDiagram&)>& still_fails);

struct FuzzFailure {
  std::size_t index = 0;
  FrontDiagram minimized;
  std::vector<std::string> failures;  // of the minimized front
};

struct FuzzReport {
  std::size_t count = 0;
  std::size_t passed = 0;
  std::size_t augmented = 0;  // cases with at least one augmentation
  std::size_t mv_runs = 0;
  std::size_t cap_hits = 0;
  std::vector<FuzzFailure> failures;
};

/// Cases run in parallel and are merged by index, so the report depends
/// only on (seed, count, params).
FuzzReport run_fuzz(std::uint64_t seed, std::size_t count, const FuzzParams& params);

}  // namespace fdga
