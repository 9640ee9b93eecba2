#pragma once

#include <cstdint>
#include <optional>

#include "trirep/representation.hpp"
#include "trirep/triangulation.hpp"

namespace trirep {

/// SplitMix64: fixed 64-bit generator with splittable seeding, so corpus
/// files reproduce bit-for-bit across platforms.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  /// Unbiased draw from [0, bound) by rejection.
  std::uint64_t bounded(std::uint64_t bound);

 private:
  std::uint64_t state_;
};

/// Exhaustive search for a standard representation with the given apexes whose
/// sigma2 equals g, lexicographically first in the fixed enumeration of order
/// triples (bottom pair, middle permutation, apex on top, per order). Returns
/// nothing when no representation exists. The search space may be partitioned
/// by prefixes of the first order with a deterministic merge; this
/// implementation runs single-threaded.
std::optional<StandardRepresentation> search_representation(
    const SimpleGraph& g, std::array<VertexId, 3> outer, int cap = 7);

/// Seeded stacked triangulation: start from the 4-vertex triangulation on
/// labels v0..v3 with outer (v0,v1,v2) and repeatedly stack a fresh vertex
/// into a uniformly random bounded face. Deterministic per (n, seed).
Triangulation random_stacked_triangulation(int n, std::uint64_t seed);

}  // namespace trirep
