#pragma once

#include <span>
#include <vector>

#include "trirep/universe.hpp"

namespace trirep {

/// A total order on a subset of a universe, stored as the sequence from
/// smallest to largest together with an inverse rank table for O(1) lookup.
class LinearOrder {
 public:
  /// Builds an order from an explicit sequence. Rejects duplicates and ids
  /// outside the universe.
  static LinearOrder over(UniversePtr universe, std::vector<VertexId> sequence);

  const UniversePtr& universe() const { return universe_; }
  int size() const { return static_cast<int>(sequence_.size()); }
  bool contains(VertexId v) const;

  /// 0-based position of v in the sequence. Throws InvalidInput for vertices
  /// outside the order's domain.
  int rank(VertexId v) const;
  VertexId at(int position) const;
  VertexId max() const;
  /// The unique element of rank size-2. Throws on orders with fewer than two
  /// elements.
  VertexId second_max() const;

  /// True iff x precedes y. Irreflexive and total on the domain.
  bool less(VertexId x, VertexId y) const;

  std::span<const VertexId> sequence() const { return sequence_; }

  /// Restriction of the order to its domain minus v.
  LinearOrder erased(VertexId v) const;
  /// Copy with v placed at the given position, displacing later elements up.
  LinearOrder inserted(VertexId v, int position) const;

  friend bool operator==(const LinearOrder& a, const LinearOrder& b) {
    return same_labels(a.universe_, b.universe_) && a.sequence_ == b.sequence_;
  }

 private:
  LinearOrder() = default;
  void rebuild_ranks();

  UniversePtr universe_;
  std::vector<VertexId> sequence_;
  std::vector<std::int32_t> ranks_;  // indexed by id, -1 when absent
};

}  // namespace trirep
