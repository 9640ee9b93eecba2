#pragma once

#include <array>
#include <span>
#include <vector>

#include "trirep/universe.hpp"

namespace trirep {

/// Undirected simple graph over a subset of a universe, kept as symmetric
/// sorted adjacency lists.
class SimpleGraph {
 public:
  SimpleGraph(UniversePtr universe, std::vector<VertexId> vertices);

  void add_vertex(VertexId v);
  void remove_vertex(VertexId v);  // drops incident edges
  void add_edge(VertexId u, VertexId v);
  void remove_edge(VertexId u, VertexId v);

  bool contains(VertexId v) const;
  bool has_edge(VertexId u, VertexId v) const;
  std::span<const VertexId> neighbors(VertexId v) const;
  int degree(VertexId v) const;

  std::span<const VertexId> vertices() const { return vertices_; }
  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int edge_count() const { return edge_count_; }
  const UniversePtr& universe() const { return universe_; }

  /// Exact labeled equality: same vertex set and same edge set over equal
  /// universes. Never isomorphism.
  friend bool operator==(const SimpleGraph& a, const SimpleGraph& b);

 private:
  void check_vertex(VertexId v) const;

  UniversePtr universe_;
  std::vector<VertexId> vertices_;            // ascending
  std::vector<char> active_;                  // by id
  std::vector<std::vector<VertexId>> adj_;    // by id, each ascending
  int edge_count_ = 0;
};

/// Unordered triple of distinct vertices, stored sorted.
struct Triple {
  std::array<VertexId, 3> v;

  static Triple of(VertexId a, VertexId b, VertexId c);
  friend auto operator<=>(const Triple&, const Triple&) = default;
};

/// Sorted set of triples.
class TripleSet {
 public:
  void insert(Triple t);
  bool contains(const Triple& t) const;
  int size() const { return static_cast<int>(items_.size()); }
  auto begin() const { return items_.begin(); }
  auto end() const { return items_.end(); }

  /// Copy without the given triple.
  TripleSet without(const Triple& t) const;

  friend bool operator==(const TripleSet&, const TripleSet&) = default;

 private:
  std::vector<Triple> items_;
};

}  // namespace trirep
