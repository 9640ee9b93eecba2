#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "trirep/graph.hpp"

namespace trirep {

/// Cyclic neighbor order per vertex. The convention throughout the repo:
/// rotations list neighbors counterclockwise, faces are traced with
/// next(u,v) = (v, pred(v, u)), bounded faces come out counterclockwise and
/// the outer face traces as the directed cycle of the outer triple.
class RotationSystem {
 public:
  explicit RotationSystem(UniversePtr universe);

  void set(VertexId v, std::vector<VertexId> cycle);
  bool has(VertexId v) const;
  std::span<const VertexId> at(VertexId v) const;

  VertexId succ(VertexId v, VertexId u) const;  // neighbor after u around v
  VertexId pred(VertexId v, VertexId u) const;  // neighbor before u around v

  /// Copy with every cycle reversed (the mirror embedding).
  RotationSystem reflected() const;

  const UniversePtr& universe() const { return universe_; }

  /// Cyclic equality per vertex, anchor-independent.
  static bool same_cycles(const RotationSystem& a, const RotationSystem& b,
                          std::span<const VertexId> vertices);

 private:
  int position(VertexId v, VertexId u) const;

  UniversePtr universe_;
  std::vector<std::vector<VertexId>> cycles_;  // by id
  std::vector<char> defined_;                  // by id
};

/// Traces all faces of the rotation system as directed vertex cycles.
/// Deterministic: arcs are visited in vertex id, then rotation position order.
std::vector<std::vector<VertexId>> trace_faces(const SimpleGraph& g,
                                               const RotationSystem& rot);

struct TriangulationCheck;

/// A maximal planar graph with an embedding (rotation system) and a designated
/// outer triangle. Immutable once validated.
class Triangulation {
 public:
  static TriangulationCheck validate(SimpleGraph graph, RotationSystem rotation,
                                     std::array<VertexId, 3> outer);
  /// Throwing form of validate.
  static Triangulation require(SimpleGraph graph, RotationSystem rotation,
                               std::array<VertexId, 3> outer);

  const SimpleGraph& graph() const { return graph_; }
  const RotationSystem& rotation() const { return rotation_; }
  std::array<VertexId, 3> outer() const { return outer_; }
  VertexId apex(int i) const { return outer_[i]; }
  int size() const { return graph_.vertex_count(); }

 private:
  Triangulation(SimpleGraph g, RotationSystem r, std::array<VertexId, 3> outer);

  SimpleGraph graph_;
  RotationSystem rotation_;
  std::array<VertexId, 3> outer_;
};

struct TriangulationCheck {
  std::optional<Triangulation> tri;
  std::string failure;  // first violated invariant with a witness

  bool ok() const { return tri.has_value(); }
};

/// Rebuilds the embedding of an abstract maximal planar graph. Each vertex
/// neighborhood must induce a unique Hamilton cycle (true exactly in
/// triangulations); orientations are propagated from the first outer vertex
/// and the whole system is reflected if needed so the outer triple traces in
/// order. Throws NotTriangulation with a witness otherwise.
RotationSystem recover_rotation(const SimpleGraph& g,
                                std::array<VertexId, 3> outer);

/// Orients a face list against the outer triple and converts it to rotations.
/// Face rows may be given in any vertex order; orientation is propagated
/// across shared edges. Throws NotTriangulation on inconsistent input.
RotationSystem rotation_from_faces(
    const SimpleGraph& g, std::array<VertexId, 3> outer,
    const std::vector<std::array<VertexId, 3>>& face_rows);

/// The rotation of v as a linear list. For the first apex the list starts at
/// the third apex and ends at the second, i.e. the fan across the inside of
/// the outer face; other vertices are anchored at their smallest neighbor id.
std::vector<VertexId> neighbor_cycle(const Triangulation& t, VertexId v);

/// Picks a neighbor w of the first apex a1 with exactly two common neighbors
/// with a1, its two fan neighbors. Chordless fan: the second fan vertex.
/// Otherwise w follows the shortest chord (smallest index gap along the fan,
/// ties to the smallest lower endpoint). Requires at least 5 vertices.
VertexId select_contractible(const Triangulation& t);

/// Contracts the edge a1-w into a1, splicing w's fan into a1's rotation.
/// Requires w to satisfy the two-common-neighbor condition (otherwise the
/// contraction would create parallel edges).
Triangulation contract(const Triangulation& t, VertexId w);

}  // namespace trirep
