#pragma once

#include <array>
#include <string>
#include <vector>

#include "trirep/graph.hpp"
#include "trirep/representation.hpp"

namespace trirep {

/// The adjacency graph of a representation: xy is an edge iff every other
/// vertex lies strictly above both x and y in some order. Implemented as the
/// literal cubic scan; the definition doubles as the specification.
SimpleGraph sigma2(const StandardRepresentation& rep);

/// Single edge test of the sigma2 definition.
bool sigma2_has_edge(const StandardRepresentation& rep, VertexId x, VertexId y);

/// Raw membership predicate behind sigma3: xyw qualifies iff every vertex z of
/// the whole set, the triple included, satisfies z >= x, z >= y and z >= w in
/// some order (non-strict, so each triple member must top the triple
/// somewhere).
bool sigma3_triple_holds(const StandardRepresentation& rep, VertexId x,
                         VertexId y, VertexId w);

/// All qualifying triples, with the apex triple removed after the scan. For
/// three vertices the apex triple itself satisfies the raw predicate, so the
/// result is empty there; from four vertices on the predicate already rejects
/// it.
TripleSet sigma3(const StandardRepresentation& rep);

struct FanCheck {
  bool holds = true;
  bool applicable = true;  // false when the condition needs >= 4 vertices
  std::string detail;      // witness text when the check fails
};

/// Neighbors of the first apex sorted by the second order, plus the six
/// structural facts that hold for every valid representation.
struct FanReport {
  std::vector<VertexId> fan;  // ascending in order 2
  VertexId second_max;        // of order 1
  std::array<FanCheck, 6> checks;

  static const char* check_name(int i);
  bool all_hold() const;
};

/// Computes the fan report for the first apex. g must equal sigma2(rep); the
/// mismatch is an error, not a failed check.
FanReport fan_of_apex(const StandardRepresentation& rep, const SimpleGraph& g);

/// Contracts the edge keep-remove, merging remove into keep and dropping
/// parallel edges. Errors on non-edges.
SimpleGraph contract_vertex(const SimpleGraph& g, VertexId keep,
                            VertexId remove);

}  // namespace trirep
