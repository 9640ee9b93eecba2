#pragma once

#include "trirep/representation.hpp"
#include "trirep/triangulation.hpp"

namespace trirep {

/// Builds the embedding of sigma2(rep) with the apexes as outer face, by
/// peeling the second-largest vertex of order 1 down to the 3- or 4-vertex
/// base and splicing each vertex back into the rotation of the first apex.
Triangulation embed(const StandardRepresentation& rep);

/// All faces of a triangulation as triples, with the outer face flagged.
/// count is the number of traced faces (2n-4); for three vertices both faces
/// share one triple, so the set is smaller than the count.
struct FaceSet {
  TripleSet all;
  Triple outer;
  int count = 0;

  TripleSet bounded() const { return all.without(outer); }
};

FaceSet faces(const Triangulation& t);

}  // namespace trirep
