#pragma once

#include "trirep/representation.hpp"
#include "trirep/triangulation.hpp"

namespace trirep {

/// Table-driven representations for the 3- and 4-vertex triangulations,
/// relabeled to the outer triple (and inner vertex) of t.
StandardRepresentation base_representation(const Triangulation& t);

struct RealizeOptions {
  /// Recompute sigma2 of the result and compare it to the input graph.
  bool verify = false;
};

/// Builds a standard representation whose sigma2 equals t.graph() exactly and
/// whose apexes are t.outer(). Iterative: contract a selected neighbor of the
/// first apex until 4 vertices remain, then replay the contractions as order
/// insertions.
StandardRepresentation realize(const Triangulation& t, RealizeOptions opt = {});

}  // namespace trirep
