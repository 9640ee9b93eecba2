#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "trirep/graph.hpp"
#include "trirep/representation.hpp"
#include "trirep/triangulation.hpp"

namespace trirep {

// Orders file: exactly three non-comment lines, each a whitespace-separated
// vertex sequence from smallest to largest. '#' starts a comment.
struct ParsedOrders {
  UniversePtr universe;
  std::array<LinearOrder, 3> orders;
};

ParsedOrders parse_orders_text(std::istream& in);
ParsedOrders parse_orders_json(std::istream& in);
void write_orders_text(std::ostream& out, const StandardRepresentation& rep);
std::string orders_json(const StandardRepresentation& rep);

// Graph file: one "outer a b c" line plus "u v" edge lines. Optional
// "rotation v: n1 n2 ..." lines, or a "faces" line followed by one face
// triple per line, bypass embedding recovery.
struct ParsedGraph {
  UniversePtr universe;
  SimpleGraph graph;
  std::array<VertexId, 3> outer;
  std::optional<RotationSystem> rotation;
  std::vector<std::array<VertexId, 3>> face_rows;
};

ParsedGraph parse_graph_text(std::istream& in);
ParsedGraph parse_graph_json(std::istream& in);

/// Assembles a validated triangulation from a parsed graph: explicit rotation
/// first, face rows second, neighborhood recovery last. Rotation input written
/// with the mirrored orientation is accepted by reflecting it.
Triangulation build_triangulation(const ParsedGraph& parsed);

void write_graph_text(std::ostream& out, const SimpleGraph& g,
                      std::array<VertexId, 3> outer);
/// Graph text plus rotation lines and a faces block.
void write_triangulation_text(std::ostream& out, const Triangulation& t);
std::string graph_json(const SimpleGraph& g, std::array<VertexId, 3> outer,
                       const RotationSystem* rotation = nullptr,
                       const std::vector<std::vector<VertexId>>* faces = nullptr);
std::string graph_dot(const SimpleGraph& g, std::array<VertexId, 3> outer);

}  // namespace trirep
