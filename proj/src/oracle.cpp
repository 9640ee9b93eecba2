#include "trirep/oracle.hpp"

#include <algorithm>
#include <string>

#include "trirep/error.hpp"
#include "trirep/sigma.hpp"

namespace trirep {

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::bounded(std::uint64_t bound) {
  if (bound == 0) throw InvalidInput("bounded draw needs a positive bound");
  const std::uint64_t limit = ~std::uint64_t{0} - ~std::uint64_t{0} % bound;
  std::uint64_t x = next();
  while (x >= limit) x = next();
  return x % bound;
}

namespace {

// All sequences that can be an order with the given apex on top: the bottom
// two elements are the other two apexes in either arrangement, the middle is
// any permutation of the rest. Generated in lexicographic sequence order.
std::vector<std::vector<VertexId>> standard_order_candidates(
    std::span<const VertexId> vertices, VertexId apex, VertexId other_a,
    VertexId other_b) {
  std::vector<VertexId> middle;
  for (VertexId v : vertices)
    if (v != apex && v != other_a && v != other_b) middle.push_back(v);
  std::sort(middle.begin(), middle.end());

  const VertexId lo = std::min(other_a, other_b);
  const VertexId hi = std::max(other_a, other_b);
  std::vector<std::vector<VertexId>> out;
  for (auto bottom : {std::array<VertexId, 2>{lo, hi},
                      std::array<VertexId, 2>{hi, lo}}) {
    std::vector<VertexId> mid = middle;
    do {
      std::vector<VertexId> seq{bottom[0], bottom[1]};
      seq.insert(seq.end(), mid.begin(), mid.end());
      seq.push_back(apex);
      out.push_back(std::move(seq));
    } while (std::next_permutation(mid.begin(), mid.end()));
  }
  return out;
}

bool edge_by_definition(const std::array<LinearOrder, 3>& o,
                        std::span<const VertexId> verts, VertexId x,
                        VertexId y) {
  for (VertexId z : verts) {
    if (z == x || z == y) continue;
    bool covered = false;
    for (int i = 0; i < 3 && !covered; ++i) {
      const int rz = o[i].rank(z);
      covered = rz > o[i].rank(x) && rz > o[i].rank(y);
    }
    if (!covered) return false;
  }
  return true;
}

}  // namespace

std::optional<StandardRepresentation> search_representation(
    const SimpleGraph& g, std::array<VertexId, 3> outer, int cap) {
  const int n = g.vertex_count();
  if (n > cap)
    throw CapExceeded("search cap " + std::to_string(cap) +
                      " exceeded by " + std::to_string(n) + " vertices");
  if (n < 3) return std::nullopt;
  for (VertexId a : outer)
    if (!g.contains(a)) throw InvalidInput("outer vertex missing from graph");
  if (outer[0] == outer[1] || outer[0] == outer[2] || outer[1] == outer[2])
    throw InvalidInput("outer vertices are not distinct");

  auto verts = g.vertices();
  const auto c1 =
      standard_order_candidates(verts, outer[0], outer[1], outer[2]);
  const auto c2 =
      standard_order_candidates(verts, outer[1], outer[0], outer[2]);
  const auto c3 =
      standard_order_candidates(verts, outer[2], outer[0], outer[1]);

  for (const auto& s1 : c1) {
    LinearOrder o1 = LinearOrder::over(g.universe(), s1);
    for (const auto& s2 : c2) {
      LinearOrder o2 = LinearOrder::over(g.universe(), s2);
      for (const auto& s3 : c3) {
        std::array<LinearOrder, 3> orders{
            o1, o2, LinearOrder::over(g.universe(), s3)};

        // Dominated pair first: cheap and prunes most triples.
        bool represents = true;
        for (std::size_t i = 0; i < verts.size() && represents; ++i) {
          for (std::size_t j = 0; j < verts.size(); ++j) {
            if (i == j) continue;
            VertexId x = verts[i], y = verts[j];
            if (orders[0].less(x, y) && orders[1].less(x, y) &&
                orders[2].less(x, y)) {
              represents = false;
              break;
            }
          }
        }
        if (!represents) continue;

        bool matches = true;
        for (std::size_t i = 0; i < verts.size() && matches; ++i)
          for (std::size_t j = i + 1; j < verts.size() && matches; ++j)
            matches = edge_by_definition(orders, verts, verts[i], verts[j]) ==
                      g.has_edge(verts[i], verts[j]);
        if (!matches) continue;

        auto check = StandardRepresentation::validate(std::move(orders));
        if (!check.ok())
          throw InvariantViolation("search produced an invalid candidate: " +
                                   check.issue->message(*g.universe()));
        return *std::move(check.rep);
      }
    }
  }
  return std::nullopt;
}

Triangulation random_stacked_triangulation(int n, std::uint64_t seed) {
  if (n < 4) throw InvalidInput("stacked triangulation needs at least 4 vertices");

  std::vector<std::string> labels;
  labels.reserve(n);
  for (int i = 0; i < n; ++i) labels.push_back("v" + std::to_string(i));
  auto uni = Universe::make(std::move(labels));
  auto id = [&](int i) { return VertexId{i}; };

  // Start from the 4-vertex triangulation with outer (v0, v1, v2) and v3
  // inside; faces are kept as directed counterclockwise triples.
  std::vector<std::vector<VertexId>> rot(n);
  rot[0] = {id(2), id(3), id(1)};
  rot[1] = {id(0), id(3), id(2)};
  rot[2] = {id(1), id(3), id(0)};
  rot[3] = {id(0), id(2), id(1)};
  std::vector<std::array<VertexId, 3>> faces{
      {id(1), id(0), id(3)}, {id(0), id(2), id(3)}, {id(2), id(1), id(3)}};

  auto insert_after = [](std::vector<VertexId>& cycle, VertexId after,
                         VertexId v) {
    auto it = std::find(cycle.begin(), cycle.end(), after);
    cycle.insert(std::next(it), v);
  };

  SplitMix64 rng(seed);
  for (int k = 4; k < n; ++k) {
    const std::size_t pick = rng.bounded(faces.size());
    const auto [x, y, z] = faces[pick];
    const VertexId v = id(k);
    rot[v.index] = {x, y, z};
    insert_after(rot[x.index], y, v);
    insert_after(rot[y.index], z, v);
    insert_after(rot[z.index], x, v);
    faces[pick] = {x, y, v};
    faces.push_back({y, z, v});
    faces.push_back({z, x, v});
  }

  std::vector<VertexId> verts;
  for (int i = 0; i < n; ++i) verts.push_back(id(i));
  SimpleGraph g(uni, verts);
  RotationSystem rs(uni);
  for (int i = 0; i < n; ++i) {
    for (VertexId w : rot[i])
      if (id(i) < w) g.add_edge(id(i), w);
    rs.set(id(i), rot[i]);
  }
  return Triangulation::require(std::move(g), std::move(rs),
                                {id(0), id(1), id(2)});
}

}  // namespace trirep
