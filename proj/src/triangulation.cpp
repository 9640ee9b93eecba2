#include "trirep/triangulation.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "trirep/error.hpp"

namespace trirep {

RotationSystem::RotationSystem(UniversePtr universe)
    : universe_(std::move(universe)) {
  if (!universe_) throw InvalidInput("rotation system needs a universe");
  cycles_.assign(universe_->size(), {});
  defined_.assign(universe_->size(), 0);
}

void RotationSystem::set(VertexId v, std::vector<VertexId> cycle) {
  if (!v.valid() || v.index >= universe_->size())
    throw InvalidInput("unknown vertex in rotation system");
  cycles_[v.index] = std::move(cycle);
  defined_[v.index] = 1;
}

bool RotationSystem::has(VertexId v) const {
  return v.valid() && v.index < universe_->size() && defined_[v.index];
}

std::span<const VertexId> RotationSystem::at(VertexId v) const {
  if (!has(v))
    throw InvalidInput("no rotation for vertex '" + universe_->label(v) + "'");
  return cycles_[v.index];
}

int RotationSystem::position(VertexId v, VertexId u) const {
  auto cyc = at(v);
  auto it = std::find(cyc.begin(), cyc.end(), u);
  if (it == cyc.end())
    throw InvalidInput("'" + universe_->label(u) + "' is not in the rotation of '" +
                       universe_->label(v) + "'");
  return static_cast<int>(it - cyc.begin());
}

VertexId RotationSystem::succ(VertexId v, VertexId u) const {
  auto cyc = at(v);
  return cyc[(position(v, u) + 1) % cyc.size()];
}

VertexId RotationSystem::pred(VertexId v, VertexId u) const {
  auto cyc = at(v);
  return cyc[(position(v, u) + cyc.size() - 1) % cyc.size()];
}

RotationSystem RotationSystem::reflected() const {
  RotationSystem out(universe_);
  for (std::int32_t i = 0; i < universe_->size(); ++i) {
    if (!defined_[i]) continue;
    std::vector<VertexId> rev(cycles_[i].rbegin(), cycles_[i].rend());
    out.set(VertexId{i}, std::move(rev));
  }
  return out;
}

bool RotationSystem::same_cycles(const RotationSystem& a,
                                 const RotationSystem& b,
                                 std::span<const VertexId> vertices) {
  // Vertices are ids in a's universe; b may intern the same labels elsewhere.
  auto labels_of = [](const RotationSystem& r, VertexId v) {
    std::vector<std::string> out;
    for (VertexId w : r.at(v)) out.push_back(r.universe()->label(w));
    return out;
  };
  for (VertexId va : vertices) {
    auto vb = b.universe()->find(a.universe()->label(va));
    if (!a.has(va) || !vb || !b.has(*vb)) return false;
    auto ca = labels_of(a, va);
    auto cb = labels_of(b, *vb);
    if (ca.size() != cb.size()) return false;
    if (ca.empty()) continue;
    auto it = std::find(cb.begin(), cb.end(), ca.front());
    if (it == cb.end()) return false;
    std::size_t off = static_cast<std::size_t>(it - cb.begin());
    for (std::size_t k = 0; k < ca.size(); ++k)
      if (ca[k] != cb[(off + k) % cb.size()]) return false;
  }
  return true;
}

std::vector<std::vector<VertexId>> trace_faces(const SimpleGraph& g,
                                               const RotationSystem& rot) {
  // Arc (u,v) continues with (v, pred(v, u)); with counterclockwise rotations
  // this walks the face on the left of u -> v.
  std::set<std::pair<std::int32_t, std::int32_t>> seen;
  std::vector<std::vector<VertexId>> out;
  for (VertexId v : g.vertices()) {
    for (VertexId u : rot.at(v)) {
      if (seen.count({v.index, u.index})) continue;
      std::vector<VertexId> face;
      VertexId s = v, t = u;
      const std::size_t limit = 2 * static_cast<std::size_t>(g.edge_count()) + 1;
      while (!seen.count({s.index, t.index})) {
        seen.insert({s.index, t.index});
        face.push_back(s);
        VertexId next = rot.pred(t, s);
        s = t;
        t = next;
        if (face.size() > limit)
          throw InvariantViolation("face walk does not close");
      }
      out.push_back(std::move(face));
    }
  }
  return out;
}

Triangulation::Triangulation(SimpleGraph g, RotationSystem r,
                             std::array<VertexId, 3> outer)
    : graph_(std::move(g)), rotation_(std::move(r)), outer_(outer) {}

TriangulationCheck Triangulation::validate(SimpleGraph graph,
                                           RotationSystem rotation,
                                           std::array<VertexId, 3> outer) {
  TriangulationCheck out;
  const Universe& u = *graph.universe();
  auto fail = [&](std::string why) {
    out.failure = std::move(why);
    return out;
  };

  for (VertexId a : outer)
    if (!graph.contains(a)) return fail("outer vertex missing from graph");
  if (outer[0] == outer[1] || outer[0] == outer[2] || outer[1] == outer[2])
    return fail("outer vertices are not distinct");
  const int n = graph.vertex_count();
  if (n < 3) return fail("need at least 3 vertices");

  if (graph.edge_count() != 3 * n - 6)
    return fail("edge count " + std::to_string(graph.edge_count()) +
                " differs from 3n-6 = " + std::to_string(3 * n - 6));

  for (VertexId v : graph.vertices()) {
    if (!rotation.has(v))
      return fail("no rotation for vertex '" + u.label(v) + "'");
    auto cyc = rotation.at(v);
    std::vector<VertexId> sorted(cyc.begin(), cyc.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      return fail("rotation of '" + u.label(v) + "' repeats a neighbor");
    auto nbrs = graph.neighbors(v);
    if (!std::equal(sorted.begin(), sorted.end(), nbrs.begin(), nbrs.end()))
      return fail("rotation of '" + u.label(v) + "' does not match its neighbors");
  }

  // Connectivity.
  {
    std::vector<char> reached(u.size(), 0);
    std::deque<VertexId> queue{graph.vertices().front()};
    reached[queue.front().index] = 1;
    int count = 0;
    while (!queue.empty()) {
      VertexId v = queue.front();
      queue.pop_front();
      ++count;
      for (VertexId w : graph.neighbors(v)) {
        if (!reached[w.index]) {
          reached[w.index] = 1;
          queue.push_back(w);
        }
      }
    }
    if (count != n) return fail("graph is not connected");
  }

  std::vector<std::vector<VertexId>> face_walks;
  try {
    face_walks = trace_faces(graph, rotation);
  } catch (const Error& e) {
    return fail(e.what());
  }
  for (const auto& f : face_walks) {
    if (f.size() != 3) {
      std::string walk;
      for (VertexId v : f) walk += (walk.empty() ? "" : " ") + u.label(v);
      return fail("face walk (" + walk + ") has length " +
                  std::to_string(f.size()));
    }
  }
  const int f = static_cast<int>(face_walks.size());
  if (n - graph.edge_count() + f != 2)
    return fail("Euler check failed: V-E+F = " +
                std::to_string(n - graph.edge_count() + f));

  // The outer triple must trace as the directed cycle a1 -> a2 -> a3.
  const VertexId a1 = outer[0], a2 = outer[1], a3 = outer[2];
  if (!graph.has_edge(a1, a2) || !graph.has_edge(a2, a3) ||
      !graph.has_edge(a3, a1))
    return fail("outer triple is not a triangle");
  if (rotation.pred(a2, a1) != a3 || rotation.pred(a3, a2) != a1 ||
      rotation.pred(a1, a3) != a2)
    return fail("outer triangle does not trace as a face in outer order");

  out.tri = Triangulation(std::move(graph), std::move(rotation), outer);
  return out;
}

Triangulation Triangulation::require(SimpleGraph graph, RotationSystem rotation,
                                     std::array<VertexId, 3> outer) {
  auto check = validate(std::move(graph), std::move(rotation), outer);
  if (!check.ok()) throw NotTriangulation(check.failure);
  return *std::move(check.tri);
}

namespace {

// Unique Hamilton cycle of the subgraph induced by nbrs, or nothing. Cycles
// are enumerated from the smallest vertex with the reflection killed by
// requiring the second element below the last, so "unique" means unique up to
// rotation and reflection. Stops as soon as a second cycle shows up.
std::optional<std::vector<VertexId>> unique_hamiltonian_cycle(
    const SimpleGraph& g, std::span<const VertexId> nbrs, std::string* why) {
  const int d = static_cast<int>(nbrs.size());
  if (d < 2) {
    *why = "degree below 2";
    return std::nullopt;
  }
  if (d == 2) {
    if (!g.has_edge(nbrs[0], nbrs[1])) {
      *why = "the two neighbors are not adjacent";
      return std::nullopt;
    }
    return std::vector<VertexId>{nbrs[0], nbrs[1]};
  }

  std::vector<std::vector<char>> adj(d, std::vector<char>(d, 0));
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j)
      adj[i][j] = adj[j][i] = g.has_edge(nbrs[i], nbrs[j]) ? 1 : 0;

  std::vector<int> path{0};
  std::vector<char> used(d, 0);
  used[0] = 1;
  int found = 0;
  std::vector<VertexId> cycle;

  auto extend = [&](auto&& self, int last) -> bool {  // true = stop early
    if (static_cast<int>(path.size()) == d) {
      if (adj[last][0] && path[1] < path[d - 1]) {
        if (++found > 1) return true;
        cycle.clear();
        for (int i : path) cycle.push_back(nbrs[i]);
      }
      return false;
    }
    for (int next = 1; next < d; ++next) {
      if (used[next] || !adj[last][next]) continue;
      used[next] = 1;
      path.push_back(next);
      bool stop = self(self, next);
      path.pop_back();
      used[next] = 0;
      if (stop) return true;
    }
    return false;
  };
  extend(extend, 0);

  if (found == 0) {
    *why = "no Hamilton cycle in the neighborhood";
    return std::nullopt;
  }
  if (found > 1) {
    *why = "multiple Hamilton cycles in the neighborhood";
    return std::nullopt;
  }
  return cycle;
}

}  // namespace

RotationSystem recover_rotation(const SimpleGraph& g,
                                std::array<VertexId, 3> outer) {
  const Universe& u = *g.universe();
  for (VertexId a : outer)
    if (!g.contains(a))
      throw NotTriangulation("outer vertex missing from graph");
  if (outer[0] == outer[1] || outer[0] == outer[2] || outer[1] == outer[2])
    throw NotTriangulation("outer vertices are not distinct");
  if (!g.has_edge(outer[0], outer[1]) || !g.has_edge(outer[1], outer[2]) ||
      !g.has_edge(outer[2], outer[0]))
    throw NotTriangulation("outer triple is not a triangle");

  RotationSystem rot(g.universe());
  for (VertexId v : g.vertices()) {
    std::string why;
    auto cycle = unique_hamiltonian_cycle(g, g.neighbors(v), &why);
    if (!cycle)
      throw NotTriangulation("not a triangulation at vertex '" + u.label(v) +
                             "': " + why);
    rot.set(v, *std::move(cycle));
  }

  // Each neighborhood cycle is only determined up to direction. Fix the first
  // outer vertex arbitrarily and propagate: across every edge (x,y) the face
  // on the left of x -> y must agree from both ends, i.e. succ_x(y) ==
  // pred_y(x).
  std::vector<char> oriented(u.size(), 0);
  std::deque<VertexId> queue{outer[0]};
  oriented[outer[0].index] = 1;
  int reached = 0;
  while (!queue.empty()) {
    VertexId x = queue.front();
    queue.pop_front();
    ++reached;
    for (VertexId y : g.neighbors(x)) {
      VertexId want = rot.succ(x, y);  // required pred of x around y
      if (!oriented[y.index]) {
        if (rot.pred(y, x) != want) {
          auto cyc = rot.at(y);
          std::vector<VertexId> rev(cyc.rbegin(), cyc.rend());
          rot.set(y, std::move(rev));
        }
        if (rot.pred(y, x) != want)
          throw NotTriangulation("neighborhood orientations conflict at '" +
                                 u.label(y) + "'");
        oriented[y.index] = 1;
        queue.push_back(y);
      } else if (rot.pred(y, x) != want) {
        throw NotTriangulation("neighborhood orientations conflict on edge (" +
                               u.label(x) + ", " + u.label(y) + ")");
      }
    }
  }
  if (reached != g.vertex_count())
    throw NotTriangulation("graph is not connected");

  auto outer_traces = [&](const RotationSystem& r) {
    return r.pred(outer[1], outer[0]) == outer[2] &&
           r.pred(outer[2], outer[1]) == outer[0] &&
           r.pred(outer[0], outer[2]) == outer[1];
  };
  if (!outer_traces(rot)) {
    rot = rot.reflected();
    if (!outer_traces(rot))
      throw NotTriangulation("outer triangle is not a face");
  }
  return rot;
}

RotationSystem rotation_from_faces(
    const SimpleGraph& g, std::array<VertexId, 3> outer,
    const std::vector<std::array<VertexId, 3>>& face_rows) {
  const Universe& u = *g.universe();
  std::vector<Triple> faces;
  faces.reserve(face_rows.size());
  for (const auto& row : face_rows)
    faces.push_back(Triple::of(row[0], row[1], row[2]));

  // Every edge must bound exactly two of the given faces.
  std::map<std::pair<std::int32_t, std::int32_t>, std::vector<int>> by_edge;
  auto edge_key = [](VertexId a, VertexId b) {
    return std::make_pair(std::min(a.index, b.index),
                          std::max(a.index, b.index));
  };
  for (int f = 0; f < static_cast<int>(faces.size()); ++f) {
    const auto& t = faces[f].v;
    for (int i = 0; i < 3; ++i)
      by_edge[edge_key(t[i], t[(i + 1) % 3])].push_back(f);
  }
  for (const auto& [key, fs] : by_edge) {
    if (fs.size() != 2)
      throw NotTriangulation(
          "edge (" + u.label(VertexId{key.first}) + ", " +
          u.label(VertexId{key.second}) + ") bounds " +
          std::to_string(fs.size()) + " faces instead of 2");
  }

  const Triple outer_triple = Triple::of(outer[0], outer[1], outer[2]);
  int outer_idx = -1;
  for (int f = 0; f < static_cast<int>(faces.size()); ++f)
    if (faces[f] == outer_triple) outer_idx = f;
  if (outer_idx < 0)
    throw NotTriangulation("outer triangle is not among the faces");

  // Orient the outer face in outer order and propagate: adjacent faces
  // traverse a shared edge in opposite directions.
  std::vector<std::array<VertexId, 3>> directed(faces.size());
  std::vector<char> done(faces.size(), 0);
  directed[outer_idx] = outer;
  done[outer_idx] = 1;
  std::deque<int> queue{outer_idx};
  int reached = 0;
  while (!queue.empty()) {
    int f = queue.front();
    queue.pop_front();
    ++reached;
    const auto& d = directed[f];
    for (int i = 0; i < 3; ++i) {
      VertexId a = d[i], b = d[(i + 1) % 3];
      for (int other : by_edge[edge_key(a, b)]) {
        if (other == f) continue;
        VertexId third{};
        for (VertexId x : faces[other].v)
          if (x != a && x != b) third = x;
        std::array<VertexId, 3> want{b, a, third};
        if (done[other]) {
          // Same cyclic order required.
          const auto& have = directed[other];
          bool same = false;
          for (int s = 0; s < 3; ++s)
            same = same || (have[s] == want[0] && have[(s + 1) % 3] == want[1] &&
                            have[(s + 2) % 3] == want[2]);
          if (!same)
            throw NotTriangulation("face orientations conflict on edge (" +
                                   u.label(a) + ", " + u.label(b) + ")");
        } else {
          directed[other] = want;
          done[other] = 1;
          queue.push_back(other);
        }
      }
    }
  }
  if (reached != static_cast<int>(faces.size()))
    throw NotTriangulation("face list is not edge-connected");

  // Directed face (x,y,z) pins pred_y(x) = z, i.e. succ_y(z) = x. Chain the
  // successor links into one cycle per vertex.
  std::vector<std::map<std::int32_t, VertexId>> succ_of(u.size());
  for (const auto& d : directed) {
    for (int i = 0; i < 3; ++i) {
      VertexId x = d[i], y = d[(i + 1) % 3], z = d[(i + 2) % 3];
      auto [it, fresh] = succ_of[y.index].emplace(z.index, x);
      if (!fresh && it->second != x)
        throw NotTriangulation("inconsistent face corners at '" + u.label(y) +
                               "'");
    }
  }
  RotationSystem rot(g.universe());
  for (VertexId v : g.vertices()) {
    auto nbrs = g.neighbors(v);
    if (nbrs.empty())
      throw NotTriangulation("isolated vertex '" + u.label(v) + "'");
    std::vector<VertexId> cycle;
    VertexId start = nbrs.front(), cur = start;
    do {
      cycle.push_back(cur);
      auto it = succ_of[v.index].find(cur.index);
      if (it == succ_of[v.index].end())
        throw NotTriangulation("faces do not close around '" + u.label(v) + "'");
      cur = it->second;
    } while (cur != start && cycle.size() <= nbrs.size());
    if (cur != start || cycle.size() != nbrs.size())
      throw NotTriangulation("faces do not close around '" + u.label(v) + "'");
    rot.set(v, std::move(cycle));
  }
  return rot;
}

std::vector<VertexId> neighbor_cycle(const Triangulation& t, VertexId v) {
  auto cyc = t.rotation().at(v);
  std::vector<VertexId> out(cyc.begin(), cyc.end());
  VertexId anchor;
  if (v == t.apex(0)) {
    anchor = t.apex(2);
  } else {
    anchor = *std::min_element(out.begin(), out.end());
  }
  auto it = std::find(out.begin(), out.end(), anchor);
  std::rotate(out.begin(), it, out.end());
  if (v == t.apex(0) && out.back() != t.apex(1))
    throw InvariantViolation("fan of apex 1 does not end at apex 2");
  return out;
}

VertexId select_contractible(const Triangulation& t) {
  if (t.size() < 5)
    throw InvalidInput("selection needs at least 5 vertices");
  const auto fan = neighbor_cycle(t, t.apex(0));
  const int len = static_cast<int>(fan.size());

  // Chords of the fan cycle, the closing edge between the two outer apexes
  // excluded. Chord length is the index gap along the fan; planarity keeps
  // chords non-crossing, so just inside the shortest chord there is no other.
  int best_p = -1, best_gap = 0;
  for (int p = 0; p < len; ++p) {
    for (int q = p + 2; q < len; ++q) {
      if (p == 0 && q == len - 1) continue;
      if (!t.graph().has_edge(fan[p], fan[q])) continue;
      int gap = q - p;
      if (best_p < 0 || gap < best_gap) {
        best_p = p;
        best_gap = gap;
      }
    }
  }
  VertexId w = (best_p < 0) ? fan[1] : fan[best_p + 1];

  // Selection is only correct if apex 1 and w share exactly their two fan
  // neighbors; assert it rather than trust the rule.
  const int i = static_cast<int>(
      std::find(fan.begin(), fan.end(), w) - fan.begin());
  std::vector<VertexId> common;
  for (VertexId z : t.graph().neighbors(w))
    if (z != t.apex(0) && t.graph().has_edge(t.apex(0), z)) common.push_back(z);
  std::vector<VertexId> expected{fan[i - 1], fan[i + 1]};
  std::sort(expected.begin(), expected.end());
  if (common != expected)
    throw NotTriangulation("no contractible neighbor of apex 1; input is not a triangulation");
  return w;
}

Triangulation contract(const Triangulation& t, VertexId w) {
  const Universe& u = *t.graph().universe();
  const VertexId a1 = t.apex(0);
  if (!t.graph().contains(w)) throw InvalidInput("vertex not in triangulation");
  if (w == t.apex(0) || w == t.apex(1) || w == t.apex(2))
    throw InvalidInput("cannot contract an outer vertex");
  if (t.size() < 4) throw InvalidInput("cannot contract below 3 vertices");
  if (!t.graph().has_edge(a1, w))
    throw InvalidInput("'" + u.label(w) + "' is not adjacent to apex 1");

  std::vector<VertexId> common;
  for (VertexId z : t.graph().neighbors(w))
    if (z != a1 && t.graph().has_edge(a1, z)) common.push_back(z);
  if (common.size() != 2)
    throw InvalidInput("contracting (" + u.label(a1) + ", " + u.label(w) +
                       ") would create parallel edges");

  const RotationSystem& rot = t.rotation();
  // Around w the fan reads (a1, z0, ..., zlast) counterclockwise, and z0 is
  // also the fan predecessor of w around a1.
  VertexId z0 = rot.succ(w, a1);
  VertexId zlast = rot.pred(w, a1);
  if (!((z0 == common[0] && zlast == common[1]) ||
        (z0 == common[1] && zlast == common[0])) ||
      rot.pred(a1, w) != z0 || rot.succ(a1, w) != zlast)
    throw InvalidInput("rotation system inconsistent at the contraction");

  std::vector<VertexId> interior;
  {
    VertexId cur = rot.succ(w, z0);
    while (cur != zlast) {
      if (cur == a1)
        throw InvalidInput("rotation system inconsistent at the contraction");
      interior.push_back(cur);
      cur = rot.succ(w, cur);
    }
  }

  RotationSystem new_rot(t.graph().universe());
  for (VertexId v : t.graph().vertices()) {
    if (v == w) continue;
    auto cyc = rot.at(v);
    std::vector<VertexId> c(cyc.begin(), cyc.end());
    if (v == a1) {
      std::vector<VertexId> spliced;
      for (VertexId x : c) {
        if (x == w)
          spliced.insert(spliced.end(), interior.begin(), interior.end());
        else
          spliced.push_back(x);
      }
      c = std::move(spliced);
    } else if (v == z0 || v == zlast) {
      c.erase(std::find(c.begin(), c.end(), w));
    } else {
      auto it = std::find(c.begin(), c.end(), w);
      if (it != c.end()) *it = a1;
    }
    new_rot.set(v, std::move(c));
  }

  std::vector<VertexId> verts;
  for (VertexId v : t.graph().vertices())
    if (v != w) verts.push_back(v);
  SimpleGraph g(t.graph().universe(), std::move(verts));
  for (VertexId v : t.graph().vertices()) {
    if (v == w) continue;
    for (VertexId x : t.graph().neighbors(v))
      if (x != w && v < x) g.add_edge(v, x);
  }
  for (VertexId z : interior) {
    if (g.has_edge(a1, z))
      throw InvalidInput("contracting (" + u.label(a1) + ", " + u.label(w) +
                         ") would create parallel edges");
    g.add_edge(a1, z);
  }

  auto check = Triangulation::validate(std::move(g), std::move(new_rot),
                                       t.outer());
  if (!check.ok())
    throw InvariantViolation("contraction left an invalid triangulation: " +
                             check.failure);
  return *std::move(check.tri);
}

}  // namespace trirep
