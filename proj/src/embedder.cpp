#include "trirep/embedder.hpp"

#include <algorithm>

#include "trirep/error.hpp"
#include "trirep/sigma.hpp"

namespace trirep {

namespace {

struct PeelStep {
  VertexId b;                     // second maximum of order 1 at this level
  VertexId z0, zlast;             // its two common neighbors with apex 1
  std::vector<VertexId> interior; // its remaining neighbors, unordered
};

// The 3- and 4-vertex embeddings, written against the convention that the
// outer face traces apex1 -> apex2 -> apex3.
Triangulation base_embedding(const StandardRepresentation& rep) {
  const VertexId a1 = rep.apex(0), a2 = rep.apex(1), a3 = rep.apex(2);
  auto verts = rep.vertices();
  SimpleGraph g(rep.universe(), {verts.begin(), verts.end()});
  RotationSystem rot(rep.universe());
  if (rep.size() == 3) {
    g.add_edge(a1, a2);
    g.add_edge(a2, a3);
    g.add_edge(a3, a1);
    rot.set(a1, {a2, a3});
    rot.set(a2, {a1, a3});
    rot.set(a3, {a1, a2});
  } else {
    VertexId inner;
    for (VertexId v : verts)
      if (!rep.is_apex(v)) inner = v;
    for (std::size_t i = 0; i < verts.size(); ++i)
      for (std::size_t j = i + 1; j < verts.size(); ++j)
        g.add_edge(verts[i], verts[j]);
    rot.set(a1, {a3, inner, a2});
    rot.set(a2, {a1, inner, a3});
    rot.set(a3, {a2, inner, a1});
    rot.set(inner, {a1, a3, a2});
  }
  return Triangulation::require(std::move(g), std::move(rot),
                                {a1, a2, a3});
}

}  // namespace

Triangulation embed(const StandardRepresentation& rep) {
  const Universe& u = *rep.universe();

  // Peel the second maximum of order 1 until the base, recording for each
  // level the neighborhood it has to be stitched back into.
  std::vector<PeelStep> steps;
  StandardRepresentation cur = rep;
  while (cur.size() > 4) {
    PeelStep step;
    step.b = cur.order(0).second_max();
    const VertexId a1 = cur.apex(0);
    std::vector<VertexId> nbrs;
    for (VertexId x : cur.vertices())
      if (x != step.b && sigma2_has_edge(cur, step.b, x)) nbrs.push_back(x);
    std::vector<VertexId> common;
    for (VertexId z : nbrs)
      if (z != a1 && sigma2_has_edge(cur, a1, z)) common.push_back(z);
    if (std::find(nbrs.begin(), nbrs.end(), a1) == nbrs.end() ||
        common.size() != 2)
      throw InvariantViolation(
          "second maximum '" + u.label(step.b) +
          "' does not have exactly two common neighbors with apex 1");
    // The fan runs ascending in order 2, so the smaller common neighbor is
    // the splice start.
    step.z0 = cur.order(1).less(common[0], common[1]) ? common[0] : common[1];
    step.zlast = (step.z0 == common[0]) ? common[1] : common[0];
    for (VertexId z : nbrs)
      if (z != a1 && z != step.z0 && z != step.zlast)
        step.interior.push_back(z);
    const VertexId b = step.b;
    steps.push_back(std::move(step));
    cur = cur.suppressed(b);
  }

  Triangulation t = base_embedding(cur);

  for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
    const PeelStep& step = *it;
    const VertexId a1 = t.apex(0);
    SimpleGraph g = t.graph();
    const RotationSystem& rot = t.rotation();
    RotationSystem new_rot(g.universe());
    for (VertexId v : g.vertices()) {
      auto cyc = rot.at(v);
      new_rot.set(v, {cyc.begin(), cyc.end()});
    }

    // The fan segment of apex 1 strictly between z0 and zlast must consist of
    // exactly the interior neighbors of b; it gets replaced by b itself.
    std::vector<VertexId> segment;
    {
      VertexId curv = rot.succ(a1, step.z0);
      std::size_t guard = rot.at(a1).size() + 1;
      while (curv != step.zlast) {
        segment.push_back(curv);
        curv = rot.succ(a1, curv);
        if (segment.size() > guard)
          throw InvariantViolation("fan segment does not close");
      }
    }
    {
      auto sorted_seg = segment;
      auto sorted_int = step.interior;
      std::sort(sorted_seg.begin(), sorted_seg.end());
      std::sort(sorted_int.begin(), sorted_int.end());
      if (sorted_seg != sorted_int)
        throw InvariantViolation(
            "fan segment between the common neighbors of '" +
            u.label(step.b) + "' does not match its neighborhood");
    }

    {
      auto cyc = rot.at(a1);
      std::vector<VertexId> spliced;
      bool in_segment = false;
      for (VertexId x : cyc) {
        if (x == step.z0) {
          spliced.push_back(x);
          spliced.push_back(step.b);
          in_segment = true;
        } else if (x == step.zlast) {
          spliced.push_back(x);
          in_segment = false;
        } else if (!in_segment) {
          spliced.push_back(x);
        }
      }
      // The segment may wrap past the stored anchor; rebuild from scratch in
      // that case by walking the cycle explicitly.
      if (spliced.size() != cyc.size() - segment.size() + 1) {
        spliced.clear();
        VertexId curv = step.zlast;
        do {
          spliced.push_back(curv);
          curv = rot.succ(a1, curv);
        } while (curv != step.z0);
        spliced.push_back(step.z0);
        spliced.push_back(step.b);
      }
      new_rot.set(a1, std::move(spliced));
    }

    std::vector<VertexId> b_cycle{a1, step.z0};
    b_cycle.insert(b_cycle.end(), segment.begin(), segment.end());
    b_cycle.push_back(step.zlast);
    new_rot.set(step.b, std::move(b_cycle));

    for (VertexId z : segment) {
      auto cyc = rot.at(z);
      std::vector<VertexId> c(cyc.begin(), cyc.end());
      *std::find(c.begin(), c.end(), a1) = step.b;
      new_rot.set(z, std::move(c));
    }
    {
      auto cyc = rot.at(step.z0);
      std::vector<VertexId> c(cyc.begin(), cyc.end());
      c.insert(std::find(c.begin(), c.end(), a1), step.b);
      new_rot.set(step.z0, std::move(c));
    }
    {
      auto cyc = rot.at(step.zlast);
      std::vector<VertexId> c(cyc.begin(), cyc.end());
      c.insert(std::next(std::find(c.begin(), c.end(), a1)), step.b);
      new_rot.set(step.zlast, std::move(c));
    }

    g.add_vertex(step.b);
    for (VertexId z : segment) g.remove_edge(a1, z);
    g.add_edge(step.b, a1);
    g.add_edge(step.b, step.z0);
    g.add_edge(step.b, step.zlast);
    for (VertexId z : segment) g.add_edge(step.b, z);

    auto check =
        Triangulation::validate(std::move(g), std::move(new_rot), t.outer());
    if (!check.ok())
      throw InvariantViolation("embedding step left an invalid triangulation: " +
                               check.failure);
    t = *std::move(check.tri);
  }
  return t;
}

FaceSet faces(const Triangulation& t) {
  FaceSet out;
  auto walks = trace_faces(t.graph(), t.rotation());
  out.count = static_cast<int>(walks.size());
  for (const auto& w : walks) {
    if (w.size() != 3)
      throw InvariantViolation("non-triangular face in a triangulation");
    out.all.insert(Triple::of(w[0], w[1], w[2]));
  }
  out.outer = Triple::of(t.apex(0), t.apex(1), t.apex(2));
  return out;
}

}  // namespace trirep
