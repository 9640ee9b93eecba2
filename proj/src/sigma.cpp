#include "trirep/sigma.hpp"

#include <algorithm>
#include <cstdint>

#include "trirep/error.hpp"

namespace trirep {

bool sigma2_has_edge(const StandardRepresentation& rep, VertexId x,
                     VertexId y) {
  if (x == y) return false;
  const LinearOrder& o1 = rep.order(0);
  const LinearOrder& o2 = rep.order(1);
  const LinearOrder& o3 = rep.order(2);
  const int x1 = o1.rank(x), y1 = o1.rank(y);
  const int x2 = o2.rank(x), y2 = o2.rank(y);
  const int x3 = o3.rank(x), y3 = o3.rank(y);
  const int m1 = std::max(x1, y1), m2 = std::max(x2, y2), m3 = std::max(x3, y3);
  for (VertexId z : rep.vertices()) {
    if (z == x || z == y) continue;
    if (o1.rank(z) > m1 || o2.rank(z) > m2 || o3.rank(z) > m3) continue;
    return false;
  }
  return true;
}

SimpleGraph sigma2(const StandardRepresentation& rep) {
  auto verts = rep.vertices();
  SimpleGraph g(rep.universe(), {verts.begin(), verts.end()});
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = i + 1; j < verts.size(); ++j)
      if (sigma2_has_edge(rep, verts[i], verts[j]))
        g.add_edge(verts[i], verts[j]);
  return g;
}

bool sigma3_triple_holds(const StandardRepresentation& rep, VertexId x,
                         VertexId y, VertexId w) {
  if (x == y || x == w || y == w)
    throw InvalidInput("triple vertices must be distinct");
  for (int i = 0; i < 3; ++i) {
    const LinearOrder& o = rep.order(i);
    o.rank(x);  // membership checks
    o.rank(y);
    o.rank(w);
  }
  // z ranges over the whole set, the triple included, and the comparison is
  // non-strict.
  for (VertexId z : rep.vertices()) {
    bool covered = false;
    for (int i = 0; i < 3 && !covered; ++i) {
      const LinearOrder& o = rep.order(i);
      const int rz = o.rank(z);
      covered = rz >= o.rank(x) && rz >= o.rank(y) && rz >= o.rank(w);
    }
    if (!covered) return false;
  }
  return true;
}

namespace {

// Word-packed vertex sets over compact indices 0..n-1.
class VertexBits {
 public:
  explicit VertexBits(int n) : n_(n), words_((n + 63) / 64, 0) {}

  void set(int i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void or_with(const VertexBits& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
  }
  // True when every index outside {a,b,c} is set.
  bool covers_all_but(int a, int b, int c) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      std::uint64_t missing = ~words_[k];
      if ((k + 1) * 64 > static_cast<std::size_t>(n_))
        missing &= (std::uint64_t{1} << (n_ & 63)) - 1;
      for (int i : {a, b, c})
        if (static_cast<std::size_t>(i >> 6) == k)
          missing &= ~(std::uint64_t{1} << (i & 63));
      if (missing) return false;
    }
    return true;
  }

 private:
  int n_;
  std::vector<std::uint64_t> words_;
};

}  // namespace

TripleSet sigma3(const StandardRepresentation& rep) {
  const auto verts = rep.vertices();
  const int n = static_cast<int>(verts.size());

  // rank[i][c] is the rank of the vertex with compact index c in order i,
  // and above[i][r] is the set of compact indices with rank > r in order i.
  // A triple qualifies iff each member tops the triple in some order and the
  // union of the three strict-suffix sets above the triple maxima covers all
  // other vertices; this is the membership predicate written with thresholds.
  std::array<std::vector<int>, 3> rank;
  std::array<std::vector<VertexBits>, 3> above;
  for (int i = 0; i < 3; ++i) {
    rank[i].resize(n);
    for (int c = 0; c < n; ++c) rank[i][c] = rep.order(i).rank(verts[c]);
    above[i].assign(n, VertexBits(n));
    std::vector<int> by_rank(n);
    for (int c = 0; c < n; ++c) by_rank[rank[i][c]] = c;
    for (int r = n - 2; r >= 0; --r) {
      above[i][r] = above[i][r + 1];
      above[i][r].set(by_rank[r + 1]);
    }
  }

  const Triple apex_triple =
      Triple::of(rep.apex(0), rep.apex(1), rep.apex(2));
  TripleSet out;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      for (int c = b + 1; c < n; ++c) {
        std::array<int, 3> m;
        for (int i = 0; i < 3; ++i)
          m[i] = std::max({rank[i][a], rank[i][b], rank[i][c]});
        bool members_ok = true;
        for (int t : {a, b, c}) {
          bool tops = false;
          for (int i = 0; i < 3 && !tops; ++i) tops = rank[i][t] == m[i];
          if (!tops) { members_ok = false; break; }
        }
        if (!members_ok) continue;
        VertexBits u = above[0][m[0]];
        u.or_with(above[1][m[1]]);
        u.or_with(above[2][m[2]]);
        if (!u.covers_all_but(a, b, c)) continue;
        Triple t = Triple::of(verts[a], verts[b], verts[c]);
        if (t == apex_triple) continue;  // the outer face is never listed
        out.insert(t);
      }
    }
  }
  return out;
}

const char* FanReport::check_name(int i) {
  static const char* names[6] = {
      "fan descends in order 3",
      "fan endpoints are apexes 3 and 2",
      "fan gap sets are empty",
      "consecutive fan vertices are adjacent",
      "second max is in the fan with exactly two common neighbors",
      "other neighbors of second max lie between its fan neighbors",
  };
  return names[i];
}

bool FanReport::all_hold() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const FanCheck& c) { return c.holds; });
}

FanReport fan_of_apex(const StandardRepresentation& rep, const SimpleGraph& g) {
  if (!(g == sigma2(rep)))
    throw InvalidInput("graph argument does not match sigma2 of the representation");

  const Universe& u = *rep.universe();
  const LinearOrder& o1 = rep.order(0);
  const LinearOrder& o2 = rep.order(1);
  const LinearOrder& o3 = rep.order(2);
  const VertexId a1 = rep.apex(0), a2 = rep.apex(1), a3 = rep.apex(2);
  const int n = rep.size();

  FanReport report;
  auto nbrs = g.neighbors(a1);
  report.fan.assign(nbrs.begin(), nbrs.end());
  std::sort(report.fan.begin(), report.fan.end(),
            [&](VertexId x, VertexId y) { return o2.less(x, y); });
  report.second_max = o1.second_max();
  const auto& fan = report.fan;
  const int fs = static_cast<int>(fan.size());

  // 1: descending in order 3.
  for (int k = 0; k + 1 < fs; ++k) {
    if (!o3.less(fan[k + 1], fan[k])) {
      report.checks[0].holds = false;
      report.checks[0].detail = "fan vertices " + u.label(fan[k]) + ", " +
                                u.label(fan[k + 1]) + " do not descend in order 3";
      break;
    }
  }

  // 2: the fan runs from apex 3 to apex 2.
  if (fs < 2 || fan.front() != a3 || fan.back() != a2) {
    report.checks[1].holds = false;
    report.checks[1].detail = "fan does not run from " + u.label(a3) + " to " +
                              u.label(a2);
  }

  // 3: no vertex sits between consecutive fan vertices in order 2 and between
  // them reversed in order 3.
  for (int k = 0; k + 1 < fs && report.checks[2].holds; ++k) {
    for (VertexId z : rep.vertices()) {
      if (z == fan[k] || z == fan[k + 1]) continue;
      if (o2.less(fan[k], z) && o2.less(z, fan[k + 1]) &&
          o3.less(fan[k + 1], z) && o3.less(z, fan[k])) {
        report.checks[2].holds = false;
        report.checks[2].detail = "vertex " + u.label(z) +
                                  " lies in the gap after fan position " +
                                  std::to_string(k);
        break;
      }
    }
  }

  // 4: consecutive fan vertices are adjacent.
  for (int k = 0; k + 1 < fs; ++k) {
    if (!g.has_edge(fan[k], fan[k + 1])) {
      report.checks[3].holds = false;
      report.checks[3].detail = "fan vertices " + u.label(fan[k]) + ", " +
                                u.label(fan[k + 1]) + " are not adjacent";
      break;
    }
  }

  // 5: the second maximum of order 1 appears in the fan; with at least four
  // vertices its only common neighbors with apex 1 are its fan neighbors.
  const VertexId b = report.second_max;
  const auto fan_pos = std::find(fan.begin(), fan.end(), b);
  if (fan_pos == fan.end()) {
    report.checks[4].holds = false;
    report.checks[4].detail = "second max " + u.label(b) + " is not a fan vertex";
  } else if (n >= 4) {
    const int i = static_cast<int>(fan_pos - fan.begin());
    std::vector<VertexId> common;
    for (VertexId z : g.neighbors(b))
      if (z != a1 && g.has_edge(a1, z)) common.push_back(z);
    std::vector<VertexId> expected;
    if (i > 0 && i + 1 < fs) expected = {fan[i - 1], fan[i + 1]};
    std::sort(expected.begin(), expected.end());
    if (common != expected) {
      report.checks[4].holds = false;
      report.checks[4].detail =
          "second max " + u.label(b) + " has " +
          std::to_string(common.size()) + " common neighbors with apex 1";
    }
  } else {
    report.checks[4].applicable = false;
  }

  // 6: with at least four vertices, every neighbor of the second max other
  // than apex 1 and its two fan neighbors sits strictly between it and its
  // fan neighbors in orders 2 and 3.
  if (n >= 4 && fan_pos != fan.end()) {
    const int i = static_cast<int>(fan_pos - fan.begin());
    if (i > 0 && i + 1 < fs) {
      const VertexId prev = fan[i - 1], next = fan[i + 1];
      for (VertexId z : g.neighbors(b)) {
        if (z == a1 || z == prev || z == next) continue;
        if (!(o2.less(b, z) && o2.less(z, next) && o3.less(b, z) &&
              o3.less(z, prev))) {
          report.checks[5].holds = false;
          report.checks[5].detail =
              "neighbor " + u.label(z) + " of " + u.label(b) +
              " is not confined between its fan neighbors";
          break;
        }
      }
    }
  } else if (n < 4) {
    report.checks[5].applicable = false;
  }

  return report;
}

SimpleGraph contract_vertex(const SimpleGraph& g, VertexId keep,
                            VertexId remove) {
  if (!g.has_edge(keep, remove))
    throw InvalidInput("cannot contract non-edge (" +
                       g.universe()->label(keep) + ", " +
                       g.universe()->label(remove) + ")");
  std::vector<VertexId> verts;
  for (VertexId v : g.vertices())
    if (v != remove) verts.push_back(v);
  SimpleGraph out(g.universe(), std::move(verts));
  for (VertexId v : g.vertices()) {
    if (v == remove) continue;
    for (VertexId w : g.neighbors(v))
      if (w != remove && v < w) out.add_edge(v, w);
  }
  for (VertexId w : g.neighbors(remove))
    if (w != keep) out.add_edge(keep, w);
  return out;
}

}  // namespace trirep
