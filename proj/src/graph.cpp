#include "trirep/graph.hpp"

#include <algorithm>

#include "trirep/error.hpp"

namespace trirep {

SimpleGraph::SimpleGraph(UniversePtr universe, std::vector<VertexId> vertices)
    : universe_(std::move(universe)), vertices_(std::move(vertices)) {
  if (!universe_) throw InvalidInput("graph needs a universe");
  std::sort(vertices_.begin(), vertices_.end());
  active_.assign(universe_->size(), 0);
  adj_.assign(universe_->size(), {});
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    VertexId v = vertices_[i];
    if (!v.valid() || v.index >= universe_->size())
      throw InvalidInput("unknown vertex in graph");
    if (i > 0 && vertices_[i - 1] == v)
      throw InvalidInput("duplicate vertex in graph");
    active_[v.index] = 1;
  }
}

void SimpleGraph::check_vertex(VertexId v) const {
  if (!contains(v))
    throw InvalidInput("vertex not in graph" +
                       (v.valid() && v.index < universe_->size()
                            ? ": '" + universe_->label(v) + "'"
                            : std::string()));
}

bool SimpleGraph::contains(VertexId v) const {
  return v.valid() && v.index < universe_->size() && active_[v.index];
}

void SimpleGraph::add_vertex(VertexId v) {
  if (!v.valid() || v.index >= universe_->size())
    throw InvalidInput("unknown vertex");
  if (active_[v.index]) return;
  active_[v.index] = 1;
  vertices_.insert(std::lower_bound(vertices_.begin(), vertices_.end(), v), v);
}

void SimpleGraph::remove_vertex(VertexId v) {
  check_vertex(v);
  for (VertexId u : adj_[v.index]) {
    auto& a = adj_[u.index];
    a.erase(std::lower_bound(a.begin(), a.end(), v));
    --edge_count_;
  }
  adj_[v.index].clear();
  active_[v.index] = 0;
  vertices_.erase(std::lower_bound(vertices_.begin(), vertices_.end(), v));
}

void SimpleGraph::add_edge(VertexId u, VertexId v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw InvalidInput("loop edge at '" + universe_->label(u) + "'");
  if (has_edge(u, v)) return;
  auto& au = adj_[u.index];
  au.insert(std::lower_bound(au.begin(), au.end(), v), v);
  auto& av = adj_[v.index];
  av.insert(std::lower_bound(av.begin(), av.end(), u), u);
  ++edge_count_;
}

void SimpleGraph::remove_edge(VertexId u, VertexId v) {
  check_vertex(u);
  check_vertex(v);
  if (!has_edge(u, v))
    throw InvalidInput("no edge (" + universe_->label(u) + ", " +
                       universe_->label(v) + ")");
  auto& au = adj_[u.index];
  au.erase(std::lower_bound(au.begin(), au.end(), v));
  auto& av = adj_[v.index];
  av.erase(std::lower_bound(av.begin(), av.end(), u));
  --edge_count_;
}

bool SimpleGraph::has_edge(VertexId u, VertexId v) const {
  check_vertex(u);
  check_vertex(v);
  const auto& a = adj_[u.index];
  return std::binary_search(a.begin(), a.end(), v);
}

std::span<const VertexId> SimpleGraph::neighbors(VertexId v) const {
  check_vertex(v);
  return adj_[v.index];
}

int SimpleGraph::degree(VertexId v) const {
  check_vertex(v);
  return static_cast<int>(adj_[v.index].size());
}

bool operator==(const SimpleGraph& a, const SimpleGraph& b) {
  if (same_labels(a.universe_, b.universe_)) {
    if (a.vertices_ != b.vertices_) return false;
    for (VertexId v : a.vertices_)
      if (a.adj_[v.index] != b.adj_[v.index]) return false;
    return true;
  }
  // Distinct universes: compare through labels.
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count())
    return false;
  for (VertexId va : a.vertices_) {
    auto vb = b.universe_->find(a.universe_->label(va));
    if (!vb || !b.contains(*vb)) return false;
    if (a.degree(va) != b.degree(*vb)) return false;
    for (VertexId wa : a.adj_[va.index]) {
      auto wb = b.universe_->find(a.universe_->label(wa));
      if (!wb || !b.contains(*wb) || !b.has_edge(*vb, *wb)) return false;
    }
  }
  return true;
}

Triple Triple::of(VertexId a, VertexId b, VertexId c) {
  if (a == b || a == c || b == c)
    throw InvalidInput("triple vertices must be distinct");
  Triple t{{a, b, c}};
  std::sort(t.v.begin(), t.v.end());
  return t;
}

void TripleSet::insert(Triple t) {
  auto it = std::lower_bound(items_.begin(), items_.end(), t);
  if (it == items_.end() || *it != t) items_.insert(it, t);
}

bool TripleSet::contains(const Triple& t) const {
  return std::binary_search(items_.begin(), items_.end(), t);
}

TripleSet TripleSet::without(const Triple& t) const {
  TripleSet out;
  out.items_.reserve(items_.size());
  for (const Triple& x : items_)
    if (x != t) out.items_.push_back(x);
  return out;
}

}  // namespace trirep
