#include "trirep/universe.hpp"

#include "trirep/error.hpp"

namespace trirep {

std::shared_ptr<const Universe> Universe::make(std::vector<std::string> labels) {
  auto u = std::shared_ptr<Universe>(new Universe());
  u->labels_ = std::move(labels);
  u->index_.reserve(u->labels_.size());
  for (std::size_t i = 0; i < u->labels_.size(); ++i) {
    if (u->labels_[i].empty())
      throw InvalidInput("empty vertex label");
    auto [it, fresh] =
        u->index_.emplace(u->labels_[i], static_cast<std::int32_t>(i));
    if (!fresh)
      throw InvalidInput("duplicate vertex label '" + u->labels_[i] + "'");
  }
  return u;
}

const std::string& Universe::label(VertexId v) const {
  if (!v.valid() || v.index >= size())
    throw InvalidInput("vertex id out of range");
  return labels_[v.index];
}

std::optional<VertexId> Universe::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return VertexId{it->second};
}

bool same_labels(const UniversePtr& a, const UniversePtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

}  // namespace trirep
