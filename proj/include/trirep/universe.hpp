#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace trirep {

// Dense index of an interned vertex label.
struct VertexId {
  std::int32_t index = -1;

  constexpr bool valid() const { return index >= 0; }
  friend constexpr auto operator<=>(VertexId, VertexId) = default;
};

// Immutable label table. Every structure derived from one input shares a
// universe; suppressed or contracted structures keep the pointer and simply
// use a subset of its ids.
class Universe {
 public:
  static std::shared_ptr<const Universe> make(std::vector<std::string> labels);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::string& label(VertexId v) const;
  std::optional<VertexId> find(std::string_view label) const;

  friend bool operator==(const Universe& a, const Universe& b) {
    return a.labels_ == b.labels_;
  }

 private:
  Universe() = default;

  std::vector<std::string> labels_;
  std::unordered_map<std::string, std::int32_t> index_;
};

using UniversePtr = std::shared_ptr<const Universe>;

// True when the two universes intern the same labels in the same ids.
bool same_labels(const UniversePtr& a, const UniversePtr& b);

}  // namespace trirep
