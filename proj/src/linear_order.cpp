#include "trirep/linear_order.hpp"

#include <algorithm>

#include "trirep/error.hpp"

namespace trirep {

LinearOrder LinearOrder::over(UniversePtr universe,
                              std::vector<VertexId> sequence) {
  LinearOrder o;
  if (!universe) throw InvalidInput("order needs a universe");
  o.universe_ = std::move(universe);
  o.sequence_ = std::move(sequence);
  o.ranks_.assign(o.universe_->size(), -1);
  for (std::size_t k = 0; k < o.sequence_.size(); ++k) {
    VertexId v = o.sequence_[k];
    if (!v.valid() || v.index >= o.universe_->size())
      throw InvalidInput("unknown vertex in order");
    if (o.ranks_[v.index] != -1)
      throw InvalidInput("duplicate vertex '" + o.universe_->label(v) +
                         "' in order");
    o.ranks_[v.index] = static_cast<std::int32_t>(k);
  }
  return o;
}

void LinearOrder::rebuild_ranks() {
  ranks_.assign(universe_->size(), -1);
  for (std::size_t k = 0; k < sequence_.size(); ++k)
    ranks_[sequence_[k].index] = static_cast<std::int32_t>(k);
}

bool LinearOrder::contains(VertexId v) const {
  return v.valid() && v.index < universe_->size() && ranks_[v.index] != -1;
}

int LinearOrder::rank(VertexId v) const {
  if (!contains(v))
    throw InvalidInput("vertex not in order" +
                       (v.valid() && v.index < universe_->size()
                            ? ": '" + universe_->label(v) + "'"
                            : std::string()));
  return ranks_[v.index];
}

VertexId LinearOrder::at(int position) const {
  if (position < 0 || position >= size())
    throw InvalidInput("order position out of range");
  return sequence_[position];
}

VertexId LinearOrder::max() const {
  if (sequence_.empty()) throw InvalidInput("empty order has no maximum");
  return sequence_.back();
}

VertexId LinearOrder::second_max() const {
  if (size() < 2)
    throw InvalidInput("order with fewer than two elements has no second maximum");
  return sequence_[size() - 2];
}

bool LinearOrder::less(VertexId x, VertexId y) const {
  return rank(x) < rank(y);
}

LinearOrder LinearOrder::erased(VertexId v) const {
  rank(v);  // membership check
  LinearOrder o;
  o.universe_ = universe_;
  o.sequence_.reserve(sequence_.size() - 1);
  for (VertexId u : sequence_)
    if (u != v) o.sequence_.push_back(u);
  o.rebuild_ranks();
  return o;
}

LinearOrder LinearOrder::inserted(VertexId v, int position) const {
  if (contains(v))
    throw InvalidInput("vertex '" + universe_->label(v) + "' already in order");
  if (!v.valid() || v.index >= universe_->size())
    throw InvalidInput("unknown vertex in order");
  if (position < 0 || position > size())
    throw InvalidInput("order position out of range");
  LinearOrder o;
  o.universe_ = universe_;
  o.sequence_ = sequence_;
  o.sequence_.insert(o.sequence_.begin() + position, v);
  o.rebuild_ranks();
  return o;
}

}  // namespace trirep
