#pragma once

#include <array>
#include <optional>
#include <string>

#include "trirep/linear_order.hpp"

namespace trirep {

/// Why a triple of orders is not a standard representation. Witnesses use the
/// first violation in a fixed scan: pairs in rank order of the first order,
/// then apex placements.
struct RepresentationIssue {
  enum class Kind {
    TooSmall,        // fewer than 3 vertices
    DomainMismatch,  // the three orders cover different vertex sets
    DominatedPair,   // below precedes above in all three orders
    ApexMisplaced,   // an apex has rank >= 2 in another order
  };

  Kind kind{};
  VertexId below{};     // DominatedPair
  VertexId above{};     // DominatedPair
  VertexId apex{};      // ApexMisplaced
  int apex_index = 0;   // 1-based order whose maximum is misplaced
  int order_index = 0;  // 1-based order where the apex sits too high

  std::string message(const Universe& u) const;
};

struct RepresentationCheck;

/// Three linear orders over one vertex set such that no pair is ordered the
/// same way by all three, and the maximum of each order sits among the two
/// smallest elements of the other two. Apexes are always the maxima; they are
/// never caller-supplied.
class StandardRepresentation {
 public:
  /// Checks both defining conditions and returns either the representation or
  /// the first violation found.
  static RepresentationCheck validate(std::array<LinearOrder, 3> orders);
  /// Throwing form of validate.
  static StandardRepresentation require(std::array<LinearOrder, 3> orders);

  const LinearOrder& order(int i) const { return orders_[i]; }
  VertexId apex(int i) const { return apexes_[i]; }
  std::array<VertexId, 3> apexes() const { return apexes_; }
  bool is_apex(VertexId v) const;

  int size() const { return orders_[0].size(); }
  bool contains(VertexId v) const { return orders_[0].contains(v); }
  /// Vertex set in ascending id order.
  std::span<const VertexId> vertices() const { return vertices_; }
  const UniversePtr& universe() const { return orders_[0].universe(); }

  /// Restriction of all three orders to the vertex set minus b. Requires b to
  /// be a non-apex and at least 4 vertices; the result keeps the same apexes.
  StandardRepresentation suppressed(VertexId b) const;

  friend bool operator==(const StandardRepresentation& a,
                         const StandardRepresentation& b) {
    return a.orders_[0] == b.orders_[0] && a.orders_[1] == b.orders_[1] &&
           a.orders_[2] == b.orders_[2];
  }

 private:
  StandardRepresentation(std::array<LinearOrder, 3> orders,
                         std::array<VertexId, 3> apexes);

  std::array<LinearOrder, 3> orders_;
  std::array<VertexId, 3> apexes_;
  std::vector<VertexId> vertices_;
};

struct RepresentationCheck {
  std::optional<StandardRepresentation> rep;
  std::optional<RepresentationIssue> issue;

  bool ok() const { return rep.has_value(); }
};

/// Grows a representation by one vertex, the inverse of suppression as used by
/// the realizer: w goes directly below the first apex in order 1, directly
/// above above_in_2 in order 2 and above_in_3 in order 3 (skipping over the
/// first apex when it sits at the bottom of those orders, which keeps the
/// result standard). The result is validated; failures indicate that the
/// caller's input was not a triangulation.
StandardRepresentation insert_for_contraction(const StandardRepresentation& rep,
                                              VertexId w,
                                              VertexId below_in_1,
                                              VertexId above_in_2,
                                              VertexId above_in_3);

}  // namespace trirep
