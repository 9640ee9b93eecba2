#include "trirep/representation.hpp"

#include <algorithm>

#include "trirep/error.hpp"

namespace trirep {

std::string RepresentationIssue::message(const Universe& u) const {
  switch (kind) {
    case Kind::TooSmall:
      return "not a representation: need at least 3 vertices";
    case Kind::DomainMismatch:
      return "not a representation: orders cover different vertex sets";
    case Kind::DominatedPair:
      return "not a representation, witness (" + u.label(below) + ", " +
             u.label(above) + ")";
    case Kind::ApexMisplaced:
      return "not standard, witness (" + u.label(apex) + ", " +
             std::to_string(order_index) + ")";
  }
  return "invalid representation";
}

StandardRepresentation::StandardRepresentation(std::array<LinearOrder, 3> orders,
                                               std::array<VertexId, 3> apexes)
    : orders_(std::move(orders)), apexes_(apexes) {
  auto seq = orders_[0].sequence();
  vertices_.assign(seq.begin(), seq.end());
  std::sort(vertices_.begin(), vertices_.end());
}

bool StandardRepresentation::is_apex(VertexId v) const {
  return v == apexes_[0] || v == apexes_[1] || v == apexes_[2];
}

RepresentationCheck StandardRepresentation::validate(
    std::array<LinearOrder, 3> orders) {
  RepresentationCheck out;
  const int n = orders[0].size();
  if (n < 3) {
    RepresentationIssue issue;
    issue.kind = RepresentationIssue::Kind::TooSmall;
    out.issue = issue;
    return out;
  }
  auto domain = [](const LinearOrder& o) {
    std::vector<VertexId> d(o.sequence().begin(), o.sequence().end());
    std::sort(d.begin(), d.end());
    return d;
  };
  const auto d0 = domain(orders[0]);
  if (!same_labels(orders[0].universe(), orders[1].universe()) ||
      !same_labels(orders[0].universe(), orders[2].universe()) ||
      d0 != domain(orders[1]) || d0 != domain(orders[2])) {
    RepresentationIssue issue;
    issue.kind = RepresentationIssue::Kind::DomainMismatch;
    out.issue = issue;
    return out;
  }

  // Dominated pairs, scanned in rank order of the first order so the report
  // is reproducible. A pair can only be dominated in the direction the first
  // order already agrees with.
  for (int i = 0; i < n; ++i) {
    VertexId x = orders[0].at(i);
    for (int j = i + 1; j < n; ++j) {
      VertexId y = orders[0].at(j);
      if (orders[1].less(x, y) && orders[2].less(x, y)) {
        RepresentationIssue issue;
        issue.kind = RepresentationIssue::Kind::DominatedPair;
        issue.below = x;
        issue.above = y;
        out.issue = issue;
        return out;
      }
    }
  }

  std::array<VertexId, 3> apexes{orders[0].max(), orders[1].max(),
                                 orders[2].max()};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (j == i) continue;
      if (orders[j].rank(apexes[i]) >= 2) {
        RepresentationIssue issue;
        issue.kind = RepresentationIssue::Kind::ApexMisplaced;
        issue.apex = apexes[i];
        issue.apex_index = i + 1;
        issue.order_index = j + 1;
        out.issue = issue;
        return out;
      }
    }
  }

  out.rep = StandardRepresentation(std::move(orders), apexes);
  return out;
}

StandardRepresentation StandardRepresentation::require(
    std::array<LinearOrder, 3> orders) {
  const Universe& u = *orders[0].universe();
  auto check = validate(std::move(orders));
  if (!check.ok()) throw InvalidInput(check.issue->message(u));
  return *std::move(check.rep);
}

StandardRepresentation StandardRepresentation::suppressed(VertexId b) const {
  if (is_apex(b))
    throw InvalidInput("cannot suppress apex '" + universe()->label(b) + "'");
  if (size() < 4)
    throw InvalidInput("cannot suppress below 3 vertices");
  auto check = validate(
      {orders_[0].erased(b), orders_[1].erased(b), orders_[2].erased(b)});
  if (!check.ok())
    throw InvariantViolation("suppression produced an invalid representation: " +
                             check.issue->message(*universe()));
  return *std::move(check.rep);
}

StandardRepresentation insert_for_contraction(const StandardRepresentation& rep,
                                              VertexId w,
                                              VertexId below_in_1,
                                              VertexId above_in_2,
                                              VertexId above_in_3) {
  const Universe& u = *rep.universe();
  if (rep.contains(w))
    throw InvalidInput("vertex '" + u.label(w) + "' already present");
  if (below_in_1 != rep.apex(0))
    throw InvalidInput("insertion point in order 1 must be the first apex");
  if (!rep.contains(above_in_2) || !rep.contains(above_in_3))
    throw InvalidInput("insertion anchors must be present");

  const LinearOrder& o1 = rep.order(0);
  const LinearOrder& o2 = rep.order(1);
  const LinearOrder& o3 = rep.order(2);
  VertexId a1 = rep.apex(0);

  // In orders 2 and 3 the new vertex goes directly above its anchor, except
  // that it also skips over the first apex when the apex sits directly above
  // the anchor; otherwise the apex would be pushed out of the bottom pair and
  // the result would no longer be standard.
  int pos1 = o1.rank(a1);
  int pos2 = std::max(o2.rank(above_in_2), o2.rank(a1)) + 1;
  int pos3 = std::max(o3.rank(above_in_3), o3.rank(a1)) + 1;

  auto check = StandardRepresentation::validate(
      {o1.inserted(w, pos1), o2.inserted(w, pos2), o3.inserted(w, pos3)});
  if (!check.ok())
    throw InvalidInput("insertion produced an invalid representation (" +
                       check.issue->message(u) +
                       "); the source graph is not a triangulation");
  if (check.rep->apexes() != rep.apexes())
    throw InvalidInput("insertion displaced an apex");
  return *std::move(check.rep);
}

}  // namespace trirep
