#include "trirep/realizer.hpp"

#include <algorithm>

#include "trirep/error.hpp"
#include "trirep/sigma.hpp"

namespace trirep {

StandardRepresentation base_representation(const Triangulation& t) {
  const VertexId a1 = t.apex(0), a2 = t.apex(1), a3 = t.apex(2);
  auto uni = t.graph().universe();
  if (t.size() == 3) {
    return StandardRepresentation::require({
        LinearOrder::over(uni, {a2, a3, a1}),
        LinearOrder::over(uni, {a3, a1, a2}),
        LinearOrder::over(uni, {a1, a2, a3}),
    });
  }
  if (t.size() == 4) {
    VertexId inner;
    for (VertexId v : t.graph().vertices())
      if (v != a1 && v != a2 && v != a3) inner = v;
    return StandardRepresentation::require({
        LinearOrder::over(uni, {a2, a3, inner, a1}),
        LinearOrder::over(uni, {a3, a1, inner, a2}),
        LinearOrder::over(uni, {a1, a2, inner, a3}),
    });
  }
  throw InvalidInput("base representation needs 3 or 4 vertices");
}

StandardRepresentation realize(const Triangulation& t, RealizeOptions opt) {
  struct Insertion {
    VertexId w, fan_prev, fan_next;
  };

  // Contract down to the 4-vertex base, then replay the contractions as
  // order insertions. Iterative so depth never limits the input size.
  std::vector<Insertion> insertions;
  Triangulation cur = t;
  while (cur.size() > 4) {
    VertexId w = select_contractible(cur);
    auto fan = neighbor_cycle(cur, cur.apex(0));
    auto it = std::find(fan.begin(), fan.end(), w);
    const int i = static_cast<int>(it - fan.begin());
    insertions.push_back({w, fan[i - 1], fan[i + 1]});
    cur = contract(cur, w);
  }

  StandardRepresentation rep = base_representation(cur);
  for (auto it = insertions.rbegin(); it != insertions.rend(); ++it)
    rep = insert_for_contraction(rep, it->w, rep.apex(0), it->fan_prev,
                                 it->fan_next);

  if (opt.verify) {
    if (!(sigma2(rep) == t.graph()))
      throw InvariantViolation(
          "realized representation does not reproduce the input graph");
  }
  return rep;
}

}  // namespace trirep
