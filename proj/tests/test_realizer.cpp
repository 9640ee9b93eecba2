#include <doctest.h>

#include "common/brute.hpp"
#include "common/corpus.hpp"
#include "trirep/error.hpp"
#include "trirep/realizer.hpp"
#include "trirep/sigma.hpp"

using namespace trirep;
using namespace trirep::testing;

namespace {

LinearOrder order_of(const UniversePtr& u,
                     const std::vector<std::string>& labels) {
  std::vector<VertexId> seq;
  for (const auto& l : labels) seq.push_back(*u->find(l));
  return LinearOrder::over(u, seq);
}

}  // namespace

TEST_SUITE("realizer") {
  TEST_CASE("base representation for the triangle") {
    auto t = make_k3();
    auto uni = t.graph().universe();
    auto rep = base_representation(t);
    CHECK(rep.order(0) == order_of(uni, {"a2", "a3", "a1"}));
    CHECK(rep.order(1) == order_of(uni, {"a3", "a1", "a2"}));
    CHECK(rep.order(2) == order_of(uni, {"a1", "a2", "a3"}));
    CHECK(sigma2(rep) == t.graph());
    CHECK(brute_sigma2(rep) == t.graph());
  }

  TEST_CASE("base representation for k4") {
    auto t = make_k4();
    auto uni = t.graph().universe();
    auto rep = base_representation(t);
    CHECK(rep.order(0) == order_of(uni, {"a2", "a3", "v", "a1"}));
    CHECK(rep.order(1) == order_of(uni, {"a3", "a1", "v", "a2"}));
    CHECK(rep.order(2) == order_of(uni, {"a1", "a2", "v", "a3"}));
    CHECK(sigma2(rep) == t.graph());
    CHECK(brute_sigma2(rep) == t.graph());
  }

  TEST_CASE("base representation rejects larger inputs") {
    CHECK_THROWS_AS(base_representation(make_octahedron()), InvalidInput);
  }

  TEST_CASE("realize on k4 is the base case") {
    auto t = make_k4();
    CHECK(realize(t) == base_representation(t));
  }

  TEST_CASE("realize on the octahedron") {
    auto t = make_octahedron();
    auto uni = t.graph().universe();
    auto rep = realize(t, {.verify = true});
    CHECK(sigma2(rep) == t.graph());
    CHECK(brute_sigma2(rep) == t.graph());
    CHECK(rep.apexes() == t.outer());
    auto report = fan_of_apex(rep, sigma2(rep));
    CHECK(report.all_hold());
    CHECK(report.fan.size() == 4);

    // The deterministic selection rule pins the exact output.
    CHECK(rep.order(0) == order_of(uni, {"a2", "a3", "b1", "b3", "b2", "a1"}));
    CHECK(rep.order(1) == order_of(uni, {"a3", "a1", "b2", "b1", "b3", "a2"}));
    CHECK(rep.order(2) == order_of(uni, {"a1", "a2", "b3", "b2", "b1", "a3"}));
  }

  TEST_CASE("realize round-trips a larger seeded triangulation") {
    auto t = random_stacked_triangulation(50, 1);
    auto rep = realize(t, {.verify = true});
    CHECK(sigma2(rep) == t.graph());
    CHECK(rep.apexes() == t.outer());
  }

  TEST_CASE("every insertion level stays valid and keeps the fan claim") {
    // Recreate the recursion by hand on the octahedron: at each level the fan
    // of apex 1 in the realized graph must match the fan in the triangulation.
    Triangulation t = make_octahedron();
    std::vector<Triangulation> levels{t};
    while (levels.back().size() > 4)
      levels.push_back(contract(levels.back(), select_contractible(levels.back())));
    for (const auto& level : levels) {
      auto rep = realize(level, {.verify = true});
      auto fan_graph = fan_of_apex(rep, sigma2(rep)).fan;
      auto fan_tri = neighbor_cycle(level, level.apex(0));
      CHECK(fan_graph == fan_tri);
    }
  }

  TEST_CASE("realize after contraction equals suppression after realize") {
    std::vector<Triangulation> corpus{make_octahedron(), make_icosahedron(),
                                      make_k4_stacked()};
    for (int seed = 0; seed < 4; ++seed)
      corpus.push_back(random_stacked_triangulation(14 + seed, 40 + seed));
    for (const auto& t : corpus) {
      VertexId w = select_contractible(t);
      auto left = realize(contract(t, w));
      auto right = realize(t).suppressed(w);
      CHECK(left == right);
    }
  }
}
