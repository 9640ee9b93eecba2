#include <doctest.h>

#include <set>

#include "common/corpus.hpp"
#include "trirep/error.hpp"
#include "trirep/triangulation.hpp"

using namespace trirep;
using namespace trirep::testing;

TEST_SUITE("triangulation") {
  TEST_CASE("k4 validates with its unique embedding") {
    auto t = make_k4();
    CHECK(t.size() == 4);
    CHECK(t.graph().edge_count() == 6);
  }

  TEST_CASE("octahedron validates") {
    auto t = make_octahedron();
    CHECK(t.size() == 6);
    CHECK(t.graph().edge_count() == 12);
    for (VertexId v : t.graph().vertices())
      CHECK(neighbor_cycle(t, v).size() == 4);
  }

  TEST_CASE("octahedron accepts any of its faces as outer") {
    auto t = make_octahedron();
    auto uni = t.graph().universe();
    for (auto outer : {std::array<std::string, 3>{"b1", "b2", "b3"},
                       std::array<std::string, 3>{"a1", "b2", "a3"},
                       std::array<std::string, 3>{"a2", "b1", "b3"}}) {
      std::array<VertexId, 3> o{*uni->find(outer[0]), *uni->find(outer[1]),
                                *uni->find(outer[2])};
      RotationSystem rot = recover_rotation(t.graph(), o);
      CHECK(Triangulation::validate(t.graph(), rot, o).ok());
    }
  }

  TEST_CASE("icosahedron recovers with twenty faces") {
    auto t = make_icosahedron();
    CHECK(t.size() == 12);
    CHECK(t.graph().edge_count() == 30);
    CHECK(trace_faces(t.graph(), t.rotation()).size() == 20);
  }

  TEST_CASE("missing edge is reported as an edge count failure") {
    auto el = graph_from_edges(
        {"a1", "a2", "a3", "v"},
        {{"a1", "a2"}, {"a1", "a3"}, {"a2", "a3"}, {"a1", "v"}, {"a2", "v"}},
        {"a1", "a2", "a3"});
    // No rotation can exist; validate the raw counts through recovery.
    CHECK_THROWS_AS(recover_rotation(el.graph, el.outer), NotTriangulation);
  }

  TEST_CASE("validate reports a bad edge count with both numbers") {
    auto t = make_k4();
    SimpleGraph g = t.graph();
    g.remove_edge(*g.universe()->find("a3"), *g.universe()->find("v"));
    auto check = Triangulation::validate(g, t.rotation(), t.outer());
    REQUIRE_FALSE(check.ok());
    CHECK(check.failure.find("3n-6") != std::string::npos);
  }

  TEST_CASE("bipartite graph with a claimed outer triple is rejected early") {
    std::vector<std::pair<std::string, std::string>> edges;
    for (int i = 0; i < 3; ++i)
      for (int j = 3; j < 6; ++j)
        edges.emplace_back("x" + std::to_string(i), "x" + std::to_string(j));
    auto el = graph_from_edges({"x0", "x1", "x2", "x3", "x4", "x5"}, edges,
                               {"x0", "x1", "x2"});
    CHECK_THROWS_WITH_AS(recover_rotation(el.graph, el.outer),
                         "outer triple is not a triangle", NotTriangulation);
  }

  TEST_CASE("k5 neighborhoods have several Hamilton cycles") {
    auto el = make_k5();
    CHECK_THROWS_AS(recover_rotation(el.graph, el.outer), NotTriangulation);
  }

  TEST_CASE("non-face outer triangle is rejected") {
    auto el = k5_minus_edge();
    // (x0, x1, x2) is the separating triangle.
    auto uni = el.universe;
    std::array<VertexId, 3> equator{*uni->find("x0"), *uni->find("x1"),
                                    *uni->find("x2")};
    CHECK_THROWS_WITH_AS(recover_rotation(el.graph, equator),
                         "outer triangle is not a face", NotTriangulation);
    // Any face works, for example (x0, x1, x3).
    RotationSystem rot = recover_rotation(el.graph, el.outer);
    CHECK(Triangulation::validate(el.graph, rot, el.outer).ok());
  }

  TEST_CASE("neighbor cycle of apex 1 runs from apex 3 to apex 2") {
    auto t = make_k4();
    auto uni = t.graph().universe();
    auto fan = neighbor_cycle(t, t.apex(0));
    REQUIRE(fan.size() == 3);
    CHECK(fan[0] == *uni->find("a3"));
    CHECK(fan[1] == *uni->find("v"));
    CHECK(fan[2] == *uni->find("a2"));

    for (const Triangulation& tri :
         {make_octahedron(), make_icosahedron(), make_k4_stacked()}) {
      auto f = neighbor_cycle(tri, tri.apex(0));
      CHECK(f.front() == tri.apex(2));
      CHECK(f.back() == tri.apex(1));
    }
  }

  TEST_CASE("selection on a chordless fan returns the second fan vertex") {
    auto t = make_octahedron();
    auto fan = neighbor_cycle(t, t.apex(0));
    // The fan cycle of the octahedron has no chords.
    for (std::size_t p = 0; p + 2 < fan.size() + 0u; ++p)
      for (std::size_t q = p + 2; q < fan.size(); ++q)
        if (!(p == 0 && q == fan.size() - 1))
          CHECK_FALSE(t.graph().has_edge(fan[p], fan[q]));
    CHECK(select_contractible(t) == fan[1]);
  }

  TEST_CASE("selection follows the shortest chord on the stacked k4") {
    auto t = make_k4_stacked();
    auto uni = t.graph().universe();
    // Fan of a1 is a3, v, u, a2 with the single chord (v, a2); the vertex
    // just inside it is u.
    auto fan = neighbor_cycle(t, t.apex(0));
    REQUIRE(fan.size() == 4);
    CHECK(fan[1] == *uni->find("v"));
    CHECK(fan[2] == *uni->find("u"));
    CHECK(t.graph().has_edge(*uni->find("v"), *uni->find("a2")));
    VertexId w = select_contractible(t);
    CHECK(w == *uni->find("u"));
  }

  TEST_CASE("selected vertex always shares exactly two neighbors with apex 1") {
    std::vector<Triangulation> corpus{make_octahedron(), make_icosahedron(),
                                      make_k4_stacked()};
    for (int seed = 0; seed < 5; ++seed)
      corpus.push_back(random_stacked_triangulation(12 + seed, seed));
    for (const auto& t : corpus) {
      VertexId w = select_contractible(t);
      int common = 0;
      for (VertexId z : t.graph().neighbors(w))
        if (z != t.apex(0) && t.graph().has_edge(t.apex(0), z)) ++common;
      CHECK(common == 2);
    }
  }

  TEST_CASE("contracting the octahedron gives the 5-vertex triangulation") {
    auto t = make_octahedron();
    VertexId w = select_contractible(t);
    Triangulation c = contract(t, w);
    CHECK(c.size() == 5);
    CHECK(c.graph().edge_count() == 9);
    // Exactly one non-adjacent pair remains.
    int non_edges = 0;
    auto vs = c.graph().vertices();
    for (std::size_t i = 0; i < vs.size(); ++i)
      for (std::size_t j = i + 1; j < vs.size(); ++j)
        if (!c.graph().has_edge(vs[i], vs[j])) ++non_edges;
    CHECK(non_edges == 1);
  }

  TEST_CASE("contracting the stacked k4 gives back k4") {
    auto t = make_k4_stacked();
    auto uni = t.graph().universe();
    Triangulation c = contract(t, *uni->find("u"));
    CHECK(c.size() == 4);
    CHECK(c.graph().edge_count() == 6);
    for (const char* a : {"a1", "a2", "a3", "v"})
      CHECK(c.graph().contains(*uni->find(a)));
  }

  TEST_CASE("contraction drops three edges and two faces") {
    std::vector<Triangulation> corpus{make_octahedron(), make_icosahedron()};
    for (int seed = 0; seed < 5; ++seed)
      corpus.push_back(random_stacked_triangulation(15, 100 + seed));
    for (const auto& t : corpus) {
      VertexId w = select_contractible(t);
      Triangulation c = contract(t, w);
      CHECK(c.graph().edge_count() == t.graph().edge_count() - 3);
      CHECK(trace_faces(c.graph(), c.rotation()).size() ==
            trace_faces(t.graph(), t.rotation()).size() - 2);
    }
  }

  TEST_CASE("contraction guards against parallel edges") {
    auto t = make_k4_stacked();
    auto uni = t.graph().universe();
    // v is adjacent to a1 but shares three neighbors with it.
    CHECK_THROWS_AS(contract(t, *uni->find("v")), InvalidInput);
  }

  TEST_CASE("recovery reproduces the stored rotation up to reflection") {
    std::vector<Triangulation> corpus{make_k4(), make_octahedron(),
                                      make_icosahedron(), make_k4_stacked()};
    for (const auto& t : corpus) {
      RotationSystem recovered = recover_rotation(t.graph(), t.outer());
      bool same = RotationSystem::same_cycles(recovered, t.rotation(),
                                              t.graph().vertices());
      bool mirrored = RotationSystem::same_cycles(
          recovered.reflected(), t.rotation(), t.graph().vertices());
      CHECK((same || mirrored));
      // Both have the outer face in trace order, so they must match exactly.
      CHECK(same);
    }
  }
}
