#include <doctest.h>

#include <sstream>

#include "common/corpus.hpp"
#include "trirep/embedder.hpp"
#include "trirep/error.hpp"
#include "trirep/io.hpp"
#include "trirep/realizer.hpp"
#include "trirep/sigma.hpp"

using namespace trirep;
using namespace trirep::testing;

namespace {

constexpr const char* kOrders4 =
    "# comments and blank lines are fine\n"
    "\n"
    "a2 a3 v a1   # trailing comment\n"
    "a3 a1 v a2\n"
    "  a1\ta2  v a3\n";

StandardRepresentation parse_rep(const std::string& text) {
  std::istringstream in(text);
  auto parsed = parse_orders_text(in);
  return StandardRepresentation::require(parsed.orders);
}

}  // namespace

TEST_SUITE("io") {
  TEST_CASE("orders files tolerate comments and stray whitespace") {
    auto rep = parse_rep(kOrders4);
    CHECK(rep.size() == 4);
    CHECK(rep.universe()->label(rep.apex(0)) == "a1");
    std::ostringstream out;
    write_orders_text(out, rep);
    CHECK(out.str() == "a2 a3 v a1\na3 a1 v a2\na1 a2 v a3\n");
  }

  TEST_CASE("orders files with the wrong shape are parse errors") {
    auto bad = [](const char* text) {
      std::istringstream in(text);
      CHECK_THROWS_AS(parse_orders_text(in), ParseError);
    };
    bad("a b c\n");                              // one line
    bad("a b\nb a\na b\nb a\n");                 // four lines
    bad("a b c\na b c\na b\n");                  // missing vertex
    bad("a b c\na b d\nc a b\n");                // unknown vertex
    bad("a a b\nb a a\na b a\n");                // duplicate
  }

  TEST_CASE("graph files parse edges, outer, rotation and faces") {
    auto t = make_octahedron();
    std::ostringstream out;
    write_triangulation_text(out, t);
    const std::string text = out.str();
    CHECK(text.find("outer a1 a2 a3\n") == 0);
    CHECK(text.find("rotation a1:") != std::string::npos);
    CHECK(text.find("faces\n") != std::string::npos);

    std::istringstream in(text);
    auto parsed = parse_graph_text(in);
    CHECK(parsed.graph == t.graph());
    REQUIRE(parsed.rotation.has_value());
    Triangulation rebuilt = build_triangulation(parsed);
    CHECK(rebuilt.graph() == t.graph());
    CHECK(RotationSystem::same_cycles(rebuilt.rotation(), t.rotation(),
                                      t.graph().vertices()));
  }

  TEST_CASE("a reflected rotation file is accepted") {
    auto t = make_k4();
    std::ostringstream out;
    write_triangulation_text(out, t);
    ParsedGraph parsed = [&] {
      std::istringstream in(out.str());
      return parse_graph_text(in);
    }();
    parsed.rotation = parsed.rotation->reflected();
    Triangulation rebuilt = build_triangulation(parsed);
    CHECK(rebuilt.graph() == t.graph());
  }

  TEST_CASE("face rows alone rebuild the embedding") {
    auto t = make_octahedron();
    auto walks = trace_faces(t.graph(), t.rotation());
    ParsedGraph parsed{t.graph().universe(), t.graph(), t.outer(),
                       std::nullopt, {}};
    for (const auto& w : walks)
      parsed.face_rows.push_back({w[0], w[1], w[2]});
    Triangulation rebuilt = build_triangulation(parsed);
    CHECK(rebuilt.graph() == t.graph());
    CHECK(RotationSystem::same_cycles(rebuilt.rotation(), t.rotation(),
                                      t.graph().vertices()));
  }

  TEST_CASE("edge list alone goes through recovery") {
    auto t = make_octahedron();
    std::ostringstream out;
    write_graph_text(out, t.graph(), t.outer());
    std::istringstream in(out.str());
    auto parsed = parse_graph_text(in);
    CHECK_FALSE(parsed.rotation.has_value());
    Triangulation rebuilt = build_triangulation(parsed);
    CHECK(rebuilt.graph() == t.graph());
  }

  TEST_CASE("graph parse errors") {
    auto bad = [](const char* text) {
      std::istringstream in(text);
      CHECK_THROWS_AS(parse_graph_text(in), ParseError);
    };
    bad("a b\n");                        // no outer line
    bad("outer a b\na b\n");             // short outer
    bad("outer a b c\na b c\n");         // three tokens outside faces
    bad("outer a b c\na a\n");           // loop
    bad("outer a a b\na b\n");           // repeated outer vertex
  }

  TEST_CASE("json orders round-trip through the text structures") {
    auto rep = parse_rep(kOrders4);
    std::istringstream json_in(orders_json(rep));
    auto parsed = parse_orders_json(json_in);
    CHECK(StandardRepresentation::require(parsed.orders) == rep);
  }

  TEST_CASE("json graphs round-trip through the text structures") {
    auto t = make_octahedron();
    auto walks = trace_faces(t.graph(), t.rotation());
    std::istringstream json_in(
        graph_json(t.graph(), t.outer(), &t.rotation(), &walks));
    auto parsed = parse_graph_json(json_in);
    CHECK(parsed.graph == t.graph());
    REQUIRE(parsed.rotation.has_value());
    CHECK(build_triangulation(parsed).graph() == t.graph());
  }

  TEST_CASE("dot output lists every edge once") {
    auto t = make_k4();
    std::string dot = graph_dot(t.graph(), t.outer());
    CHECK(dot.find("graph G {") == 0);
    CHECK(dot.find("\"a1\" -- \"a2\";") != std::string::npos);
    int count = 0;
    for (std::size_t pos = 0; (pos = dot.find("--", pos)) != std::string::npos;
         ++pos)
      ++count;
    CHECK(count == 6);
  }
}
