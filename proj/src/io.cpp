#include "trirep/io.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "trirep/error.hpp"

namespace trirep {

namespace {

using ordered_json = nlohmann::ordered_json;

std::vector<std::string> tokenize(const std::string& raw) {
  std::string line = raw;
  if (auto hash = line.find('#'); hash != std::string::npos)
    line.erase(hash);
  std::istringstream ss(line);
  std::vector<std::string> tokens;
  std::string tok;
  while (ss >> tok) tokens.push_back(tok);
  return tokens;
}

// Collects labels and interns them in sorted order, so any file describing
// the same structure produces the same universe.
class UniverseBuilder {
 public:
  void add(const std::string& label) { labels_.insert(label); }

  UniversePtr build() const {
    return Universe::make({labels_.begin(), labels_.end()});
  }

 private:
  std::set<std::string> labels_;
};

}  // namespace

ParsedOrders parse_orders_text(std::istream& in) {
  std::vector<std::vector<std::string>> rows;
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    auto tokens = tokenize(raw);
    if (tokens.empty()) continue;
    if (rows.size() == 3)
      throw ParseError("orders file has more than three sequences (line " +
                       std::to_string(line_no) + ")");
    rows.push_back(std::move(tokens));
  }
  if (rows.size() != 3)
    throw ParseError("orders file needs exactly three sequences, found " +
                     std::to_string(rows.size()));

  UniverseBuilder builder;
  for (const std::string& label : rows[0]) builder.add(label);
  auto uni = builder.build();
  if (uni->size() != static_cast<int>(rows[0].size()))
    throw ParseError("duplicate vertex in order 1");

  std::array<std::vector<VertexId>, 3> seqs;
  for (int i = 0; i < 3; ++i) {
    if (rows[i].size() != rows[0].size())
      throw ParseError("order " + std::to_string(i + 1) +
                       " does not cover the same vertices as order 1");
    for (const std::string& label : rows[i]) {
      auto v = uni->find(label);
      if (!v)
        throw ParseError("order " + std::to_string(i + 1) +
                         " uses unknown vertex '" + label + "'");
      seqs[i].push_back(*v);
    }
  }
  try {
    return ParsedOrders{uni,
                        {LinearOrder::over(uni, std::move(seqs[0])),
                         LinearOrder::over(uni, std::move(seqs[1])),
                         LinearOrder::over(uni, std::move(seqs[2]))}};
  } catch (const InvalidInput& e) {
    throw ParseError(e.what());
  }
}

void write_orders_text(std::ostream& out, const StandardRepresentation& rep) {
  for (int i = 0; i < 3; ++i) {
    bool first = true;
    for (VertexId v : rep.order(i).sequence()) {
      out << (first ? "" : " ") << rep.universe()->label(v);
      first = false;
    }
    out << "\n";
  }
}

std::string orders_json(const StandardRepresentation& rep) {
  ordered_json j;
  j["orders"] = ordered_json::array();
  for (int i = 0; i < 3; ++i) {
    ordered_json seq = ordered_json::array();
    for (VertexId v : rep.order(i).sequence())
      seq.push_back(rep.universe()->label(v));
    j["orders"].push_back(std::move(seq));
  }
  j["apexes"] = ordered_json::array();
  for (int i = 0; i < 3; ++i)
    j["apexes"].push_back(rep.universe()->label(rep.apex(i)));
  return j.dump(2) + "\n";
}

ParsedOrders parse_orders_json(std::istream& in) {
  ordered_json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad JSON: ") + e.what());
  }
  if (!j.contains("orders") || !j["orders"].is_array() ||
      j["orders"].size() != 3)
    throw ParseError("JSON orders need an \"orders\" array of three sequences");
  std::ostringstream text;
  for (const auto& seq : j["orders"]) {
    bool first = true;
    for (const auto& label : seq) {
      if (!label.is_string()) throw ParseError("vertex labels must be strings");
      text << (first ? "" : " ") << label.get<std::string>();
      first = false;
    }
    text << "\n";
  }
  std::istringstream ss(text.str());
  return parse_orders_text(ss);
}

ParsedGraph parse_graph_text(std::istream& in) {
  struct Row {
    enum Kind { Outer, Edge, Rotation, Face } kind;
    std::vector<std::string> tokens;
  };
  std::vector<Row> rows;
  bool in_faces = false;
  bool saw_outer = false;
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    auto tokens = tokenize(raw);
    if (tokens.empty()) continue;
    const std::string where = " (line " + std::to_string(line_no) + ")";
    if (in_faces) {
      if (tokens.size() != 3)
        throw ParseError("face rows need three vertices" + where);
      rows.push_back({Row::Face, std::move(tokens)});
      continue;
    }
    if (tokens[0] == "outer") {
      if (saw_outer) throw ParseError("duplicate outer line" + where);
      if (tokens.size() != 4)
        throw ParseError("outer line needs three vertices" + where);
      saw_outer = true;
      tokens.erase(tokens.begin());
      rows.insert(rows.begin(), {Row::Outer, std::move(tokens)});
      continue;
    }
    if (tokens[0] == "rotation") {
      if (tokens.size() < 4)
        throw ParseError("rotation line needs a vertex and at least two neighbors" +
                         where);
      tokens.erase(tokens.begin());
      if (!tokens[0].empty() && tokens[0].back() == ':')
        tokens[0].pop_back();
      else if (tokens.size() > 1 && tokens[1] == ":")
        tokens.erase(tokens.begin() + 1);
      if (tokens[0].empty())
        throw ParseError("rotation line needs a vertex" + where);
      rows.push_back({Row::Rotation, std::move(tokens)});
      continue;
    }
    if (tokens[0] == "faces" && tokens.size() == 1) {
      in_faces = true;
      continue;
    }
    if (tokens.size() != 2)
      throw ParseError("edge lines need two vertices" + where);
    if (tokens[0] == tokens[1])
      throw ParseError("loop edge at '" + tokens[0] + "'" + where);
    rows.push_back({Row::Edge, std::move(tokens)});
  }
  if (!saw_outer) throw ParseError("graph file needs an outer line");

  UniverseBuilder builder;
  for (const auto& row : rows)
    for (const auto& tok : row.tokens) builder.add(tok);
  auto uni = builder.build();
  auto lookup = [&](const std::string& label) { return *uni->find(label); };

  std::vector<VertexId> verts;
  for (int i = 0; i < uni->size(); ++i) verts.push_back(VertexId{i});
  SimpleGraph graph(uni, verts);
  std::array<VertexId, 3> outer{};
  std::optional<RotationSystem> rotation;
  std::vector<std::array<VertexId, 3>> face_rows;

  for (const auto& row : rows) {
    switch (row.kind) {
      case Row::Outer:
        outer = {lookup(row.tokens[0]), lookup(row.tokens[1]),
                 lookup(row.tokens[2])};
        if (outer[0] == outer[1] || outer[0] == outer[2] ||
            outer[1] == outer[2])
          throw ParseError("outer vertices are not distinct");
        break;
      case Row::Edge:
        graph.add_edge(lookup(row.tokens[0]), lookup(row.tokens[1]));
        break;
      case Row::Rotation: {
        if (!rotation) rotation.emplace(uni);
        std::vector<VertexId> cyc;
        for (std::size_t i = 1; i < row.tokens.size(); ++i)
          cyc.push_back(lookup(row.tokens[i]));
        rotation->set(lookup(row.tokens[0]), std::move(cyc));
        break;
      }
      case Row::Face:
        face_rows.push_back({lookup(row.tokens[0]), lookup(row.tokens[1]),
                             lookup(row.tokens[2])});
        break;
    }
  }

  // Rotation lines also imply edges.
  if (rotation) {
    for (const auto& row : rows) {
      if (row.kind != Row::Rotation) continue;
      VertexId v = lookup(row.tokens[0]);
      for (std::size_t i = 1; i < row.tokens.size(); ++i) {
        VertexId w = lookup(row.tokens[i]);
        if (v == w) throw ParseError("loop in rotation of '" + row.tokens[0] + "'");
        graph.add_edge(v, w);
      }
    }
  }

  return ParsedGraph{uni, std::move(graph), outer, std::move(rotation),
                     std::move(face_rows)};
}

Triangulation build_triangulation(const ParsedGraph& parsed) {
  if (parsed.rotation) {
    auto check = Triangulation::validate(parsed.graph, *parsed.rotation,
                                         parsed.outer);
    if (check.ok()) return *std::move(check.tri);
    // Mirrored input is fine; anything else is not.
    auto mirrored = Triangulation::validate(
        parsed.graph, parsed.rotation->reflected(), parsed.outer);
    if (mirrored.ok()) return *std::move(mirrored.tri);
    throw NotTriangulation(check.failure);
  }
  if (!parsed.face_rows.empty()) {
    RotationSystem rot =
        rotation_from_faces(parsed.graph, parsed.outer, parsed.face_rows);
    return Triangulation::require(parsed.graph, std::move(rot), parsed.outer);
  }
  RotationSystem rot = recover_rotation(parsed.graph, parsed.outer);
  return Triangulation::require(parsed.graph, std::move(rot), parsed.outer);
}

namespace {

// Emission is canonical in labels, independent of how ids were interned.
std::vector<std::pair<std::string, std::string>> sorted_edge_labels(
    const SimpleGraph& g) {
  const Universe& u = *g.universe();
  std::vector<std::pair<std::string, std::string>> edges;
  for (VertexId v : g.vertices())
    for (VertexId w : g.neighbors(v)) {
      if (u.label(v) < u.label(w))
        edges.emplace_back(u.label(v), u.label(w));
    }
  std::sort(edges.begin(), edges.end());
  return edges;
}

std::vector<VertexId> label_sorted_vertices(const SimpleGraph& g) {
  const Universe& u = *g.universe();
  std::vector<VertexId> verts(g.vertices().begin(), g.vertices().end());
  std::sort(verts.begin(), verts.end(), [&](VertexId a, VertexId b) {
    return u.label(a) < u.label(b);
  });
  return verts;
}

void write_edges(std::ostream& out, const SimpleGraph& g) {
  for (const auto& [a, b] : sorted_edge_labels(g))
    out << a << " " << b << "\n";
}

std::vector<VertexId> anchored_cycle(const RotationSystem& rot, VertexId v) {
  const Universe& u = *rot.universe();
  auto cyc = rot.at(v);
  std::vector<VertexId> out(cyc.begin(), cyc.end());
  if (!out.empty()) {
    auto it = std::min_element(out.begin(), out.end(),
                               [&](VertexId a, VertexId b) {
                                 return u.label(a) < u.label(b);
                               });
    std::rotate(out.begin(), it, out.end());
  }
  return out;
}

}  // namespace

void write_graph_text(std::ostream& out, const SimpleGraph& g,
                      std::array<VertexId, 3> outer) {
  const Universe& u = *g.universe();
  out << "outer " << u.label(outer[0]) << " " << u.label(outer[1]) << " "
      << u.label(outer[2]) << "\n";
  write_edges(out, g);
}

void write_triangulation_text(std::ostream& out, const Triangulation& t) {
  const Universe& u = *t.graph().universe();
  write_graph_text(out, t.graph(), t.outer());
  for (VertexId v : label_sorted_vertices(t.graph())) {
    out << "rotation " << u.label(v) << ":";
    for (VertexId w : anchored_cycle(t.rotation(), v)) out << " " << u.label(w);
    out << "\n";
  }
  out << "faces\n";
  auto walks = trace_faces(t.graph(), t.rotation());
  std::vector<std::array<std::string, 3>> rows;
  for (const auto& w : walks) {
    std::array<std::string, 3> row{u.label(w[0]), u.label(w[1]),
                                   u.label(w[2])};
    auto it = std::min_element(row.begin(), row.end());
    std::rotate(row.begin(), it, row.end());
    rows.push_back(std::move(row));
  }
  std::sort(rows.begin(), rows.end());
  // Outer face first.
  std::array<std::string, 3> outer{u.label(t.apex(0)), u.label(t.apex(1)),
                                   u.label(t.apex(2))};
  auto is_outer = [&](const std::array<std::string, 3>& row) {
    auto a = row;
    auto b = outer;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
  };
  std::stable_partition(rows.begin(), rows.end(), is_outer);
  for (const auto& row : rows)
    out << row[0] << " " << row[1] << " " << row[2] << "\n";
}

std::string graph_json(const SimpleGraph& g, std::array<VertexId, 3> outer,
                       const RotationSystem* rotation,
                       const std::vector<std::vector<VertexId>>* faces) {
  const Universe& u = *g.universe();
  ordered_json j;
  j["outer"] = {u.label(outer[0]), u.label(outer[1]), u.label(outer[2])};
  j["vertices"] = ordered_json::array();
  for (VertexId v : label_sorted_vertices(g)) j["vertices"].push_back(u.label(v));
  j["edges"] = ordered_json::array();
  for (const auto& [a, b] : sorted_edge_labels(g)) j["edges"].push_back({a, b});
  if (rotation) {
    ordered_json r = ordered_json::object();
    for (VertexId v : label_sorted_vertices(g)) {
      ordered_json cyc = ordered_json::array();
      for (VertexId w : anchored_cycle(*rotation, v)) cyc.push_back(u.label(w));
      r[u.label(v)] = std::move(cyc);
    }
    j["rotation"] = std::move(r);
  }
  if (faces) {
    ordered_json f = ordered_json::array();
    for (const auto& row : *faces) {
      ordered_json face = ordered_json::array();
      for (VertexId v : row) face.push_back(u.label(v));
      f.push_back(std::move(face));
    }
    j["faces"] = std::move(f);
  }
  return j.dump(2) + "\n";
}

ParsedGraph parse_graph_json(std::istream& in) {
  ordered_json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad JSON: ") + e.what());
  }
  if (!j.contains("outer") || !j.contains("edges"))
    throw ParseError("JSON graph needs \"outer\" and \"edges\"");
  std::ostringstream text;
  text << "outer";
  for (const auto& label : j["outer"]) text << " " << label.get<std::string>();
  text << "\n";
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2) throw ParseError("bad edge row");
    text << e[0].get<std::string>() << " " << e[1].get<std::string>() << "\n";
  }
  if (j.contains("rotation")) {
    for (const auto& [v, cyc] : j["rotation"].items()) {
      text << "rotation " << v << ":";
      for (const auto& w : cyc) text << " " << w.get<std::string>();
      text << "\n";
    }
  }
  if (j.contains("faces")) {
    text << "faces\n";
    for (const auto& row : j["faces"]) {
      bool first = true;
      for (const auto& v : row) {
        text << (first ? "" : " ") << v.get<std::string>();
        first = false;
      }
      text << "\n";
    }
  }
  std::istringstream ss(text.str());
  return parse_graph_text(ss);
}

std::string graph_dot(const SimpleGraph& g, std::array<VertexId, 3> outer) {
  const Universe& u = *g.universe();
  std::ostringstream out;
  out << "graph G {\n";
  out << "  // outer: " << u.label(outer[0]) << " " << u.label(outer[1]) << " "
      << u.label(outer[2]) << "\n";
  for (const auto& [a, b] : sorted_edge_labels(g))
    out << "  \"" << a << "\" -- \"" << b << "\";\n";
  out << "}\n";
  return out.str();
}

}  // namespace trirep
