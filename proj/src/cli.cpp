#include "trirep/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "trirep/embedder.hpp"
#include "trirep/error.hpp"
#include "trirep/io.hpp"
#include "trirep/oracle.hpp"
#include "trirep/realizer.hpp"
#include "trirep/sigma.hpp"

namespace trirep {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;

std::string slurp(const std::string& path, std::istream& in) {
  if (path == "-") {
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  std::ifstream file(path);
  if (!file) throw ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << file.rdbuf();
  return ss.str();
}

ParsedOrders read_orders(const std::string& path, std::istream& in) {
  std::istringstream ss(slurp(path, in));
  return parse_orders_text(ss);
}

ParsedGraph read_graph(const std::string& path, std::istream& in) {
  std::istringstream ss(slurp(path, in));
  return parse_graph_text(ss);
}

StandardRepresentation require_rep(const ParsedOrders& parsed,
                                   std::ostream& err) {
  auto check = StandardRepresentation::validate(parsed.orders);
  if (!check.ok()) {
    err << check.issue->message(*parsed.universe) << "\n";
    throw Error("invalid representation");
  }
  return *std::move(check.rep);
}

std::string label_list(const Universe& u, std::span<const VertexId> vs) {
  std::string out;
  for (VertexId v : vs) out += (out.empty() ? "" : " ") + u.label(v);
  return out;
}

int cmd_check_rep(const std::string& path, const std::string& format,
                  std::istream& in, std::ostream& out, std::ostream& err) {
  auto parsed = read_orders(path, in);
  auto check = StandardRepresentation::validate(parsed.orders);
  if (!check.ok()) {
    const std::string msg = check.issue->message(*parsed.universe);
    if (format == "json") {
      ordered_json j;
      j["valid"] = false;
      j["error"] = msg;
      out << j.dump(2) << "\n";
    } else {
      out << "invalid: " << msg << "\n";
    }
    err << msg << "\n";
    return kFailure;
  }
  const auto& rep = *check.rep;
  const Universe& u = *rep.universe();
  auto report = fan_of_apex(rep, sigma2(rep));

  if (format == "json") {
    ordered_json j;
    j["valid"] = true;
    j["vertices"] = rep.size();
    j["apexes"] = {u.label(rep.apex(0)), u.label(rep.apex(1)),
                   u.label(rep.apex(2))};
    j["second_max"] = u.label(report.second_max);
    j["fan"] = ordered_json::array();
    for (VertexId v : report.fan) j["fan"].push_back(u.label(v));
    j["checks"] = ordered_json::array();
    for (int i = 0; i < 6; ++i) {
      ordered_json c;
      c["name"] = FanReport::check_name(i);
      c["holds"] = report.checks[i].holds;
      c["applicable"] = report.checks[i].applicable;
      if (!report.checks[i].detail.empty())
        c["detail"] = report.checks[i].detail;
      j["checks"].push_back(std::move(c));
    }
    out << j.dump(2) << "\n";
  } else {
    out << "valid standard representation\n";
    out << "vertices: " << rep.size() << "\n";
    out << "apexes: " << label_list(u, rep.apexes()) << "\n";
    out << "second max of order 1: " << u.label(report.second_max) << "\n";
    out << "fan of apex 1: " << label_list(u, report.fan) << "\n";
    out << "checks:\n";
    for (int i = 0; i < 6; ++i) {
      out << "  " << FanReport::check_name(i) << ": ";
      if (!report.checks[i].applicable)
        out << "n/a\n";
      else if (report.checks[i].holds)
        out << "pass\n";
      else
        out << "FAIL (" << report.checks[i].detail << ")\n";
    }
  }
  if (!report.all_hold()) {
    for (int i = 0; i < 6; ++i)
      if (!report.checks[i].holds)
        err << FanReport::check_name(i) << ": " << report.checks[i].detail
            << "\n";
    return kFailure;
  }
  return kOk;
}

int cmd_sigma2(const std::string& path, const std::string& format,
               std::istream& in, std::ostream& out, std::ostream& err) {
  auto rep = require_rep(read_orders(path, in), err);
  SimpleGraph g = sigma2(rep);
  if (format == "json")
    out << graph_json(g, rep.apexes());
  else if (format == "dot")
    out << graph_dot(g, rep.apexes());
  else
    write_graph_text(out, g, rep.apexes());
  return kOk;
}

int cmd_sigma3(const std::string& path, const std::string& format,
               std::istream& in, std::ostream& out, std::ostream& err) {
  auto rep = require_rep(read_orders(path, in), err);
  TripleSet triples = sigma3(rep);
  const Universe& u = *rep.universe();
  std::vector<std::array<std::string, 3>> rows;
  for (const Triple& t : triples) {
    std::array<std::string, 3> row{u.label(t.v[0]), u.label(t.v[1]),
                                   u.label(t.v[2])};
    std::sort(row.begin(), row.end());
    rows.push_back(std::move(row));
  }
  std::sort(rows.begin(), rows.end());
  if (format == "json") {
    ordered_json j;
    j["triples"] = ordered_json::array();
    for (const auto& row : rows) j["triples"].push_back({row[0], row[1], row[2]});
    out << j.dump(2) << "\n";
  } else {
    for (const auto& row : rows)
      out << row[0] << " " << row[1] << " " << row[2] << "\n";
  }
  return kOk;
}

int cmd_realize(const std::string& path, const std::string& format, bool verify,
                std::istream& in, std::ostream& out, std::ostream&) {
  Triangulation t = build_triangulation(read_graph(path, in));
  StandardRepresentation rep = realize(t, RealizeOptions{verify});
  if (format == "json")
    out << orders_json(rep);
  else
    write_orders_text(out, rep);
  return kOk;
}

int cmd_embed(const std::string& path, const std::string& format,
              std::istream& in, std::ostream& out, std::ostream& err) {
  auto rep = require_rep(read_orders(path, in), err);
  Triangulation t = embed(rep);
  if (format == "json") {
    auto walks = trace_faces(t.graph(), t.rotation());
    out << graph_json(t.graph(), t.outer(), &t.rotation(), &walks);
  } else if (format == "dot") {
    out << graph_dot(t.graph(), t.outer());
  } else {
    write_triangulation_text(out, t);
  }
  return kOk;
}

int cmd_roundtrip(const std::string& path, bool, std::istream& in,
                  std::ostream& out, std::ostream& err) {
  Triangulation t = build_triangulation(read_graph(path, in));
  StandardRepresentation rep = realize(t);
  SimpleGraph g = sigma2(rep);
  if (g == t.graph()) {
    out << "graphs equal, " << g.edge_count() << " edges\n";
    return kOk;
  }
  const Universe& u = *t.graph().universe();
  for (VertexId v : t.graph().vertices()) {
    for (VertexId w : t.graph().vertices()) {
      if (!(v < w)) continue;
      const bool in_t = t.graph().has_edge(v, w);
      const bool in_g = g.has_edge(v, w);
      if (in_t != in_g) {
        err << "graphs differ: edge (" << u.label(v) << ", " << u.label(w)
            << ") is in the " << (in_t ? "input" : "realized") << " graph only\n";
        return kFailure;
      }
    }
  }
  err << "graphs differ\n";
  return kFailure;
}

int cmd_oracle_search(const std::string& path, const std::string& format,
                      int cap, std::istream& in, std::ostream& out,
                      std::ostream& err) {
  auto parsed = read_graph(path, in);
  auto rep = search_representation(parsed.graph, parsed.outer, cap);
  if (!rep) {
    err << "no standard representation with the given apexes\n";
    return kFailure;
  }
  if (format == "json")
    out << orders_json(*rep);
  else
    write_orders_text(out, *rep);
  return kOk;
}

int cmd_oracle_gen(int n, std::uint64_t seed, const std::string& format,
                   std::ostream& out) {
  Triangulation t = random_stacked_triangulation(n, seed);
  if (format == "json") {
    auto walks = trace_faces(t.graph(), t.rotation());
    out << graph_json(t.graph(), t.outer(), &t.rotation(), &walks);
  } else if (format == "dot") {
    out << graph_dot(t.graph(), t.outer());
  } else {
    write_triangulation_text(out, t);
  }
  return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err) {
  CLI::App app{"planar triangulations as triples of linear orders"};
  app.require_subcommand(1);

  std::string file;
  std::string format = "text";
  bool verify = false;
  int cap = 7;
  int gen_n = 0;
  std::uint64_t seed = 0;

  auto add_format = [&](CLI::App* cmd, bool with_dot) {
    auto choices = with_dot
                       ? std::vector<std::string>{"text", "json", "dot"}
                       : std::vector<std::string>{"text", "json"};
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember(choices));
  };

  auto* check_rep = app.add_subcommand(
      "check-rep", "validate an orders file and report the apex fan checks");
  check_rep->add_option("file", file, "orders file, or - for stdin")
      ->required();
  add_format(check_rep, false);

  auto* s2 = app.add_subcommand(
      "sigma2", "adjacency graph of a representation");
  s2->add_option("file", file, "orders file, or - for stdin")->required();
  add_format(s2, true);

  auto* s3 = app.add_subcommand(
      "sigma3", "qualifying triples of a representation (the bounded faces)");
  s3->add_option("file", file, "orders file, or - for stdin")->required();
  add_format(s3, false);

  auto* realize_cmd = app.add_subcommand(
      "realize", "build a representation from a triangulation");
  realize_cmd->add_option("file", file, "graph file, or - for stdin")
      ->required();
  realize_cmd->add_flag("--verify", verify,
                        "recompute the adjacency graph and compare");
  add_format(realize_cmd, false);

  auto* embed_cmd = app.add_subcommand(
      "embed", "build the embedding of a representation's graph");
  embed_cmd->add_option("file", file, "orders file, or - for stdin")
      ->required();
  add_format(embed_cmd, true);

  auto* roundtrip = app.add_subcommand(
      "roundtrip", "realize a triangulation and compare the rebuilt graph");
  roundtrip->add_option("file", file, "graph file, or - for stdin")
      ->required();

  auto* oracle = app.add_subcommand("oracle", "brute-force tools");
  oracle->require_subcommand(1);
  auto* search = oracle->add_subcommand(
      "search", "exhaustive representation search for small graphs");
  search->add_option("file", file, "graph file, or - for stdin")->required();
  search->add_option("--cap", cap, "vertex cap for the search");
  add_format(search, false);
  auto* gen = oracle->add_subcommand(
      "gen", "seeded stacked triangulation corpus generator");
  gen->add_option("--n", gen_n, "vertex count")->required();
  gen->add_option("--seed", seed, "seed");
  add_format(gen, false);

  std::vector<const char*> argv;
  argv.push_back("trirep");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    std::ostringstream msg_out;
    int rc = app.exit(e, msg_out, err);
    out << msg_out.str();
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (check_rep->parsed()) return cmd_check_rep(file, format, in, out, err);
    if (s2->parsed()) return cmd_sigma2(file, format, in, out, err);
    if (s3->parsed()) return cmd_sigma3(file, format, in, out, err);
    if (realize_cmd->parsed())
      return cmd_realize(file, format, verify, in, out, err);
    if (embed_cmd->parsed()) return cmd_embed(file, format, in, out, err);
    if (roundtrip->parsed()) return cmd_roundtrip(file, verify, in, out, err);
    if (oracle->parsed()) {
      if (search->parsed())
        return cmd_oracle_search(file, format, cap, in, out, err);
      if (gen->parsed()) return cmd_oracle_gen(gen_n, seed, format, out);
    }
  } catch (const ParseError& e) {
    err << e.what() << "\n";
    return kUsage;
  } catch (const CapExceeded& e) {
    err << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    // Witness already printed for representation failures; print otherwise.
    const std::string what = e.what();
    if (what != "invalid representation") err << what << "\n";
    return kFailure;
  }
  return kUsage;
}

}  // namespace trirep
