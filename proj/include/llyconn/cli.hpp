#pragma once

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "llyconn/connectivity.hpp"
#include "llyconn/curvature.hpp"
#include "llyconn/families.hpp"
#include "llyconn/io.hpp"
#include "llyconn/theorems.hpp"

namespace llyconn {

enum ExitCode { kExitOk = 0, kExitCheckFailed = 1, kExitInputError = 2 };

namespace cli {

inline std::string read_input(const std::string& path, std::istream& in) {
  if (path == "-") return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  std::ifstream file(path);
  if (!file) throw std::invalid_argument("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

inline std::string tuple_label(int index, int base, int digits) {
  std::vector<int> coords(static_cast<std::size_t>(digits));
  for (int i = digits - 1; i >= 0; --i) {
    coords[i] = index % base;
    index /= base;
  }
  std::string label = "(";
  for (int i = 0; i < digits; ++i) label += (i ? "," : "") + std::to_string(coords[i]);
  return label + ")";
}

inline int to_int(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument(what + " must be an integer, got '" + s + "'");
  }
}

/// Builds the document for `generate <family> <params...>`.
inline GraphDocument generate(const std::string& family, const std::vector<std::string>& params, std::uint64_t seed) {
  auto need = [&](std::size_t count, const std::string& usage) {
    if (params.size() != count) throw std::invalid_argument("usage: generate " + family + " " + usage);
  };
  auto arg = [&](std::size_t i) { return to_int(params[i], "parameter " + std::to_string(i + 1)); };
  std::string tag = family;
  for (const auto& p : params) tag += "-" + p;

  if (family == "complete") { need(1, "<n>"); return make_document(complete(arg(0)), tag); }
  if (family == "cycle") { need(1, "<n>"); return make_document(cycle(arg(0)), tag); }
  if (family == "path") { need(1, "<n>"); return make_document(path(arg(0)), tag); }
  if (family == "kn-minus-matching") {
    need(2, "<n> <m>");
    return make_document(complete_minus_matching(arg(0), arg(1)), tag);
  }
  if (family == "join2kn") {
    need(2, "<n> <m>   (2K_n joined with m isolated vertices)");
    return make_document(two_kn_join(arg(0), empty_graph(arg(1))), tag);
  }
  if (family == "hamming") {
    need(2, "<p> <q>");
    auto doc = make_document(hamming(arg(0), arg(1)), tag);
    for (int v = 0; v < doc.n; ++v) doc.labels.push_back(tuple_label(v, arg(1), arg(0)));
    return doc;
  }
  if (family == "product") {
    need(2, "<a> <b>   (K_a x K_b)");
    auto doc = make_document(cartesian_product(complete(arg(0)), complete(arg(1))), tag);
    for (int v = 0; v < doc.n; ++v) doc.labels.push_back("(" + std::to_string(v / arg(1)) + "," + std::to_string(v % arg(1)) + ")");
    return doc;
  }
  if (family == "sharp-example") {
    need(2, "<n> <k>");
    auto example = sharp_example(arg(0), arg(1));
    auto doc = make_document(example.graph, tag);
    doc.marked = {{"x", example.x}, {"y", example.y}};
    return doc;
  }
  if (family == "random") {
    need(2, "<n> <probability> --seed <s>");
    return make_document(random_connected(arg(0), parse_rational(params[1]), seed), tag + "-seed-" + std::to_string(seed));
  }
  throw std::invalid_argument("unknown family '" + family + "'");
}

inline std::string curvature_table(const std::vector<CurvatureValue>& values, const std::string& format) {
  std::ostringstream out;
  if (format == "json") {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& c : values)
      j.push_back({{"x", c.x}, {"y", c.y}, {"kappa", rational_to_json(c.value)}, {"method", to_string(c.method)}});
    out << j.dump(2) << "\n";
  } else if (format == "csv") {
    out << "x,y,kappa,method\n";
    for (const auto& c : values) out << c.x << "," << c.y << "," << to_string(c.value) << "," << to_string(c.method) << "\n";
  } else if (format == "text") {
    for (const auto& c : values) out << c.x << " " << c.y << "  kappa = " << to_string(c.value) << "\n";
  } else {
    throw std::invalid_argument("unknown format '" + format + "'");
  }
  return out.str();
}

inline nlohmann::json witness_json(const ConnectivityWitness& w, bool vertex) {
  nlohmann::json j{{"value", w.value}, {"components", w.components}};
  if (vertex) {
    j["separator"] = w.separator;
  } else {
    j["cut"] = nlohmann::json::array();
    for (auto [u, v] : w.cut) j["cut"].push_back({u, v});
  }
  return j;
}

inline std::string connectivity_text(const Graph& g, bool vertex, bool edge, const std::string& format) {
  nlohmann::json j = nlohmann::json::object();
  if (vertex) j["vertex"] = witness_json(vertex_connectivity(g), true);
  if (edge) j["edge"] = witness_json(edge_connectivity(g), false);
  if (format == "json") return j.dump(2) + "\n";
  if (format != "text") throw std::invalid_argument("unknown format '" + format + "'");
  std::ostringstream out;
  auto list = [](const nlohmann::json& a) {
    std::string s;
    for (const auto& v : a) s += (s.empty() ? "" : " ") + v.dump();
    return s.empty() ? std::string("(none)") : s;
  };
  if (vertex) out << "vertex_connectivity " << j["vertex"]["value"] << "\nseparator " << list(j["vertex"]["separator"]) << "\n";
  if (edge) out << "edge_connectivity " << j["edge"]["value"] << "\ncut " << list(j["edge"]["cut"]) << "\n";
  return out.str();
}

inline bool any_failed(const std::vector<TheoremReport>& reports) {
  for (const auto& r : reports)
    if (!r.pass) return true;
  return false;
}

}  // namespace cli

/// Command-line entry point. Exit codes: 0 success with every non-vacuous
/// check passing, 1 when a check fails, 2 on input errors.
inline int cli_main(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Lin-Lu-Yau curvature and graph connectivity"};
  app.require_subcommand(1);

  std::string input = "-", format = "text", out_path;
  std::vector<int> pair;
  bool all_edges = false, only_vertex = false, only_edge = false;
  int scale = 0;
  std::uint64_t seed = 0;
  std::string family;
  std::vector<std::string> params, suite{"all"};

  auto* curvature = app.add_subcommand("curvature", "Exact curvature of vertex pairs");
  curvature->add_option("--input", input, "Graph file ('-' for stdin)");
  auto* pair_opt = curvature->add_option("--pair", pair, "Vertex pair u v")->expected(2);
  auto* edges_opt = curvature->add_flag("--all-edges", all_edges, "Every edge (default)");
  auto* scale_opt = curvature->add_option("--scale", scale, "Minimum over pairs at this distance");
  pair_opt->excludes(edges_opt)->excludes(scale_opt);
  edges_opt->excludes(scale_opt);
  curvature->add_option("--format", format)->check(CLI::IsMember({"text", "csv", "json"}));

  auto* connectivity = app.add_subcommand("connectivity", "Vertex and edge connectivity with witnesses");
  connectivity->add_option("--input", input, "Graph file ('-' for stdin)");
  connectivity->add_flag("--vertex", only_vertex, "Vertex connectivity only");
  connectivity->add_flag("--edge", only_edge, "Edge connectivity only");
  connectivity->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* generate = app.add_subcommand("generate", "Write a family member as an edge list");
  generate->add_option("family", family,
                       "complete | cycle | path | kn-minus-matching | join2kn | hamming | product | sharp-example | random")
      ->required();
  generate->add_option("params", params, "Family parameters");
  generate->add_option("--out", out_path, "Output file (default stdout)");
  generate->add_option("--seed", seed, "Seed for the random family");
  generate->add_option("--format", format, "edgelist or json")->check(CLI::IsMember({"text", "edgelist", "json"}));

  auto* verify = app.add_subcommand("verify", "Run theorem checks");
  verify->add_option("--input", input, "Graph file ('-' for stdin)");
  verify->add_option("--suite", suite, "all, or check ids")->expected(1, -1);
  verify->add_option("--format", format)->check(CLI::IsMember({"text", "csv", "json"}));

  auto* report = app.add_subcommand("report", "Curvature, connectivity and every check");
  report->add_option("--input", input, "Graph file ('-' for stdin)");
  report->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitInputError;
  }

  try {
    if (generate->parsed()) {
      auto doc = cli::generate(family, params, seed);
      std::string text = format == "json" ? document_to_json(doc).dump(2) + "\n" : emit_edge_list(doc);
      if (out_path.empty()) {
        out << text;
      } else {
        std::ofstream file(out_path);
        if (!file) throw std::invalid_argument("cannot write '" + out_path + "'");
        file << text;
      }
      return kExitOk;
    }

    auto doc = parse_graph_text(cli::read_input(input, in));
    if (doc.name.empty()) doc.name = input == "-" ? "stdin" : input;
    const Graph g = doc.graph();

    if (curvature->parsed()) {
      std::vector<CurvatureValue> values;
      if (!pair.empty()) {
        values.push_back(lly_curvature(g, pair[0], pair[1]));
      } else if (*scale_opt) {
        if (auto c = curvature_at_scale(g, scale)) values.push_back(*c);
      } else {
        values = edge_curvatures(g);
      }
      out << cli::curvature_table(values, format);
      return kExitOk;
    }
    if (connectivity->parsed()) {
      bool both = only_vertex == only_edge;
      out << cli::connectivity_text(g, both || only_vertex, both || only_edge, format);
      return kExitOk;
    }
    if (verify->parsed()) {
      auto reports = run_suite({doc.named()}, suite);
      out << emit_report(reports, format);
      return cli::any_failed(reports) ? kExitCheckFailed : kExitOk;
    }
    if (report->parsed()) {
      auto curvatures = edge_curvatures(g);
      auto reports = run_suite({doc.named()}, {"all"});
      if (format == "json") {
        nlohmann::json j;
        j["graph"] = document_to_json(doc);
        j["curvature"] = nlohmann::json::parse(cli::curvature_table(curvatures, "json"));
        j["connectivity"] = nlohmann::json::parse(cli::connectivity_text(g, true, true, "json"));
        j["checks"] = nlohmann::json::parse(emit_report(reports, "json"));
        out << j.dump(2) << "\n";
      } else {
        out << "graph " << doc.name << ": n = " << g.vertex_count() << ", m = " << g.edge_count()
            << ", min degree = " << min_degree(g) << "\n\n"
            << cli::curvature_table(curvatures, "text") << "\n"
            << cli::connectivity_text(g, true, true, "text") << "\n"
            << emit_report(reports, "text");
      }
      return cli::any_failed(reports) ? kExitCheckFailed : kExitOk;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace llyconn
