#pragma once

#include <algorithm>
#include <iomanip>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "llyconn/graph.hpp"
#include "llyconn/rational.hpp"
#include "llyconn/theorems.hpp"

namespace llyconn {

/// Serialisable graph: dense vertex indices plus optional display labels and
/// named vertices (e.g. "x", "y").
struct GraphDocument {
  std::string name;
  int n = 0;
  std::vector<Edge> edges;
  std::vector<std::string> labels;  // empty, or one per vertex
  std::map<std::string, Vertex> marked;

  Graph graph() const { return Graph(n, edges); }

  std::optional<Edge> marked_edge() const {
    auto x = marked.find("x"), y = marked.find("y");
    if (x == marked.end() || y == marked.end()) return std::nullopt;
    return Edge{x->second, y->second};
  }

  NamedGraph named() const { return {name, graph(), marked_edge()}; }

  friend bool operator==(const GraphDocument&, const GraphDocument&) = default;
};

/// Input rejected while parsing, with the 1-based line when known.
class ParseError : public std::invalid_argument {
 public:
  ParseError(int line, const std::string& what)
      : std::invalid_argument(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

inline GraphDocument make_document(const Graph& g, std::string name = {}) {
  GraphDocument doc;
  doc.name = std::move(name);
  doc.n = g.vertex_count();
  doc.edges = g.edges();
  return doc;
}

namespace detail {

inline std::vector<std::string> split_words(std::string_view line) {
  std::vector<std::string> words;
  std::istringstream stream{std::string(line)};
  for (std::string w; stream >> w;) words.push_back(w);
  return words;
}

inline int parse_index(const std::string& token, int line) {
  if (token.empty() || token.size() > 9 || !std::all_of(token.begin(), token.end(), [](char c) { return c >= '0' && c <= '9'; }))
    throw ParseError(line, "malformed vertex index '" + token + "'");
  return std::stoi(token);
}

inline void validate(const GraphDocument& doc, const std::vector<int>& edge_lines) {
  if (doc.n < 0) throw ParseError(0, "negative vertex count");
  std::set<Edge> seen;
  for (std::size_t i = 0; i < doc.edges.size(); ++i) {
    auto [u, v] = doc.edges[i];
    int line = edge_lines.empty() ? 0 : edge_lines[i];
    if (u == v) throw ParseError(line, "self-loop at vertex " + std::to_string(u));
    if (u < 0 || v < 0 || u >= doc.n || v >= doc.n)
      throw ParseError(line, "vertex index outside 0.." + std::to_string(doc.n - 1));
    if (!seen.insert({std::min(u, v), std::max(u, v)}).second)
      throw ParseError(line, "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
  }
  if (!doc.labels.empty() && static_cast<int>(doc.labels.size()) != doc.n)
    throw ParseError(0, "label list must have one entry per vertex");
  for (const auto& [key, v] : doc.marked)
    if (v < 0 || v >= doc.n) throw ParseError(0, "marked vertex '" + key + "' out of range");
}

}  // namespace detail

/// Edge-list text: one "u v" pair per line, '#' starts a comment, blank lines
/// are ignored, and an optional "n <count>" line fixes the vertex count
/// (otherwise 1 + the largest index). Comment lines of the form
/// "#@name <text>", "#@mark <key> <vertex>" and "#@label <vertex> <text>"
/// carry document metadata.
inline GraphDocument parse_edge_list(std::string_view text) {
  GraphDocument doc;
  std::optional<int> declared;
  std::vector<int> edge_lines;
  std::map<int, std::string> labels;
  int max_index = -1, line_no = 0;
  std::istringstream stream{std::string(text)};
  for (std::string line; std::getline(stream, line);) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.rfind("#@", 0) == 0) {
      std::istringstream directive(line.substr(2));
      std::string keyword, first, rest;
      directive >> keyword >> first;
      std::getline(directive >> std::ws, rest);
      if (keyword == "name" && !first.empty()) {
        doc.name = rest.empty() ? first : first + " " + rest;
      } else if (keyword == "mark" && !first.empty() && !rest.empty()) {
        doc.marked[first] = detail::parse_index(rest, line_no);
      } else if (keyword == "label" && !first.empty() && !rest.empty()) {
        labels[detail::parse_index(first, line_no)] = rest;
      } else {
        throw ParseError(line_no, "malformed directive '" + line + "'");
      }
      continue;
    }
    auto words = detail::split_words(std::string_view(line).substr(0, line.find('#')));
    if (words.empty()) continue;
    if (words[0] == "n") {
      if (words.size() != 2) throw ParseError(line_no, "header must read 'n <count>'");
      if (declared) throw ParseError(line_no, "vertex count declared twice");
      declared = detail::parse_index(words[1], line_no);
      continue;
    }
    if (words.size() != 2) throw ParseError(line_no, "expected 'u v', got " + std::to_string(words.size()) + " tokens");
    int u = detail::parse_index(words[0], line_no), v = detail::parse_index(words[1], line_no);
    if (u == v) throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
    doc.edges.emplace_back(u, v);
    edge_lines.push_back(line_no);
    max_index = std::max({max_index, u, v});
  }
  doc.n = declared ? *declared : max_index + 1;
  if (!labels.empty()) {
    doc.labels.assign(static_cast<std::size_t>(std::max(doc.n, 0)), "");
    for (auto& [v, label] : labels) {
      if (v >= doc.n) throw ParseError(0, "label for vertex " + std::to_string(v) + " out of range");
      doc.labels[v] = label;
    }
  }
  detail::validate(doc, edge_lines);
  return doc;
}

inline std::string emit_edge_list(const GraphDocument& doc) {
  std::ostringstream out;
  if (!doc.name.empty()) out << "#@name " << doc.name << "\n";
  for (const auto& [key, v] : doc.marked) out << "#@mark " << key << " " << v << "\n";
  for (std::size_t v = 0; v < doc.labels.size(); ++v)
    if (!doc.labels[v].empty()) out << "#@label " << v << " " << doc.labels[v] << "\n";
  out << "n " << doc.n << "\n";
  for (auto [u, v] : doc.edges) out << u << " " << v << "\n";
  return out.str();
}

inline nlohmann::json document_to_json(const GraphDocument& doc) {
  nlohmann::json j;
  j["n"] = doc.n;
  j["edges"] = nlohmann::json::array();
  for (auto [u, v] : doc.edges) j["edges"].push_back({u, v});
  if (!doc.name.empty()) j["name"] = doc.name;
  if (!doc.labels.empty()) j["labels"] = doc.labels;
  if (!doc.marked.empty()) j["marked"] = doc.marked;
  return j;
}

inline GraphDocument document_from_json(const nlohmann::json& j) {
  try {
    GraphDocument doc;
    doc.n = j.at("n").get<int>();
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw ParseError(0, "each edge must be a two-element array");
      doc.edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    if (j.contains("name")) doc.name = j["name"].get<std::string>();
    if (j.contains("labels")) doc.labels = j["labels"].get<std::vector<std::string>>();
    if (j.contains("marked")) doc.marked = j["marked"].get<std::map<std::string, Vertex>>();
    detail::validate(doc, {});
    return doc;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, std::string("malformed graph document: ") + e.what());
  }
}

/// Reads either a JSON GraphDocument (text starting with '{') or an edge list.
inline GraphDocument parse_graph_text(std::string_view text) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(0, std::string("malformed JSON: ") + e.what());
    }
    return document_from_json(j);
  }
  return parse_edge_list(text);
}

/// {"num": n, "den": d}; components beyond 64 bits are written as strings.
inline nlohmann::json rational_to_json(const Rational& r) {
  auto part = [](const BigInt& v) -> nlohmann::json {
    try {
      return to_int64(v);
    } catch (const std::overflow_error&) {
      return v.str();
    }
  };
  return {{"num", part(numerator(r))}, {"den", part(denominator(r))}};
}

inline Rational rational_from_json(const nlohmann::json& j) {
  auto part = [](const nlohmann::json& v) {
    return v.is_string() ? BigInt(v.get<std::string>()) : BigInt(v.get<std::int64_t>());
  };
  BigInt den = part(j.at("den"));
  if (den == 0) throw ParseError(0, "rational with zero denominator");
  return Rational(part(j.at("num")), den);
}

inline nlohmann::json report_to_json(const TheoremReport& r) {
  return {{"id", r.id},
          {"graph", r.graph},
          {"hypotheses_met", r.hypotheses_met},
          {"vacuous", r.vacuous},
          {"relation", to_string(r.relation)},
          {"lhs", rational_to_json(r.lhs)},
          {"rhs", rational_to_json(r.rhs)},
          {"margin", rational_to_json(r.margin)},
          {"pass", r.pass},
          {"witnesses", r.witnesses}};
}

inline TheoremReport report_from_json(const nlohmann::json& j) {
  TheoremReport r;
  r.id = j.at("id").get<std::string>();
  r.graph = j.at("graph").get<std::string>();
  r.hypotheses_met = j.at("hypotheses_met").get<bool>();
  r.vacuous = j.at("vacuous").get<bool>();
  r.relation = j.at("relation").get<std::string>() == "eq" ? Relation::Equal : Relation::AtLeast;
  r.lhs = rational_from_json(j.at("lhs"));
  r.rhs = rational_from_json(j.at("rhs"));
  r.margin = rational_from_json(j.at("margin"));
  r.pass = j.at("pass").get<bool>();
  r.witnesses = j.at("witnesses").get<std::map<std::string, std::string>>();
  return r;
}

inline std::vector<TheoremReport> parse_reports_json(std::string_view text) {
  try {
    std::vector<TheoremReport> out;
    for (const auto& j : nlohmann::json::parse(text)) out.push_back(report_from_json(j));
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, std::string("malformed report JSON: ") + e.what());
  }
}

namespace detail {

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) quoted += c == '"' ? std::string("\"\"") : std::string(1, c);
  return quoted + "\"";
}

inline std::string status(const TheoremReport& r) { return !r.pass ? "FAIL" : r.vacuous ? "VACUOUS" : "PASS"; }

}  // namespace detail

/// Formats: "json" (array of records, rationals as {"num","den"}), "csv"
/// (id,graph,pass,vacuous,lhs,rhs,margin; rationals as "num/den", or "num"
/// for integers) and "text" (aligned table).
inline std::string emit_report(const std::vector<TheoremReport>& reports, std::string_view format) {
  std::ostringstream out;
  if (format == "json") {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& r : reports) j.push_back(report_to_json(r));
    out << j.dump(2) << "\n";
  } else if (format == "csv") {
    out << "id,graph,pass,vacuous,lhs,rhs,margin\n";
    for (const auto& r : reports)
      out << r.id << "," << detail::csv_field(r.graph) << "," << (r.pass ? "true" : "false") << ","
          << (r.vacuous ? "true" : "false") << "," << to_string(r.lhs) << "," << to_string(r.rhs) << ","
          << to_string(r.margin) << "\n";
  } else if (format == "text") {
    std::vector<std::vector<std::string>> rows{{"status", "check", "graph", "lhs", "rel", "rhs", "margin"}};
    for (const auto& r : reports)
      rows.push_back({detail::status(r), r.id, r.graph, to_string(r.lhs), r.relation == Relation::Equal ? "==" : ">=",
                      to_string(r.rhs), to_string(r.margin)});
    std::vector<std::size_t> width(rows[0].size(), 0);
    for (const auto& row : rows)
      for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
    for (const auto& row : rows) {
      std::string line;
      for (std::size_t c = 0; c < row.size(); ++c) {
        std::string cell = row[c];
        if (c + 1 < row.size()) cell.resize(width[c] + 2, ' ');
        line += cell;
      }
      out << line << "\n";
    }
  } else {
    throw std::invalid_argument("unknown report format '" + std::string(format) + "'");
  }
  return out.str();
}

}  // namespace llyconn
