#include "fcnlab/graph_io.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>

namespace fcnlab {

using json = nlohmann::json;

ParseError::ParseError(const std::string& what, std::size_t line,
                       std::size_t column)
    : std::runtime_error(line == 0 ? what
                                   : "line " + std::to_string(line) + ", column " +
                                         std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

GraphFormat parse_graph_format(std::string_view name) {
  if (name == "json") return GraphFormat::Json;
  if (name == "dot") return GraphFormat::Dot;
  if (name == "edges") return GraphFormat::Edges;
  throw std::invalid_argument("unknown graph format '" + std::string(name) +
                              "' (expected json, dot or edges)");
}

std::pair<std::size_t, std::size_t> line_column(std::string_view text,
                                                std::size_t offset) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

namespace {

std::string quoted(const std::string& s) { return json(s).dump(); }

}  // namespace

std::string to_json(const Graph& g) {
  std::ostringstream os;
  os << "{\n  \"name\": " << quoted(g.name()) << ",\n  \"n\": " << g.order()
     << ",\n  \"labels\": ";
  if (g.has_labels()) {
    os << '[';
    for (std::size_t i = 0; i < g.order(); ++i) {
      if (i) os << ", ";
      os << quoted(g.labels()[i]);
    }
    os << ']';
  } else {
    os << "null";
  }
  os << ",\n  \"edges\": [";
  bool first = true;
  for (auto [u, v] : g.edges()) {
    os << (first ? "\n    " : ",\n    ") << '[' << u << ", " << v << ']';
    first = false;
  }
  os << (first ? "]" : "\n  ]") << "\n}\n";
  return os.str();
}

std::string to_dot(const Graph& g) {
  std::ostringstream os;
  os << "graph " << quoted(g.name().empty() ? std::string("G") : g.name()) << " {\n";
  for (Vertex v = 0; v < g.order(); ++v) os << "  " << quoted(g.label(v)) << ";\n";
  for (auto [u, v] : g.edges()) {
    os << "  " << quoted(g.label(u)) << " -- " << quoted(g.label(v)) << ";\n";
  }
  os << "}\n";
  return os.str();
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream os;
  for (auto [u, v] : g.edges()) os << g.label(u) << ' ' << g.label(v) << '\n';
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 0) os << g.label(v) << '\n';
  }
  return os.str();
}

std::string export_graph(const Graph& g, GraphFormat format) {
  switch (format) {
    case GraphFormat::Json:
      return to_json(g);
    case GraphFormat::Dot:
      return to_dot(g);
    case GraphFormat::Edges:
      return to_edge_list(g);
  }
  return {};
}

Graph parse_graph_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    auto [line, col] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
    throw ParseError("invalid JSON: " + std::string(e.what()), line, col);
  }
  auto fail = [](const std::string& msg) -> ParseError { return ParseError(msg, 0, 0); };
  if (!doc.is_object()) throw fail("graph JSON must be an object");
  if (!doc.contains("n") || !doc["n"].is_number_unsigned()) {
    throw fail("graph JSON needs a non-negative integer field \"n\"");
  }
  const auto n = doc["n"].get<std::size_t>();
  std::string name;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) throw fail("\"name\" must be a string");
    name = doc["name"].get<std::string>();
  }
  std::optional<std::vector<std::string>> labels;
  if (doc.contains("labels") && !doc["labels"].is_null()) {
    if (!doc["labels"].is_array()) throw fail("\"labels\" must be an array or null");
    labels.emplace();
    for (const auto& l : doc["labels"]) {
      if (!l.is_string()) throw fail("labels must be strings");
      labels->push_back(l.get<std::string>());
    }
  }
  std::vector<Edge> edges;
  if (doc.contains("edges")) {
    if (!doc["edges"].is_array()) throw fail("\"edges\" must be an array");
    std::size_t idx = 0;
    for (const auto& e : doc["edges"]) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() ||
          !e[1].is_number_unsigned()) {
        throw fail("edge #" + std::to_string(idx) +
                   " must be a pair of non-negative integers");
      }
      edges.emplace_back(e[0].get<Vertex>(), e[1].get<Vertex>());
      ++idx;
    }
  }
  // Edge indices refer to positions in the label array as given; build_graph
  // re-sorts into canonical order.
  return build_graph(n, edges, std::move(labels), std::move(name));
}

Graph parse_edge_list(std::string_view text, std::string name) {
  std::map<std::string, Vertex> index;
  std::vector<std::string> labels;
  std::vector<std::pair<std::string, std::string>> edges;
  auto intern = [&](const std::string& l) {
    if (index.emplace(l, static_cast<Vertex>(labels.size())).second) labels.push_back(l);
  };
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    std::string line(text.substr(start, end - start));
    start = end + 1;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream is(line);
    std::vector<std::string> tokens;
    for (std::string t; is >> t;) tokens.push_back(t);
    if (tokens.empty()) {
      if (end == text.size()) break;
      continue;
    }
    if (tokens.size() > 2) {
      auto col = line.find(tokens[2]) + 1;
      throw ParseError("expected one or two vertex labels, found " +
                           std::to_string(tokens.size()),
                       line_no, col);
    }
    for (const auto& t : tokens) intern(t);
    if (tokens.size() == 2) {
      if (tokens[0] == tokens[1]) {
        throw ParseError("self-loop at '" + tokens[0] + "'", line_no, 1);
      }
      edges.emplace_back(tokens[0], tokens[1]);
    }
    if (end == text.size()) break;
  }
  return build_labeled_graph(labels, edges, std::move(name));
}

std::string graph_digest(const Graph& g) {
  const std::string canonical = to_json(g);
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : canonical) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string("fnv1a64:") + buf;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
  out << text;
}

Graph read_graph_file(const std::filesystem::path& path) {
  const std::string text = read_text_file(path);
  const auto ext = path.extension().string();
  bool as_json = ext == ".json";
  if (ext != ".json" && ext != ".edges" && ext != ".txt") {
    auto pos = text.find_first_not_of(" \t\r\n");
    as_json = pos != std::string::npos && text[pos] == '{';
  }
  if (as_json) return parse_graph_json(text);
  return parse_edge_list(text, path.stem().string());
}

}  // namespace fcnlab
