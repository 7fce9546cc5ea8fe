#ifndef FCNLAB_GRAPH_IO_HPP
#define FCNLAB_GRAPH_IO_HPP

#include "fcnlab/graph.hpp"

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

namespace fcnlab {

/// Malformed input text. line/column are 1-based; 0 when unknown.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

enum class GraphFormat { Json, Dot, Edges };

GraphFormat parse_graph_format(std::string_view name);

/// Canonical JSON: {"name", "n", "labels" (array or null), "edges"} with
/// sorted edges. Byte-for-byte deterministic.
std::string to_json(const Graph& g);
/// Graphviz. Labelled graphs use their labels as node names.
std::string to_dot(const Graph& g);
/// One "a b" line per edge in canonical order, then one line per isolated
/// vertex.
std::string to_edge_list(const Graph& g);
std::string export_graph(const Graph& g, GraphFormat format);

Graph parse_graph_json(std::string_view text);
Graph parse_edge_list(std::string_view text, std::string name = {});

/// FNV-1a 64 of the canonical JSON, as "fnv1a64:<16 hex digits>".
std::string graph_digest(const Graph& g);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);
/// Reads a graph, picking the parser from the extension (.json / .edges,
/// .txt); anything else is sniffed by its first non-space character.
Graph read_graph_file(const std::filesystem::path& path);

/// 1-based (line, column) of a byte offset.
std::pair<std::size_t, std::size_t> line_column(std::string_view text,
                                                std::size_t offset);

}  // namespace fcnlab

#endif  // FCNLAB_GRAPH_IO_HPP
