#ifndef FCNLAB_GRAPH_HPP
#define FCNLAB_GRAPH_HPP

#include <boost/dynamic_bitset.hpp>

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fcnlab {

using Vertex = std::uint32_t;
using VertexList = std::vector<Vertex>;
using Edge = std::pair<Vertex, Vertex>;
using Bitset = boost::dynamic_bitset<std::uint64_t>;

/// Raised when graph input violates a structural invariant (self-loop,
/// out-of-range endpoint, duplicate label, ...). The message names the
/// offending datum.
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Immutable simple undirected graph.
///
/// Vertices are the indices 0..n-1. When labels are present they are
/// distinct and the index order is the lexicographic order of the labels,
/// so two graphs built from the same labelled edge list are identical
/// regardless of input order.
class Graph {
 public:
  Graph() = default;

  std::size_t order() const { return adjacency_.size(); }
  std::size_t size() const { return edge_count_; }

  const VertexList& neighbors(Vertex v) const { return adjacency_[v]; }
  /// Open neighbourhood as a membership set.
  const Bitset& neighbor_set(Vertex v) const { return rows_[v]; }
  /// Closed neighbourhood N[v].
  Bitset closed_neighbor_set(Vertex v) const;
  bool adjacent(Vertex u, Vertex v) const { return rows_[u].test(v); }
  std::size_t degree(Vertex v) const { return adjacency_[v].size(); }
  std::size_t max_degree() const;
  std::size_t min_degree() const;
  bool has_isolated_vertex() const;

  bool has_labels() const { return labeled_; }
  const std::vector<std::string>& labels() const { return labels_; }
  /// Label of v, or its decimal index when the graph is unlabelled.
  std::string label(Vertex v) const;
  std::optional<Vertex> find(std::string_view label) const;

  const std::string& name() const { return name_; }
  Graph renamed(std::string name) const;

  /// All edges as (i, j) with i < j, sorted lexicographically.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.adjacency_ == b.adjacency_ && a.labeled_ == b.labeled_ &&
           a.labels_ == b.labels_ &&
           a.name_ == b.name_;
  }

 private:
  friend Graph build_graph(std::size_t, std::span<const Edge>,
                           std::optional<std::vector<std::string>>,
                           std::string);

  std::vector<VertexList> adjacency_;
  std::vector<Bitset> rows_;
  std::vector<std::string> labels_;
  std::string name_;
  std::size_t edge_count_ = 0;
  bool labeled_ = false;
};

/// Builds a graph on n vertices. Duplicate edges are merged. If labels are
/// given the vertices are re-indexed into lexicographic label order and the
/// edge endpoints (given in the caller's label order) are remapped.
Graph build_graph(std::size_t n, std::span<const Edge> edges,
                  std::optional<std::vector<std::string>> labels = std::nullopt,
                  std::string name = {});

/// Convenience overload keyed by labels rather than indices.
Graph build_labeled_graph(
    std::span<const std::string> labels,
    std::span<const std::pair<std::string, std::string>> edges,
    std::string name = {});

/// All-pairs hop distances.
class DistanceMatrix {
 public:
  static constexpr std::uint16_t kUnreachable =
      std::numeric_limits<std::uint16_t>::max();

  DistanceMatrix() = default;
  explicit DistanceMatrix(std::size_t n) : n_(n), dist_(n * n, kUnreachable) {}

  std::size_t order() const { return n_; }
  std::uint16_t operator()(Vertex u, Vertex v) const { return dist_[u * n_ + v]; }
  std::uint16_t& at(Vertex u, Vertex v) { return dist_[u * n_ + v]; }
  bool reachable(Vertex u, Vertex v) const {
    return (*this)(u, v) != kUnreachable;
  }
  /// Largest finite distance.
  std::uint16_t diameter() const;
  bool all_reachable() const;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint16_t> dist_;
};

/// BFS from every vertex.
DistanceMatrix all_pairs_distances(const Graph& g);

enum class TwinKind { Open, Closed };

struct TwinClass {
  TwinKind kind;
  VertexList members;  // sorted, size >= 2
};

/// Maximal open-twin (N(u) = N(v)) and closed-twin (N[u] = N[v]) classes.
/// A pair of distinct vertices can't be both, so the classes are disjoint.
/// Singletons are omitted.
struct TwinPartition {
  std::vector<TwinClass> classes;

  /// Sum of (|T| - 1) over all classes.
  std::size_t twin_excess() const;
};

TwinPartition twin_partition(const Graph& g);

bool is_connected(const Graph& g);
/// Connected components, each sorted, ordered by smallest member.
std::vector<VertexList> connected_components(const Graph& g);
/// Subgraph induced by `subset`, keeping labels (or, for unlabelled graphs,
/// renumbering in increasing vertex order).
Graph induced_subgraph(const Graph& g, std::span<const Vertex> subset);
/// g minus the given vertices.
Graph remove_vertices(const Graph& g, std::span<const Vertex> removed);
/// Degrees in non-decreasing order.
std::vector<std::size_t> degree_sequence(const Graph& g);

/// True iff `mapping` (indexed by vertex of g) is a bijection onto V(h) that
/// preserves adjacency in both directions.
bool is_isomorphism(const Graph& g, const Graph& h, std::span<const Vertex> mapping);

/// Maps a list of labels to vertices; throws GraphError on an unknown label.
VertexList resolve_labels(const Graph& g, std::span<const std::string> labels);
std::vector<std::string> vertex_labels(const Graph& g, std::span<const Vertex> vs);

Bitset to_bitset(const Graph& g, std::span<const Vertex> vs);
VertexList to_list(const Bitset& bits);

}  // namespace fcnlab

#endif  // FCNLAB_GRAPH_HPP
