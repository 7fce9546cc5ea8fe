#ifndef FCNLAB_VERIFIERS_HPP
#define FCNLAB_VERIFIERS_HPP

#include "fcnlab/graph.hpp"
#include "fcnlab/parameter.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fcnlab {

// Every predicate treats its vertex list as a set (duplicates are ignored)
// and throws GraphError for a vertex outside the graph. On a graph with at
// least one vertex the empty set satisfies none of the domination
// properties; the only property the empty set can have is resolving K1.

bool is_dominating(const Graph& g, std::span<const Vertex> d);
bool is_independent(const Graph& g, std::span<const Vertex> d);
/// Every vertex, members of d included, has a neighbour in d.
bool is_total_dominating(const Graph& g, std::span<const Vertex> d);
/// Dominating and G[d] connected. A single vertex counts as connected.
bool is_connected_dominating(const Graph& g, std::span<const Vertex> d);
/// |N[v] & d| >= 2 for every vertex v.
bool is_double_dominating(const Graph& g, std::span<const Vertex> d);
/// |N(v) & d| >= 2 for every vertex v outside d.
bool is_2_dominating(const Graph& g, std::span<const Vertex> d);

/// Distance codes pairwise distinct. Throws std::invalid_argument when g is
/// disconnected (codes are undefined there).
bool is_resolving(const Graph& g, std::span<const Vertex> r);
bool is_resolving(const Graph& g, const DistanceMatrix& dist, std::span<const Vertex> r);

/// (u, v) disjoint, u + v 2-dominating in g, and v double dominating in
/// g - u (vacuously true when u = V).
bool is_quasi_double_dominating_pair(const Graph& g, std::span<const Vertex> u,
                                     std::span<const Vertex> v);

/// Dispatches to the conjunction that defines `kind`. QDDOM is a property of
/// a pair, not a set, and is rejected with std::invalid_argument.
bool check(ParameterKind kind, const Graph& g, std::span<const Vertex> d);
bool check(ParameterKind kind, const Graph& g, const DistanceMatrix& dist,
           std::span<const Vertex> d);

/// First violated condition in human-readable form, or nullopt when d has the
/// property. Uses labels when the graph has them.
std::optional<std::string> find_violation(ParameterKind kind, const Graph& g,
                                          std::span<const Vertex> d);

using CodeVector = std::vector<std::uint16_t>;

/// Code of every vertex (in index order) with respect to the ordered
/// landmark list r. Throws std::invalid_argument on a disconnected graph.
std::vector<CodeVector> codes(const Graph& g, std::span<const Vertex> r);

/// A vertex set claimed to have property `kind` on the graph whose canonical
/// digest is `graph_digest`. For QDDOM `vertices` is U + V and `pair_u`
/// holds U.
struct Certificate {
  ParameterKind kind = ParameterKind::DOM;
  VertexList vertices;
  std::string graph_digest;
  VertexList pair_u;
};

Certificate make_certificate(ParameterKind kind, const Graph& g, VertexList vertices,
                             VertexList pair_u = {});

/// {"kind", "graph_digest", "size", "vertices"[, "u"]}, vertices by label
/// (or by index for unlabelled graphs), sorted by index.
std::string certificate_to_json(const Certificate& cert, const Graph& g);
/// Resolves vertex names against g. Does not check the digest.
Certificate parse_certificate(std::string_view text, const Graph& g);

struct CertificateCheck {
  bool ok = false;
  std::string message;
};

/// Digest match plus the kind's predicate.
CertificateCheck verify_certificate(const Certificate& cert, const Graph& g);

}  // namespace fcnlab

#endif  // FCNLAB_VERIFIERS_HPP
