#include "fcnlab/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>

namespace fcnlab {

Bitset Graph::closed_neighbor_set(Vertex v) const {
  Bitset b = rows_[v];
  b.set(v);
  return b;
}

std::size_t Graph::max_degree() const {
  std::size_t best = 0;
  for (const auto& nb : adjacency_) best = std::max(best, nb.size());
  return best;
}

std::size_t Graph::min_degree() const {
  if (adjacency_.empty()) return 0;
  std::size_t best = adjacency_.front().size();
  for (const auto& nb : adjacency_) best = std::min(best, nb.size());
  return best;
}

bool Graph::has_isolated_vertex() const {
  return std::any_of(adjacency_.begin(), adjacency_.end(),
                     [](const VertexList& nb) { return nb.empty(); });
}

std::string Graph::label(Vertex v) const {
  if (labeled_) return labels_[v];
  return std::to_string(v);
}

std::optional<Vertex> Graph::find(std::string_view label) const {
  if (!labeled_) {
    Vertex v = 0;
    for (char c : label) {
      if (c < '0' || c > '9') return std::nullopt;
      v = v * 10 + static_cast<Vertex>(c - '0');
    }
    if (label.empty() || v >= order()) return std::nullopt;
    return v;
  }
  auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
  if (it == labels_.end() || *it != label) return std::nullopt;
  return static_cast<Vertex>(it - labels_.begin());
}

Graph Graph::renamed(std::string name) const {
  Graph g = *this;
  g.name_ = std::move(name);
  return g;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph build_graph(std::size_t n, std::span<const Edge> edges,
                  std::optional<std::vector<std::string>> labels,
                  std::string name) {
  std::vector<Vertex> remap(n);
  std::iota(remap.begin(), remap.end(), Vertex{0});

  Graph g;
  g.name_ = std::move(name);
  if (labels) {
    if (labels->size() != n) {
      throw GraphError("label count " + std::to_string(labels->size()) +
                       " does not match vertex count " + std::to_string(n));
    }
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), Vertex{0});
    std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
      return (*labels)[a] < (*labels)[b];
    });
    for (std::size_t i = 1; i < n; ++i) {
      if ((*labels)[order[i]] == (*labels)[order[i - 1]]) {
        throw GraphError("duplicate label '" + (*labels)[order[i]] + "'");
      }
    }
    g.labels_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      remap[order[i]] = static_cast<Vertex>(i);
      g.labels_[i] = std::move((*labels)[order[i]]);
    }
    g.labeled_ = true;
  }

  std::vector<std::set<Vertex>> nbrs(n);
  for (auto [a, b] : edges) {
    if (a >= n || b >= n) {
      throw GraphError("edge (" + std::to_string(a) + ", " + std::to_string(b) +
                       ") has an endpoint outside 0.." +
                       std::to_string(n == 0 ? 0 : n - 1));
    }
    if (a == b) {
      throw GraphError("self-loop at vertex " + std::to_string(a));
    }
    nbrs[remap[a]].insert(remap[b]);
    nbrs[remap[b]].insert(remap[a]);
  }

  g.adjacency_.resize(n);
  g.rows_.assign(n, Bitset(n));
  std::size_t degree_sum = 0;
  for (std::size_t v = 0; v < n; ++v) {
    g.adjacency_[v].assign(nbrs[v].begin(), nbrs[v].end());
    for (Vertex u : g.adjacency_[v]) g.rows_[v].set(u);
    degree_sum += nbrs[v].size();
  }
  g.edge_count_ = degree_sum / 2;
  return g;
}

Graph build_labeled_graph(
    std::span<const std::string> labels,
    std::span<const std::pair<std::string, std::string>> edges,
    std::string name) {
  std::map<std::string, Vertex> index;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (!index.emplace(labels[i], static_cast<Vertex>(i)).second) {
      throw GraphError("duplicate label '" + labels[i] + "'");
    }
  }
  std::vector<Edge> idx_edges;
  idx_edges.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    auto ia = index.find(a);
    auto ib = index.find(b);
    if (ia == index.end()) throw GraphError("unknown vertex label '" + a + "'");
    if (ib == index.end()) throw GraphError("unknown vertex label '" + b + "'");
    idx_edges.emplace_back(ia->second, ib->second);
  }
  return build_graph(labels.size(), idx_edges,
                     std::vector<std::string>(labels.begin(), labels.end()),
                     std::move(name));
}

std::uint16_t DistanceMatrix::diameter() const {
  std::uint16_t best = 0;
  for (auto d : dist_) {
    if (d != kUnreachable) best = std::max(best, d);
  }
  return best;
}

bool DistanceMatrix::all_reachable() const {
  return std::none_of(dist_.begin(), dist_.end(),
                      [](std::uint16_t d) { return d == kUnreachable; });
}

DistanceMatrix all_pairs_distances(const Graph& g) {
  const std::size_t n = g.order();
  DistanceMatrix dm(n);
  std::vector<Vertex> queue(n);
  for (Vertex s = 0; s < n; ++s) {
    std::size_t head = 0, tail = 0;
    queue[tail++] = s;
    dm.at(s, s) = 0;
    while (head < tail) {
      Vertex u = queue[head++];
      const auto du = dm(s, u);
      for (Vertex w : g.neighbors(u)) {
        if (dm(s, w) == DistanceMatrix::kUnreachable) {
          dm.at(s, w) = static_cast<std::uint16_t>(du + 1);
          queue[tail++] = w;
        }
      }
    }
  }
  return dm;
}

std::size_t TwinPartition::twin_excess() const {
  std::size_t total = 0;
  for (const auto& c : classes) total += c.members.size() - 1;
  return total;
}

TwinPartition twin_partition(const Graph& g) {
  const std::size_t n = g.order();
  // Group by identical open rows, then by identical closed rows. Equal keys
  // are exactly the twin relations, so each group is a maximal class.
  std::map<Bitset, VertexList> open_groups, closed_groups;
  for (Vertex v = 0; v < n; ++v) {
    open_groups[g.neighbor_set(v)].push_back(v);
    closed_groups[g.closed_neighbor_set(v)].push_back(v);
  }
  TwinPartition tp;
  for (auto* groups : {&open_groups, &closed_groups}) {
    const TwinKind kind = groups == &open_groups ? TwinKind::Open : TwinKind::Closed;
    for (auto& [row, members] : *groups) {
      if (members.size() >= 2) tp.classes.push_back({kind, members});
    }
  }
  std::sort(tp.classes.begin(), tp.classes.end(),
            [](const TwinClass& a, const TwinClass& b) {
              return a.members.front() < b.members.front();
            });
  return tp;
}

std::vector<VertexList> connected_components(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<bool> seen(n, false);
  std::vector<VertexList> comps;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    VertexList comp{s};
    seen[s] = true;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (Vertex w : g.neighbors(comp[i])) {
        if (!seen[w]) {
          seen[w] = true;
          comp.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

bool is_connected(const Graph& g) {
  return g.order() <= 1 || connected_components(g).size() == 1;
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> subset) {
  VertexList keep(subset.begin(), subset.end());
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  std::vector<std::int64_t> pos(g.order(), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] >= g.order()) {
      throw GraphError("vertex " + std::to_string(keep[i]) +
                       " is not in a graph of order " + std::to_string(g.order()));
    }
    pos[keep[i]] = static_cast<std::int64_t>(i);
  }
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) {
    if (pos[u] >= 0 && pos[v] >= 0) {
      edges.emplace_back(static_cast<Vertex>(pos[u]), static_cast<Vertex>(pos[v]));
    }
  }
  std::optional<std::vector<std::string>> labels;
  if (g.has_labels()) labels = vertex_labels(g, keep);
  return build_graph(keep.size(), edges, std::move(labels), g.name());
}

Graph remove_vertices(const Graph& g, std::span<const Vertex> removed) {
  Bitset gone = to_bitset(g, removed);
  VertexList keep;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!gone.test(v)) keep.push_back(v);
  }
  return induced_subgraph(g, keep);
}

std::vector<std::size_t> degree_sequence(const Graph& g) {
  std::vector<std::size_t> seq;
  seq.reserve(g.order());
  for (Vertex v = 0; v < g.order(); ++v) seq.push_back(g.degree(v));
  std::sort(seq.begin(), seq.end());
  return seq;
}

bool is_isomorphism(const Graph& g, const Graph& h, std::span<const Vertex> mapping) {
  if (g.order() != h.order() || g.size() != h.size() ||
      mapping.size() != g.order()) {
    return false;
  }
  std::vector<bool> hit(h.order(), false);
  for (Vertex m : mapping) {
    if (m >= h.order() || hit[m]) return false;
    hit[m] = true;
  }
  // Equal edge counts plus an injective edge map give a bijection on edges.
  for (auto [u, v] : g.edges()) {
    if (!h.adjacent(mapping[u], mapping[v])) return false;
  }
  return true;
}

VertexList resolve_labels(const Graph& g, std::span<const std::string> labels) {
  VertexList out;
  out.reserve(labels.size());
  for (const auto& l : labels) {
    auto v = g.find(l);
    if (!v) throw GraphError("unknown vertex label '" + l + "'");
    out.push_back(*v);
  }
  return out;
}

std::vector<std::string> vertex_labels(const Graph& g, std::span<const Vertex> vs) {
  std::vector<std::string> out;
  out.reserve(vs.size());
  for (Vertex v : vs) out.push_back(g.label(v));
  return out;
}

Bitset to_bitset(const Graph& g, std::span<const Vertex> vs) {
  Bitset b(g.order());
  for (Vertex v : vs) {
    if (v >= g.order()) {
      throw GraphError("vertex " + std::to_string(v) +
                       " is not in a graph of order " + std::to_string(g.order()));
    }
    b.set(v);
  }
  return b;
}

VertexList to_list(const Bitset& bits) {
  VertexList out;
  for (auto i = bits.find_first(); i != Bitset::npos; i = bits.find_next(i)) {
    out.push_back(static_cast<Vertex>(i));
  }
  return out;
}

}  // namespace fcnlab
