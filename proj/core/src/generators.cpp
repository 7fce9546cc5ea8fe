#include "fcnlab/generators.hpp"

#include <algorithm>
#include <stdexcept>

namespace fcnlab {

namespace {

std::vector<std::string> padded_labels(std::size_t n) {
  std::size_t width = std::to_string(n == 0 ? 0 : n - 1).size();
  std::vector<std::string> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::string s = std::to_string(i);
    out.push_back(std::string(width - s.size(), '0') + s);
  }
  return out;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace

Graph cycle(std::size_t n) {
  require(n >= 3, "cycle needs n >= 3, got " + std::to_string(n));
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n));
  }
  return build_graph(n, edges, padded_labels(n), "C" + std::to_string(n));
}

Graph path(std::size_t n) {
  require(n >= 1, "path needs n >= 1");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(i + 1));
  }
  return build_graph(n, edges, padded_labels(n), "P" + std::to_string(n));
}

Graph complete(std::size_t n) {
  require(n >= 1, "complete graph needs n >= 1");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  }
  return build_graph(n, edges, padded_labels(n), "K" + std::to_string(n));
}

Graph hypercube(std::size_t dim) {
  require(dim <= 20, "hypercube dimension above 20 is not supported");
  const std::size_t n = std::size_t{1} << dim;
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t x = 0; x < n; ++x) {
    std::string s(dim, '0');
    for (std::size_t b = 0; b < dim; ++b) {
      if (x >> (dim - 1 - b) & 1) s[b] = '1';
    }
    labels.push_back(std::move(s));
  }
  std::vector<Edge> edges;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t b = 0; b < dim; ++b) {
      std::size_t y = x ^ (std::size_t{1} << b);
      if (x < y) edges.emplace_back(static_cast<Vertex>(x), static_cast<Vertex>(y));
    }
  }
  return build_graph(n, edges, std::move(labels), "Q" + std::to_string(dim));
}

std::string fcn_root_suffix(std::size_t level) {
  require(level >= 1, "FCN root suffix needs level >= 1");
  std::string r = "10";
  for (std::size_t i = 1; i < level; ++i) r += "01";
  return r;
}

Graph fcn(std::size_t level) {
  require(level <= 7, "FCN level above 7 is not supported");
  std::vector<std::string> labels{"00", "01", "11", "10"};
  std::vector<std::pair<std::string, std::string>> edges{
      {"00", "01"}, {"01", "11"}, {"11", "10"}, {"10", "00"}};

  for (std::size_t l = 1; l <= level; ++l) {
    std::vector<std::string> next_labels;
    std::vector<std::pair<std::string, std::string>> next_edges;
    next_labels.reserve(labels.size() * 4);
    next_edges.reserve(edges.size() * 4 + 4);
    for (const char* prefix : {"11", "01", "10", "00"}) {
      for (const auto& s : labels) next_labels.push_back(prefix + s);
      for (const auto& [a, b] : edges) next_edges.emplace_back(prefix + a, prefix + b);
    }
    const std::string r = fcn_root_suffix(l);
    next_edges.emplace_back("00" + r, "10" + r);
    next_edges.emplace_back("10" + r, "11" + r);
    next_edges.emplace_back("11" + r, "01" + r);
    next_edges.emplace_back("01" + r, "00" + r);
    labels = std::move(next_labels);
    edges = std::move(next_edges);
  }
  return build_labeled_graph(labels, edges, "FCN(" + std::to_string(level) + ")");
}

Vertex resolve_root(const Graph& omega, const RootSpec& root) {
  if (const auto* idx = std::get_if<Vertex>(&root)) {
    if (*idx >= omega.order()) {
      throw std::invalid_argument("root index " + std::to_string(*idx) +
                                  " is outside a graph of order " +
                                  std::to_string(omega.order()));
    }
    return *idx;
  }
  const auto& label = std::get<std::string>(root);
  auto v = omega.find(label);
  if (!v) throw std::invalid_argument("root label '" + label + "' is not a vertex");
  return *v;
}

Graph rooted_product(const Graph& gamma, const Graph& omega, const RootSpec& root) {
  require(omega.order() >= 1, "rooted product needs a non-empty Omega");
  const Vertex v = resolve_root(omega, root);
  const std::size_t n = gamma.order();
  const std::size_t m = omega.order();

  std::vector<std::string> labels;
  labels.reserve(n * m);
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = 0; j < m; ++j) labels.push_back(gamma.label(i) + ":" + omega.label(j));
  }
  auto id = [m](Vertex copy, Vertex w) { return static_cast<Vertex>(copy * m + w); };
  std::vector<Edge> edges;
  edges.reserve(n * omega.size() + gamma.size());
  for (Vertex i = 0; i < n; ++i) {
    for (auto [a, b] : omega.edges()) edges.emplace_back(id(i, a), id(i, b));
  }
  for (auto [a, b] : gamma.edges()) edges.emplace_back(id(a, v), id(b, v));

  std::string name = (gamma.name().empty() ? "G" : gamma.name()) + " o " +
                     (omega.name().empty() ? "H" : omega.name());
  return build_graph(n * m, edges, std::move(labels), std::move(name));
}

Graph concatenate_product_labels(const Graph& g) {
  std::vector<std::string> labels;
  labels.reserve(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    std::string l = g.label(v);
    if (auto pos = l.find(':'); pos != std::string::npos) l.erase(pos, 1);
    labels.push_back(std::move(l));
  }
  return build_graph(g.order(), g.edges(), std::move(labels), g.name());
}

}  // namespace fcnlab
