#include "fcnlab/random_graph.hpp"

#include <stdexcept>
#include <string>

namespace fcnlab {

RandomGraphSource::RandomGraphSource(const RandomGraphSpec& spec) : spec_(spec), rng_(spec.seed) {
  if (spec.n_min > spec.n_max) throw std::invalid_argument("random graph: n_min > n_max");
  if (!(spec.p_min >= 0.0 && spec.p_min <= spec.p_max && spec.p_max <= 1.0)) {
    throw std::invalid_argument("random graph: need 0 <= p_min <= p_max <= 1");
  }
}

// The standard distributions are implementation-defined, so draws are
// mapped by hand to keep samples identical across standard libraries.
std::uint64_t RandomGraphSource::uniform(std::uint64_t lo, std::uint64_t hi) {
  const std::uint64_t span = hi - lo + 1;
  if (span == 0) return rng_();
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t x;
  do {
    x = rng_();
  } while (x >= limit);
  return lo + x % span;
}

double RandomGraphSource::unit() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }

Graph RandomGraphSource::next() {
  for (std::size_t attempt = 0; attempt < spec_.max_retries; ++attempt) {
    const auto n = static_cast<std::size_t>(uniform(spec_.n_min, spec_.n_max));
    const double p = spec_.p_min + (spec_.p_max - spec_.p_min) * unit();
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        if (unit() < p) edges.push_back({u, v});
      }
    }
    Graph g = build_graph(n, edges, std::nullopt,
                          "random(seed=" + std::to_string(spec_.seed) + ",#" +
                              std::to_string(drawn_) + ")");
    if (spec_.connected && !is_connected(g)) continue;
    if (spec_.isolate_free && (n == 0 || g.has_isolated_vertex())) continue;
    ++drawn_;
    return g;
  }
  throw std::runtime_error("random graph: filters rejected " +
                           std::to_string(spec_.max_retries) + " consecutive samples");
}

Graph random_graph(const RandomGraphSpec& spec) { return RandomGraphSource(spec).next(); }

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
  std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace fcnlab
