#ifndef FCNLAB_RANDOM_GRAPH_HPP
#define FCNLAB_RANDOM_GRAPH_HPP

#include "fcnlab/graph.hpp"

#include <cstdint>
#include <random>

namespace fcnlab {

/// Erdos-Renyi style sampler with rejection filters. The order is drawn
/// uniformly from [n_min, n_max] and the edge probability uniformly from
/// [p_min, p_max], both per attempt.
struct RandomGraphSpec {
  std::size_t n_min = 1;
  std::size_t n_max = 8;
  double p_min = 0.5;
  double p_max = 0.5;
  std::uint64_t seed = 0;
  bool connected = false;
  bool isolate_free = false;
  std::size_t max_retries = 1000;
};

/// Deterministic stream: the same spec always yields the same sequence.
class RandomGraphSource {
 public:
  explicit RandomGraphSource(const RandomGraphSpec& spec);

  /// Next graph passing the filters. Throws std::runtime_error when
  /// max_retries consecutive draws are rejected.
  Graph next();

  std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi);
  double unit();

 private:
  RandomGraphSpec spec_;
  std::mt19937_64 rng_;
  std::uint64_t drawn_ = 0;
};

/// First graph of RandomGraphSource(spec).
Graph random_graph(const RandomGraphSpec& spec);

/// Independent per-instance seed (splitmix64 of base and index), so
/// instance i is the same no matter how instances are scheduled.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

}  // namespace fcnlab

#endif  // FCNLAB_RANDOM_GRAPH_HPP
