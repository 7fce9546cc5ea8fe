#include "fcnlab/solvers.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace fcnlab {

namespace {

using Clock = std::chrono::steady_clock;

/// Local search has no natural end when no set of the requested size
/// exists; this caps an otherwise unlimited budget.
constexpr std::uint64_t kMaxMoves = 200000;

class UnresolvedCounter {
 public:
  explicit UnresolvedCounter(const DistanceMatrix& dist) : dist_(dist), n_(dist.order()) {
    order_.resize(n_);
  }

  /// Number of vertex pairs with identical codes.
  std::uint64_t operator()(const VertexList& r) {
    for (std::size_t v = 0; v < n_; ++v) order_[v] = static_cast<Vertex>(v);
    auto less = [&](Vertex a, Vertex b) {
      for (Vertex x : r) {
        const auto da = dist_(a, x), db = dist_(b, x);
        if (da != db) return da < db;
      }
      return false;
    };
    std::sort(order_.begin(), order_.end(), less);
    std::uint64_t pairs = 0, run = 1;
    for (std::size_t i = 1; i < n_; ++i) {
      if (!less(order_[i - 1], order_[i])) {
        pairs += run++;
      } else {
        run = 1;
      }
    }
    return pairs;
  }

 private:
  const DistanceMatrix& dist_;
  std::size_t n_;
  VertexList order_;
};

}  // namespace

std::optional<VertexList> find_resolving_set(const Graph& g, std::size_t size,
                                             std::uint64_t seed, const Budget& budget) {
  const std::size_t n = g.order();
  if (!is_connected(g)) {
    throw std::invalid_argument("resolving sets need a connected graph");
  }
  if (size > n) return std::nullopt;
  if (n <= 1) return VertexList{};
  if (size == 0) return std::nullopt;

  const auto start = Clock::now();
  const DistanceMatrix dist = all_pairs_distances(g);
  UnresolvedCounter unresolved(dist);
  std::mt19937_64 rng(seed);

  // Seed with all but one vertex of every twin class, the rest at random.
  VertexList current;
  std::vector<bool> in(n, false);
  for (const auto& tc : twin_partition(g).classes) {
    VertexList members = tc.members;
    std::shuffle(members.begin(), members.end(), rng);
    for (std::size_t i = 1; i < members.size() && current.size() < size; ++i) {
      current.push_back(members[i]);
      in[members[i]] = true;
    }
  }
  VertexList outside;
  for (Vertex v = 0; v < n; ++v) {
    if (!in[v]) outside.push_back(v);
  }
  std::shuffle(outside.begin(), outside.end(), rng);
  while (current.size() < size) {
    in[outside.back()] = true;
    current.push_back(outside.back());
    outside.pop_back();
  }

  const std::uint64_t max_moves = std::min(budget.node_limit, kMaxMoves);
  std::uint64_t cost = unresolved(current);
  for (std::uint64_t move = 0; cost > 0 && move < max_moves; ++move) {
    if (!budget.exhaustive_required && Clock::now() - start > budget.wall_clock) break;
    outside.clear();
    for (Vertex v = 0; v < n; ++v) {
      if (!in[v]) outside.push_back(v);
    }
    // Best single swap; ties broken at random.
    std::uint64_t best = cost;
    std::vector<std::pair<std::size_t, Vertex>> best_moves;
    for (std::size_t i = 0; i < current.size(); ++i) {
      const Vertex old = current[i];
      for (Vertex x : outside) {
        current[i] = x;
        const std::uint64_t c = unresolved(current);
        if (c < best) {
          best = c;
          best_moves.clear();
        }
        if (c == best && c < cost) best_moves.emplace_back(i, x);
      }
      current[i] = old;
    }
    std::pair<std::size_t, Vertex> pick;
    if (!best_moves.empty()) {
      pick = best_moves[rng() % best_moves.size()];
    } else {
      // Plateau: random swap.
      pick = {rng() % current.size(), outside[rng() % outside.size()]};
    }
    in[current[pick.first]] = false;
    in[pick.second] = true;
    current[pick.first] = pick.second;
    cost = unresolved(current);
  }
  if (cost > 0) return std::nullopt;
  std::sort(current.begin(), current.end());
  if (!is_resolving(g, dist, current)) {
    throw std::logic_error("local search accepted a non-resolving set");
  }
  return current;
}

}  // namespace fcnlab
