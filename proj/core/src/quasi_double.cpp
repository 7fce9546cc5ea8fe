#include "fcnlab/solvers.hpp"

#include <bit>
#include <stdexcept>

namespace fcnlab {

namespace {

using Mask = std::uint64_t;
using Clock = std::chrono::steady_clock;

struct Exhausted {};

class QuasiDoubleSearch {
 public:
  QuasiDoubleSearch(const Graph& g, const Budget& budget, Clock::time_point start)
      : n_(static_cast<unsigned>(g.order())), budget_(budget), start_(start) {
    open_.resize(n_);
    for (unsigned v = 0; v < n_; ++v) {
      for (Vertex w : g.neighbors(v)) open_[v] |= Mask{1} << w;
    }
  }

  std::uint64_t nodes() const { return nodes_; }

  /// Smallest admissible (U, V) with |U| + |V| = t, if any.
  std::optional<std::pair<Mask, Mask>> at_size(unsigned t) {
    std::optional<std::pair<Mask, Mask>> found;
    combine(0, t, 0, found);
    return found;
  }

 private:
  void tick() {
    ++nodes_;
    if (budget_.exhaustive_required) return;
    if (nodes_ > budget_.node_limit) throw Exhausted{};
    if ((nodes_ & 1023U) == 0 && Clock::now() - start_ > budget_.wall_clock) throw Exhausted{};
  }

  bool two_dominating(Mask s) const {
    for (unsigned w = 0; w < n_; ++w) {
      if ((s >> w) & 1U) continue;
      if (std::popcount(open_[w] & s) < 2) return false;
    }
    return true;
  }

  bool admissible(Mask u, Mask v) const {
    for (unsigned w = 0; w < n_; ++w) {
      if ((u >> w) & 1U) continue;
      const Mask closed = open_[w] | (Mask{1} << w);
      if (std::popcount(closed & v) < 2) return false;
    }
    return true;
  }

  // Subsets S of size t in lexicographic order; for each 2-dominating S the
  // split into U and V is enumerated with U growing from empty.
  void combine(unsigned from, unsigned left, Mask s,
               std::optional<std::pair<Mask, Mask>>& found) {
    if (found) return;
    tick();
    if (left == 0) {
      if (!two_dominating(s)) return;
      // Submasks of s in increasing numeric order of U.
      Mask u = 0;
      while (true) {
        tick();
        if (admissible(u, s & ~u)) {
          found = std::make_pair(u, s & ~u);
          return;
        }
        if (u == s) break;
        u = (u - s) & s;
      }
      return;
    }
    for (unsigned x = from; x + left <= n_; ++x) {
      combine(x + 1, left - 1, s | (Mask{1} << x), found);
      if (found) return;
    }
  }

  unsigned n_;
  Budget budget_;
  Clock::time_point start_;
  std::vector<Mask> open_;
  std::uint64_t nodes_ = 0;
};

VertexList mask_to_list(Mask m) {
  VertexList out;
  while (m) {
    out.push_back(static_cast<Vertex>(std::countr_zero(m)));
    m &= m - 1;
  }
  return out;
}

}  // namespace

SolverResult quasi_double_domination_number(const Graph& g, const Budget& budget) {
  const auto start = Clock::now();
  const std::size_t n = g.order();
  if (budget.exhaustive_required && n > kExhaustiveCeiling) {
    throw std::invalid_argument("exhaustive mode is limited to " +
                                std::to_string(kExhaustiveCeiling) + " vertices; graph has " +
                                std::to_string(n));
  }
  SolverResult res;
  res.kind = ParameterKind::QDDOM;

  // U = V(g), V = {} always qualifies, so n is an upper bound.
  VertexList all(n);
  for (Vertex v = 0; v < n; ++v) all[v] = v;
  auto fallback = [&](std::size_t lower) {
    res.status = SolveStatus::BoundsOnly;
    res.lower = lower;
    res.upper = n;
    res.witness = make_certificate(ParameterKind::QDDOM, g, all, all);
    res.elapsed = Clock::now() - start;
    return res;
  };

  // U + V is 2-dominating, so gamma_2 bounds from below.
  std::size_t lower = 0;
  {
    const SolverResult two = min_param(g, ParameterKind::TWODOM, budget);
    lower = two.lower;
    res.nodes_explored += two.nodes_explored;
  }
  if (n > 64) return fallback(lower);

  QuasiDoubleSearch search(g, budget, start);
  try {
    for (std::size_t t = lower; t <= n; ++t) {
      if (auto hit = search.at_size(static_cast<unsigned>(t))) {
        res.status = SolveStatus::Exact;
        res.value = res.lower = t;
        res.upper = t;
        const Mask both = hit->first | hit->second;
        res.witness = make_certificate(ParameterKind::QDDOM, g, mask_to_list(both),
                                       mask_to_list(hit->first));
        res.nodes_explored += search.nodes();
        res.elapsed = Clock::now() - start;
        return res;
      }
      lower = t + 1;
    }
  } catch (const Exhausted&) {
    res.nodes_explored += search.nodes();
    return fallback(lower);
  }
  throw std::logic_error("quasi-double search missed the trivial pair");
}

}  // namespace fcnlab
