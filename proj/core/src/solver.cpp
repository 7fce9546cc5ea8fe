#include "fcnlab/solvers.hpp"

#include "bits.hpp"
#include "fcnlab/graph_io.hpp"

#include <json.hpp>

#include <algorithm>
#include <climits>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace fcnlab {

std::string_view status_name(SolveStatus s) {
  switch (s) {
    case SolveStatus::Exact: return "Exact";
    case SolveStatus::BoundsOnly: return "BoundsOnly";
    case SolveStatus::Infeasible: return "Infeasible";
  }
  return "?";
}

std::size_t dim_lower_bound_twins(const Graph& g) {
  return twin_partition(g).twin_excess();
}

namespace {

using detail::Bits;
using Clock = std::chrono::steady_clock;

struct BudgetExhausted {};

/// How a vertex is covered by the set under construction.
enum class Cover {
  None,
  Closed1,  // |N[v] & D| >= 1
  Closed2,  // |N[v] & D| >= 2
  Open1,    // |N(v) & D| >= 1
  Two,      // v in D, or |N(v) & D| >= 2
};

struct KindSpec {
  Cover cover = Cover::None;
  bool resolve = false;
  bool independent = false;
  bool connected = false;
};

KindSpec spec_for(ParameterKind k) {
  switch (k) {
    case ParameterKind::DOM: return {Cover::Closed1, false, false, false};
    case ParameterKind::IDOM: return {Cover::Closed1, false, true, false};
    case ParameterKind::TDOM: return {Cover::Open1, false, false, false};
    case ParameterKind::CDOM: return {Cover::Closed1, false, false, true};
    case ParameterKind::DDOM: return {Cover::Closed2, false, false, false};
    case ParameterKind::TWODOM: return {Cover::Two, false, false, false};
    case ParameterKind::DIM: return {Cover::None, true, false, false};
    case ParameterKind::RDOM: return {Cover::Closed1, true, false, false};
    case ParameterKind::RIDOM: return {Cover::Closed1, true, true, false};
    case ParameterKind::RTDOM: return {Cover::Open1, true, false, false};
    case ParameterKind::RCDOM: return {Cover::Closed1, true, false, true};
    case ParameterKind::QDDOM: break;
  }
  throw std::logic_error("no set search for QDDOM");
}

/// Articulation points (iterative Tarjan).
VertexList cut_vertices(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<int> disc(n, -1), low(n, 0), parent(n, -1);
  std::vector<std::size_t> child_count(n, 0), next_edge(n, 0);
  std::vector<bool> cut(n, false);
  int timer = 0;
  for (Vertex root = 0; root < n; ++root) {
    if (disc[root] != -1) continue;
    std::vector<Vertex> stack{root};
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
      Vertex u = stack.back();
      if (next_edge[u] < g.degree(u)) {
        Vertex w = g.neighbors(u)[next_edge[u]++];
        if (disc[w] == -1) {
          parent[w] = static_cast<int>(u);
          ++child_count[u];
          disc[w] = low[w] = timer++;
          stack.push_back(w);
        } else if (static_cast<int>(w) != parent[u]) {
          low[u] = std::min(low[u], disc[w]);
        }
      } else {
        stack.pop_back();
        if (parent[u] >= 0) {
          auto p = static_cast<Vertex>(parent[u]);
          low[p] = std::min(low[p], low[u]);
          if (parent[p] >= 0 && low[u] >= disc[p]) cut[p] = true;
        }
      }
    }
    if (child_count[root] >= 2) cut[root] = true;
  }
  VertexList out;
  for (Vertex v = 0; v < n; ++v) {
    if (cut[v]) out.push_back(v);
  }
  return out;
}

template <std::size_t W>
class Engine {
 public:
  using Set = Bits<W>;
  static constexpr unsigned kCap = Set::kCapacity;

  struct State {
    Set d;
    Set excl;
    unsigned size = 0;
    std::array<std::uint8_t, kCap> cnt{};
    std::array<std::uint16_t, kCap> cls{};
  };

  enum class Outcome { Prune, Satisfied, Branch };

  struct NodeInfo {
    Outcome outcome = Outcome::Prune;
    Set cands;
    bool connectivity_only = false;
    Set unsat;
  };

  Engine(const Graph& g, KindSpec spec, const Budget& budget, Clock::time_point start)
      : g_(g), n_(static_cast<unsigned>(g.order())), spec_(spec), budget_(budget),
        start_(start) {
    open_.resize(n_);
    closed_.resize(n_);
    for (unsigned v = 0; v < n_; ++v) {
      valid_.set(v);
      for (Vertex w : g.neighbors(v)) open_[v].set(w);
      closed_[v] = open_[v];
      closed_[v].set(v);
    }
    order_.resize(n_);
    std::iota(order_.begin(), order_.end(), 0U);
    std::stable_sort(order_.begin(), order_.end(), [&](unsigned a, unsigned b) {
      return g.degree(a) > g.degree(b);
    });

    if (spec_.resolve || spec_.connected) {
      const DistanceMatrix dm = all_pairs_distances(g);
      dist_.resize(static_cast<std::size_t>(n_) * n_);
      for (unsigned u = 0; u < n_; ++u) {
        for (unsigned v = 0; v < n_; ++v) dist_[u * n_ + v] = dm(u, v);
      }
      diam_ = dm.diameter();
    }
    if (spec_.resolve) {
      diff_.resize(static_cast<std::size_t>(n_) * (n_ > 0 ? n_ - 1 : 0) / 2);
      for (unsigned u = 0; u < n_; ++u) {
        for (unsigned w = u + 1; w < n_; ++w) {
          Set& s = diff_[pair_index(u, w)];
          for (unsigned r = 0; r < n_; ++r) {
            if (dist(u, r) != dist(w, r)) s.set(r);
          }
        }
      }
      for (const auto& tc : twin_partition(g).classes) {
        Set s;
        for (Vertex v : tc.members) s.set(v);
        twins_.emplace_back(s, static_cast<unsigned>(tc.members.size()));
      }
      key_gen_.assign(static_cast<std::size_t>(n_) * n_ + 1, 0);
      key_map_.assign(static_cast<std::size_t>(n_) * n_ + 1, 0);
    }
    if (spec_.connected && n_ >= 3 && is_connected(g)) {
      for (Vertex v : cut_vertices(g)) forced_.set(v);
    }
  }

  std::uint64_t nodes() const { return nodes_; }
  const Set& solution() const { return solution_; }

  State root() {
    State s;
    forced_.for_each([&](unsigned v) { include(s, v); });
    return s;
  }

  /// Is there a feasible set of size <= k extending s?
  bool search(const State& s, unsigned k) {
    tick();
    if (s.size > k) return false;
    NodeInfo info = evaluate(s, k);
    if (info.outcome == Outcome::Prune) return false;
    if (info.outcome == Outcome::Satisfied) {
      solution_ = s.d;
      return true;
    }
    State base = s;
    for (unsigned v : order_) {
      if (!info.cands.test(v) || base.excl.test(v)) continue;
      State child = base;
      include(child, v);
      if (search(child, k)) return true;
      base.excl.set(v);
    }
    return false;
  }

  /// Greedy completion from the root; nullopt if it gets stuck.
  std::optional<Set> greedy() {
    State s = root();
    while (true) {
      NodeInfo info = evaluate(s, n_);
      if (info.outcome == Outcome::Satisfied) return s.d;
      if (info.outcome == Outcome::Prune) return std::nullopt;
      const Set avail = available(s);
      long best_score = 0;
      int best = -1;
      if (info.connectivity_only) {
        // Step towards the nearest vertex of another component.
        const Set comp = component_of(s.d, static_cast<unsigned>(s.d.first()));
        const Set others = minus(s.d, comp);
        info.cands.for_each([&](unsigned x) {
          unsigned nearest = UINT_MAX;
          others.for_each([&](unsigned u) { nearest = std::min<unsigned>(nearest, dist(x, u)); });
          long score = -static_cast<long>(nearest);
          if (best < 0 || score > best_score) {
            best = static_cast<int>(x);
            best_score = score;
          }
        });
      } else {
        avail.for_each([&](unsigned x) {
          long score = static_cast<long>(reduction(s, info.unsat, x)) +
                       (spec_.resolve ? static_cast<long>(split_pairs(s, x)) : 0);
          if (score > best_score) {
            best_score = score;
            best = static_cast<int>(x);
          }
        });
      }
      if (best < 0) return std::nullopt;
      include(s, static_cast<unsigned>(best));
    }
  }

  std::uint16_t dist(unsigned u, unsigned v) const { return dist_[u * n_ + v]; }

  void include(State& s, unsigned x) {
    s.d.set(x);
    ++s.size;
    if (spec_.cover != Cover::None) {
      cover_in(x).for_each([&](unsigned v) {
        if (s.cnt[v] < 2) ++s.cnt[v];
      });
    }
    if (spec_.independent) s.excl |= open_[x];
    if (spec_.resolve) refine(s, x);
  }

 private:
  void tick() {
    ++nodes_;
    if (budget_.exhaustive_required) return;
    if (nodes_ > budget_.node_limit) throw BudgetExhausted{};
    if ((nodes_ & 255U) == 0 && Clock::now() - start_ > budget_.wall_clock) {
      throw BudgetExhausted{};
    }
  }

  std::size_t pair_index(unsigned u, unsigned w) const {
    // u < w; row-major upper triangle.
    return static_cast<std::size_t>(u) * (2 * n_ - u - 1) / 2 + (w - u - 1);
  }

  const Set& cover_in(unsigned x) const {
    return spec_.cover == Cover::Closed1 || spec_.cover == Cover::Closed2 ? closed_[x]
                                                                          : open_[x];
  }
  const Set& cover_set(unsigned v) const {
    return spec_.cover == Cover::Open1 ? open_[v] : closed_[v];
  }

  unsigned residual(const State& s, unsigned v) const {
    const unsigned c = s.cnt[v];
    switch (spec_.cover) {
      case Cover::None: return 0;
      case Cover::Closed1:
      case Cover::Open1: return c >= 1 ? 0 : 1;
      case Cover::Closed2: return c >= 2 ? 0 : 2 - c;
      case Cover::Two: return s.d.test(v) || c >= 2 ? 0 : 2 - c;
    }
    return 0;
  }

  Set available(const State& s) const { return minus(minus(valid_, s.d), s.excl); }

  unsigned reduction(const State& s, const Set& unsat, unsigned x) const {
    if (spec_.cover == Cover::None) return 0;
    unsigned red = (cover_in(x) & unsat).count();
    if (spec_.cover == Cover::Two && unsat.test(x)) red += residual(s, x);
    return red;
  }

  void refine(State& s, unsigned x) {
    ++gen_;
    std::uint16_t next = 0;
    for (unsigned v = 0; v < n_; ++v) {
      const std::size_t key = static_cast<std::size_t>(s.cls[v]) * n_ + dist(v, x);
      if (key_gen_[key] != gen_) {
        key_gen_[key] = gen_;
        key_map_[key] = next++;
      }
      s.cls[v] = key_map_[key];
    }
  }

  /// Pairs that share a code now but would be told apart by adding x.
  std::uint64_t split_pairs(const State& s, unsigned x) {
    ++gen_;
    std::uint64_t same_before = 0, same_after = 0;
    std::vector<unsigned> class_size(n_, 0);
    for (unsigned v = 0; v < n_; ++v) same_before += class_size[s.cls[v]]++;
    for (unsigned v = 0; v < n_; ++v) {
      const std::size_t key = static_cast<std::size_t>(s.cls[v]) * n_ + dist(v, x);
      if (key_gen_[key] != gen_) {
        key_gen_[key] = gen_;
        key_map_[key] = 0;
      }
      same_after += key_map_[key]++;
    }
    return same_before - same_after;
  }

  Set component_of(const Set& within, unsigned start) const {
    Set comp, frontier;
    comp.set(start);
    frontier.set(start);
    while (frontier.any()) {
      Set next;
      frontier.for_each([&](unsigned v) { next |= open_[v]; });
      next = minus(next & within, comp);
      comp |= next;
      frontier = next;
    }
    return comp;
  }

  NodeInfo evaluate(const State& s, unsigned k) {
    NodeInfo info;
    const unsigned r = k - s.size;
    const Set avail = available(s);
    unsigned best_count = UINT_MAX;
    bool demand = false;

    if (spec_.cover != Cover::None) {
      unsigned total = 0;
      for (unsigned v = 0; v < n_; ++v) {
        const unsigned res = residual(s, v);
        if (res == 0) continue;
        info.unsat.set(v);
        total += res;
        const Set c = cover_set(v) & avail;
        const unsigned cc = c.count();
        const unsigned capacity =
            spec_.cover == Cover::Two && avail.test(v) ? 2U : cc;
        if (capacity < res) return info;
        if (cc < best_count) {
          best_count = cc;
          info.cands = c;
        }
      }
      if (total > 0) {
        demand = true;
        if (r == 0) return info;
        // The r best remaining picks must be able to absorb the demand.
        reds_.clear();
        unsigned max_red = 0;
        avail.for_each([&](unsigned x) {
          const unsigned red = reduction(s, info.unsat, x);
          if (red) {
            reds_.push_back(red);
            max_red = std::max(max_red, red);
          }
        });
        if (static_cast<std::uint64_t>(max_red) * r < total) return info;
        if (reds_.size() > r) {
          std::nth_element(reds_.begin(), reds_.begin() + r, reds_.end(),
                           std::greater<>());
          reds_.resize(r);
        }
        if (std::accumulate(reds_.begin(), reds_.end(), 0U) < total) return info;
      }
    }

    if (spec_.resolve) {
      unsigned twin_need = 0;
      for (const auto& [members, size] : twins_) {
        const unsigned in = (members & s.d).count();
        if (in + 1 >= size) continue;
        const unsigned need = size - 1 - in;
        if ((members & avail).count() < need) return info;
        twin_need += need;
      }
      if (twin_need > r) return info;

      // Group vertices by current code class.
      class_heads_.assign(n_, -1);
      class_next_.assign(n_, -1);
      std::vector<unsigned>& largest = class_count_;
      largest.assign(n_, 0);
      unsigned max_class = 0;
      for (unsigned v = n_; v-- > 0;) {
        class_next_[v] = class_heads_[s.cls[v]];
        class_heads_[s.cls[v]] = static_cast<int>(v);
        max_class = std::max(max_class, ++largest[s.cls[v]]);
      }
      if (max_class >= 2) {
        demand = true;
        if (r == 0) return info;
        // Each landmark splits a class into at most diam+1 parts.
        std::uint64_t reach = 1;
        for (unsigned i = 0; i < r && reach < max_class; ++i) reach *= diam_ + 1ULL;
        if (reach < max_class) return info;
        bool done = false;
        for (unsigned c = 0; c < n_ && !done; ++c) {
          if (largest[c] < 2) continue;
          for (int u = class_heads_[c]; u >= 0 && !done; u = class_next_[u]) {
            for (int w = class_next_[u]; w >= 0; w = class_next_[w]) {
              const Set cand =
                  diff_[pair_index(static_cast<unsigned>(u), static_cast<unsigned>(w))] &
                  avail;
              const unsigned cc = cand.count();
              if (cc == 0) return info;
              if (cc < best_count) {
                best_count = cc;
                info.cands = cand;
                if (cc == 1) {
                  done = true;
                  break;
                }
              }
            }
          }
        }
      }
    }

    if (spec_.connected && s.d.any()) {
      const int first = s.d.first();
      // All of D must stay mutually reachable through allowed vertices.
      const Set reach = component_of(s.d | avail, static_cast<unsigned>(first));
      if (minus(s.d, reach).any()) return info;
      if (!demand) {
        Set rest = s.d;
        Set best_boundary;
        unsigned best_b = UINT_MAX;
        unsigned pieces = 0;
        while (rest.any()) {
          const Set comp = component_of(s.d, static_cast<unsigned>(rest.first()));
          rest = minus(rest, comp);
          ++pieces;
          Set boundary;
          comp.for_each([&](unsigned v) { boundary |= open_[v]; });
          boundary &= avail;
          const unsigned bc = boundary.count();
          if (bc < best_b) {
            best_b = bc;
            best_boundary = boundary;
          }
        }
        if (pieces > 1) {
          if (r == 0 || best_b == 0) return info;
          info.cands = best_boundary;
          info.connectivity_only = true;
          demand = true;
        }
      }
    }

    info.outcome = demand ? Outcome::Branch : Outcome::Satisfied;
    return info;
  }

  const Graph& g_;
  unsigned n_;
  KindSpec spec_;
  Budget budget_;
  Clock::time_point start_;
  std::uint64_t nodes_ = 0;

  std::vector<Set> open_, closed_;
  Set valid_;
  Set forced_;
  std::vector<unsigned> order_;
  std::vector<std::uint16_t> dist_;
  unsigned diam_ = 0;
  std::vector<Set> diff_;
  std::vector<std::pair<Set, unsigned>> twins_;

  std::vector<std::uint32_t> key_gen_;
  std::vector<std::uint16_t> key_map_;
  std::uint32_t gen_ = 0;
  std::vector<unsigned> reds_;
  std::vector<int> class_heads_, class_next_;
  std::vector<unsigned> class_count_;

  Set solution_;
};

template <std::size_t W>
VertexList to_vertices(const Bits<W>& b) {
  VertexList out;
  b.for_each([&](unsigned v) { out.push_back(v); });
  return out;
}

template <std::size_t W>
SolverResult solve_with(const Graph& g, ParameterKind kind, const Budget& budget,
                        Clock::time_point start) {
  using E = Engine<W>;
  const unsigned n = static_cast<unsigned>(g.order());
  E engine(g, spec_for(kind), budget, start);
  SolverResult res;
  res.kind = kind;

  std::optional<VertexList> best;
  auto finish_bounds = [&](std::size_t lower) {
    res.status = SolveStatus::BoundsOnly;
    res.lower = lower;
    if (best) {
      res.upper = best->size();
      res.witness = make_certificate(kind, g, *best);
    }
  };

  try {
    if (auto gr = engine.greedy()) {
      VertexList cand = to_vertices(*gr);
      if (check(kind, g, cand)) best = std::move(cand);
    }
  } catch (const BudgetExhausted&) {
  }

  typename E::State root = engine.root();
  std::size_t k = root.size;
  try {
    if (!best) {
      // No greedy start: settle feasibility first.
      if (!engine.search(root, n)) {
        res.status = SolveStatus::Infeasible;
        res.lower = n + 1;
        res.nodes_explored = engine.nodes();
        return res;
      }
      best = to_vertices(engine.solution());
    }
    while (k < best->size()) {
      if (engine.search(root, static_cast<unsigned>(k))) {
        best = to_vertices(engine.solution());
        break;
      }
      ++k;
    }
  } catch (const BudgetExhausted&) {
    finish_bounds(k);
    res.nodes_explored = engine.nodes();
    return res;
  }

  const std::size_t opt = best->size();
  if (n <= kExhaustiveCeiling) {
    // Lexicographically least optimum: fix members one position at a time.
    try {
      VertexList chosen;
      unsigned lo = 0;
      while (chosen.size() < opt) {
        bool placed = false;
        for (unsigned c = lo; c < n && !placed; ++c) {
          typename E::State s = root;
          bool ok = true;
          for (Vertex v : chosen) {
            if (!s.d.test(v)) {
              if (s.excl.test(v)) ok = false;
              else engine.include(s, v);
            }
          }
          if (ok && !s.d.test(c)) {
            if (s.excl.test(c)) ok = false;
            else engine.include(s, c);
          }
          for (unsigned v = 0; v < c && ok; ++v) {
            if (std::find(chosen.begin(), chosen.end(), v) != chosen.end()) continue;
            if (s.d.test(v)) ok = false;
            s.excl.set(v);
          }
          if (ok && engine.search(s, static_cast<unsigned>(opt))) {
            chosen.push_back(c);
            lo = c + 1;
            placed = true;
          }
        }
        if (!placed) throw std::logic_error("lexicographic witness search lost the optimum");
      }
      best = chosen;
    } catch (const BudgetExhausted&) {
    }
  }

  res.status = SolveStatus::Exact;
  res.value = res.lower = opt;
  res.upper = opt;
  res.witness = make_certificate(kind, g, *best);
  res.nodes_explored = engine.nodes();
  return res;
}

}  // namespace

SolverResult min_param(const Graph& g, ParameterKind kind, const Budget& budget) {
  const auto start = Clock::now();
  if (kind == ParameterKind::QDDOM) return quasi_double_domination_number(g, budget);
  const std::size_t n = g.order();
  if (budget.exhaustive_required && n > kExhaustiveCeiling) {
    throw std::invalid_argument("exhaustive mode is limited to " +
                                std::to_string(kExhaustiveCeiling) + " vertices; graph has " +
                                std::to_string(n));
  }
  if (n > kSolverMaxOrder) {
    throw std::invalid_argument("solver supports at most " + std::to_string(kSolverMaxOrder) +
                                " vertices; graph has " + std::to_string(n));
  }
  if (needs_resolving(kind) && !is_connected(g)) {
    throw std::invalid_argument(std::string(kind_name(kind)) +
                                " needs a connected graph (distances are undefined otherwise)");
  }

  SolverResult res;
  res.kind = kind;
  const bool isolated = g.has_isolated_vertex();
  const bool no_total = (kind == ParameterKind::TDOM || kind == ParameterKind::RTDOM ||
                         kind == ParameterKind::DDOM) && isolated;
  const bool no_connected = needs_connected(kind) && !is_connected(g);
  if (n > 0 && (no_total || no_connected)) {
    res.status = SolveStatus::Infeasible;
    res.lower = n + 1;
  } else if (n <= 64) {
    res = solve_with<1>(g, kind, budget, start);
  } else if (n <= 128) {
    res = solve_with<2>(g, kind, budget, start);
  } else {
    res = solve_with<4>(g, kind, budget, start);
  }
  res.elapsed = Clock::now() - start;

  if (res.witness && !check(kind, g, res.witness->vertices)) {
    throw std::logic_error("solver produced a witness that fails its own predicate");
  }
  return res;
}

std::string solver_result_to_json(const SolverResult& r, const Graph& g,
                                  bool include_timing) {
  nlohmann::ordered_json doc;
  doc["kind"] = std::string(kind_name(r.kind));
  doc["graph"] = g.name();
  doc["graph_digest"] = graph_digest(g);
  doc["status"] = std::string(status_name(r.status));
  if (r.exact()) {
    doc["value"] = r.value;
  } else {
    doc["value"] = nullptr;
  }
  doc["lower"] = r.lower;
  if (r.upper) {
    doc["upper"] = *r.upper;
  } else {
    doc["upper"] = nullptr;
  }
  if (r.witness) {
    doc["witness"] = nlohmann::ordered_json::parse(certificate_to_json(*r.witness, g));
  } else {
    doc["witness"] = nullptr;
  }
  doc["nodes_explored"] = r.nodes_explored;
  if (include_timing) doc["elapsed_seconds"] = r.elapsed.count();
  return doc.dump(2) + "\n";
}

}  // namespace fcnlab
