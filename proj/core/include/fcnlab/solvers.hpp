#ifndef FCNLAB_SOLVERS_HPP
#define FCNLAB_SOLVERS_HPP

#include "fcnlab/graph.hpp"
#include "fcnlab/parameter.hpp"
#include "fcnlab/verifiers.hpp"

#include <chrono>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>

namespace fcnlab {

/// Largest graph accepted when an exhaustive answer is demanded.
inline constexpr std::size_t kExhaustiveCeiling = 20;
/// Largest graph the branch-and-bound engine handles at all.
inline constexpr std::size_t kSolverMaxOrder = 256;

struct Budget {
  std::chrono::duration<double> wall_clock = std::chrono::duration<double>::max();
  std::uint64_t node_limit = std::numeric_limits<std::uint64_t>::max();
  /// Ignore both limits, and refuse graphs above kExhaustiveCeiling instead
  /// of returning partial bounds.
  bool exhaustive_required = false;

  static Budget unlimited() { return {}; }
  static Budget seconds(double s) {
    Budget b;
    b.wall_clock = std::chrono::duration<double>(s);
    return b;
  }
  static Budget nodes(std::uint64_t limit) {
    Budget b;
    b.node_limit = limit;
    return b;
  }
  static Budget exhaustive() {
    Budget b;
    b.exhaustive_required = true;
    return b;
  }
};

enum class SolveStatus {
  Exact,       // value proven optimal
  BoundsOnly,  // budget ran out; lower/upper are certified
  Infeasible,  // no vertex set has the property
};

std::string_view status_name(SolveStatus s);

struct SolverResult {
  ParameterKind kind = ParameterKind::DOM;
  SolveStatus status = SolveStatus::BoundsOnly;
  std::size_t value = 0;
  std::size_t lower = 0;
  std::optional<std::size_t> upper;
  /// Feasible set of size `upper` (verified before it is returned).
  std::optional<Certificate> witness;
  std::uint64_t nodes_explored = 0;
  std::chrono::duration<double> elapsed{0};

  bool exact() const { return status == SolveStatus::Exact; }
};

/// Minimum size of a vertex set with property `kind`.
///
/// Iterative deepening on the target size, starting at a lower bound. Each
/// round is a depth-first search that picks the unmet requirement with the
/// fewest remaining candidate vertices (an under-covered vertex, an
/// unresolved pair, or a disconnected piece of the set) and branches on
/// which candidate covers it, excluding earlier siblings. Subtrees are cut
/// when the largest possible coverage of the remaining picks is short of
/// the outstanding demand, or when twin classes need more picks than
/// remain.
///
/// Resolving kinds need a connected graph (std::invalid_argument otherwise).
/// On graphs up to kExhaustiveCeiling vertices the witness is the
/// lexicographically least optimal set.
SolverResult min_param(const Graph& g, ParameterKind kind, const Budget& budget = {});

/// Sum over twin classes of (|T| - 1); every resolving set meets each twin
/// class in all but at most one vertex.
std::size_t dim_lower_bound_twins(const Graph& g);

/// Minimum |U| + |V| over quasi-double dominating pairs. Exact when the
/// budget allows; the witness certificate carries U in `pair_u`.
SolverResult quasi_double_domination_number(const Graph& g, const Budget& budget = {});

/// Local search for a resolving set of exactly `size` vertices: start from
/// all-but-one of each twin class, then swap landmarks to drive the number
/// of unresolved pairs to zero. Deterministic for a given seed.
std::optional<VertexList> find_resolving_set(const Graph& g, std::size_t size,
                                             std::uint64_t seed, const Budget& budget);

/// JSON mirror of SolverResult. Timing is omitted when include_timing is
/// false so that reports are byte-reproducible.
std::string solver_result_to_json(const SolverResult& r, const Graph& g,
                                  bool include_timing = true);

}  // namespace fcnlab

#endif  // FCNLAB_SOLVERS_HPP
