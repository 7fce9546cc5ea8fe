#ifndef FCNLAB_HARNESS_HPP
#define FCNLAB_HARNESS_HPP

#include "fcnlab/constructions.hpp"
#include "fcnlab/generators.hpp"
#include "fcnlab/solvers.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fcnlab {

enum class VerdictStatus { Confirmed, Refuted, Undecided };

std::string_view verdict_name(VerdictStatus s);

/// A constructed or solver-found set, kept as certificate JSON so the
/// report can be re-verified on its own.
struct WitnessRecord {
  std::string name;
  std::size_t size = 0;
  bool valid = false;
  std::string certificate_json;
};

/// Tallies for claims adjudicated over many sampled instances.
struct SampleTally {
  std::size_t instances = 0;
  /// Individual checks (a product instance is checked at every root).
  std::size_t checks = 0;
  std::size_t substantive = 0;
  /// Conditioned theorems whose condition failed.
  std::size_t vacuous = 0;
  /// Checks skipped because a parameter has no feasible set.
  std::size_t undefined = 0;
  std::size_t violations = 0;
  /// First few counterexamples, human-readable.
  std::vector<std::string> counterexamples;
};

struct Evidence {
  std::optional<std::size_t> formula_value;
  std::optional<std::size_t> certificate_size;
  std::optional<std::size_t> oracle_value;
  std::optional<std::size_t> oracle_lower;
  std::optional<std::size_t> oracle_upper;
  std::vector<WitnessRecord> witnesses;
  std::optional<SampleTally> tally;
  /// name = value pairs computed along the way (factor parameters etc.).
  std::vector<std::pair<std::string, std::string>> values;
};

struct Verdict {
  std::string claim_id;
  VerdictStatus status = VerdictStatus::Undecided;
  Evidence evidence;
  /// Discrepancies worth a reader's attention even when status is settled.
  std::vector<std::string> flags;
  std::string notes;
};

// ---- FCN claims ----

struct FcnClaim {
  std::string id;
  ParameterKind kind;
  std::size_t min_level;
  std::size_t max_level;  // inclusive; SIZE_MAX when open-ended
  std::string statement;
};

const std::vector<FcnClaim>& fcn_claims();
const FcnClaim* find_fcn_claim(std::string_view id);

/// Compares the claimed value with the constructed set(s) and the solver on
/// fcn(level). Never throws for a known claim; problems become Undecided.
/// Throws std::invalid_argument for an unknown claim id.
Verdict check_fcn_claim(std::string_view claim_id, std::size_t level, const Budget& budget);

// ---- general-graph theorems ----

/// Rooted-product theorems: Thm2, Thm20, Thm3, Thm4, Thm5, Thm6, Thm7, Thm8.
const std::vector<std::string>& product_theorem_ids();
/// Bound theorems: Thm1, Thm18, Thm9, Thm10, Thm14..Thm17, Chain, Thm22.
const std::vector<std::string>& bound_theorem_ids();

/// Does (gamma, omega) meet the theorem's hypotheses at every root?
bool product_hypotheses_hold(const Graph& gamma, const Graph& omega,
                             std::string_view theorem_id);

/// One instance at one root. Exact parameters on both sides; Undecided
/// if the hypotheses fail or a solve runs out of budget.
Verdict check_rooted_product_membership(const Graph& gamma, const Graph& omega,
                                        const RootSpec& root, std::string_view theorem_id,
                                        const Budget& budget = {});

/// One graph. Conditioned theorems count as vacuous when the condition
/// fails; the tally records which.
Verdict check_bound_theorem(const Graph& g, std::string_view theorem_id,
                            const Budget& budget = {});

/// P2 o K3: resolving total and connected domination at their upper bounds,
/// resolving domination at its lower bound.
Verdict check_figure5(const Budget& budget = {});

struct SuiteOptions {
  std::size_t instances = 200;
  std::uint64_t seed = 1;
  unsigned threads = 1;
  Budget budget;
  std::size_t gamma_max = 6;
  std::size_t omega_max = 5;
  std::size_t bound_n_min = 3;
  std::size_t bound_n_max = 8;
};

/// Samples instances satisfying the hypotheses and aggregates.
Verdict run_product_suite(std::string_view theorem_id, const SuiteOptions& opts);
Verdict run_bound_suite(std::string_view theorem_id, const SuiteOptions& opts);

struct HarnessReport {
  std::uint64_t seed = 0;
  std::vector<std::size_t> levels;
  std::vector<Verdict> verdicts;
};

/// "all" or a list of ids. FCN claims are run at every applicable level.
HarnessReport run_checks(const std::vector<std::string>& claim_ids,
                         const std::vector<std::size_t>& levels, const SuiteOptions& opts);

/// Ordered by claim id then level; no timing, so identical inputs give
/// identical bytes.
std::string report_to_json(const HarnessReport& report);
std::string report_to_text(const HarnessReport& report);

}  // namespace fcnlab

#endif  // FCNLAB_HARNESS_HPP
