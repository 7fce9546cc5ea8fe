#include "fcnlab/harness.hpp"

#include "fcnlab/graph_io.hpp"
#include "fcnlab/random_graph.hpp"
#include "parallel.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace fcnlab {

std::string_view verdict_name(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::Confirmed: return "Confirmed";
    case VerdictStatus::Refuted: return "Refuted";
    case VerdictStatus::Undecided: return "Undecided";
  }
  return "?";
}

namespace {

constexpr std::size_t kOpen = static_cast<std::size_t>(-1);
constexpr std::size_t kMaxCounterexamples = 5;

/// A solve that didn't finish inside the budget.
struct NotSettled : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Exact parameters of one graph, computed on demand. nullopt means no
/// feasible set exists.
class ParamCache {
 public:
  ParamCache(const Graph& g, const Budget& budget) : g_(g), budget_(budget) {}

  std::optional<std::size_t> get(ParameterKind kind) {
    auto it = values_.find(kind);
    if (it != values_.end()) return it->second;
    const SolverResult r = min_param(g_, kind, budget_);
    std::optional<std::size_t> value;
    if (r.status == SolveStatus::BoundsOnly) {
      throw NotSettled(std::string(kind_name(kind)) + " on " + g_.name() +
                       " did not finish within the budget");
    }
    if (r.status == SolveStatus::Exact) value = r.value;
    if (r.witness) witnesses_.emplace(kind, *r.witness);
    values_.emplace(kind, value);
    return value;
  }

  /// Parameter that the hypotheses guarantee to exist.
  std::size_t must(ParameterKind kind) {
    auto v = get(kind);
    if (!v) {
      throw std::logic_error(std::string(kind_name(kind)) + " unexpectedly infeasible on " +
                             g_.name());
    }
    return *v;
  }

  void record(Evidence& ev, const std::string& prefix) const {
    for (const auto& [kind, value] : values_) {
      ev.values.emplace_back(prefix + std::string(kind_name(kind)),
                             value ? std::to_string(*value) : "infeasible");
    }
  }

  void record_witnesses(Evidence& ev, const std::string& prefix) const {
    for (const auto& [kind, cert] : witnesses_) {
      ev.witnesses.push_back({prefix + std::string(kind_name(kind)), cert.vertices.size(),
                              true, certificate_to_json(cert, g_)});
    }
  }

 private:
  const Graph& g_;
  Budget budget_;
  std::map<ParameterKind, std::optional<std::size_t>> values_;
  std::map<ParameterKind, Certificate> witnesses_;
};

std::string describe_graph(const Graph& g) {
  std::ostringstream out;
  out << "n=" << g.order() << " edges=[";
  bool first = true;
  for (const auto& [u, v] : g.edges()) {
    out << (first ? "" : ",") << g.label(u) << "-" << g.label(v);
    first = false;
  }
  out << "]";
  return out.str();
}

bool is_c4(const Graph& g) {
  if (g.order() != 4 || g.size() != 4 || !is_connected(g)) return false;
  for (Vertex v = 0; v < 4; ++v) {
    if (g.degree(v) != 2) return false;
  }
  return true;
}

/// Subtraction that can go below zero in a formula like n*x - n + y.
long long sl(std::size_t x) { return static_cast<long long>(x); }

}  // namespace

// ---------------------------------------------------------------------------
// FCN claims

const std::vector<FcnClaim>& fcn_claims() {
  static const std::vector<FcnClaim> claims{
      {"Thm11", ParameterKind::DOM, 1, kOpen, "gamma(FCN(l)) = 4 gamma(FCN(l-1)) - 2"},
      {"Cor19", ParameterKind::IDOM, 1, kOpen, "gamma_i(FCN(l)) = 4 gamma_i(FCN(l-1)) - 2"},
      {"Thm21", ParameterKind::TDOM, 1, 1, "gamma_t(FCN(1)) = 8"},
      {"Thm12", ParameterKind::TDOM, 2, kOpen, "gamma_t(FCN(l)) = 4 gamma_t(FCN(l-1)) - 2"},
      {"Thm13", ParameterKind::CDOM, 1, kOpen, "gamma_c(FCN(l)) = 4 (gamma_c(FCN(l-1)) + 1)"},
      {"DDS1", ParameterKind::DDOM, 1, 1, "gamma_x2(FCN(1)) = 4 gamma_x2(FCN(0)) = 12"},
      {"DDS", ParameterKind::DDOM, 2, kOpen, "gamma_x2(FCN(l)) = 4 (gamma_x2(FCN(l-1)) - 1)"},
      {"2DS", ParameterKind::TWODOM, 1, kOpen, "gamma_2(FCN(l)) = 4 gamma_2(FCN(l-1))"},
      {"Thm23", ParameterKind::RDOM, 1, kOpen, "gamma_r(FCN(l)) = 4 gamma_2(FCN(l-1))"},
      {"RIDS", ParameterKind::RIDOM, 1, kOpen, "gamma_ri(FCN(l)) = 4 gamma_2(FCN(l-1))"},
      {"RTDS1", ParameterKind::RTDOM, 1, 1, "gamma_rt(FCN(1)) = 8"},
      {"RTDS", ParameterKind::RTDOM, 2, kOpen, "gamma_rt(FCN(l)) = 4 gamma_rt(FCN(l-1))"},
      {"RCDS", ParameterKind::RCDOM, 1, kOpen, "gamma_rc(FCN(l)) = 4 (gamma_c(FCN(l-1)) + 1)"},
      {"DIM", ParameterKind::DIM, 1, kOpen, "dim(FCN(l)) = 4^l"},
  };
  return claims;
}

const FcnClaim* find_fcn_claim(std::string_view id) {
  for (const auto& c : fcn_claims()) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

Verdict check_fcn_claim(std::string_view claim_id, std::size_t level, const Budget& budget) {
  const FcnClaim* claim = find_fcn_claim(claim_id);
  if (!claim) throw std::invalid_argument("unknown FCN claim '" + std::string(claim_id) + "'");
  Verdict v;
  v.claim_id = claim->id + "@l=" + std::to_string(level);
  if (level < claim->min_level || level > claim->max_level || level > 7) {
    v.notes = "level " + std::to_string(level) + " is outside the claim's range";
    return v;
  }
  const ParameterKind kind = claim->kind;
  const Graph g = fcn(level);
  const auto formula = formula_value(kind, level);
  v.evidence.formula_value = formula;

  std::optional<std::size_t> best_upper;
  auto note_upper = [&](std::size_t s) {
    if (!best_upper || s < *best_upper) best_upper = s;
  };

  // Constructed sets.
  if (has_construction(kind)) {
    const bool two_readings = kind == ParameterKind::TWODOM || kind == ParameterKind::RDOM ||
                              kind == ParameterKind::RIDOM;
    std::vector<ConstructionVariant> variants{ConstructionVariant::Literal};
    if (two_readings) variants.push_back(ConstructionVariant::TwinClosure);
    for (auto variant : variants) {
      const Certificate cert = construct(kind, level, variant);
      const bool ok = check(kind, g, cert.vertices);
      const std::string name =
          two_readings ? "construction:" + std::string(variant_name(variant)) : "construction";
      v.evidence.witnesses.push_back(
          {name, cert.vertices.size(), ok, certificate_to_json(cert, g)});
      if (variant == ConstructionVariant::Literal) {
        v.evidence.certificate_size = cert.vertices.size();
      }
      if (!ok) {
        v.flags.push_back(name + " fails the " + std::string(kind_name(kind)) + " predicate: " +
                          find_violation(kind, g, cert.vertices).value_or("?"));
      } else {
        note_upper(cert.vertices.size());
        if (formula && cert.vertices.size() != *formula) {
          v.flags.push_back(name + " has " + std::to_string(cert.vertices.size()) +
                            " vertices; the formula gives " + std::to_string(*formula));
        }
      }
    }
  }

  std::size_t lower = 0;
  if (needs_resolving(kind)) {
    lower = dim_lower_bound_twins(g);
    v.evidence.values.emplace_back("twin_lower_bound", std::to_string(lower));
  }

  if (kind == ParameterKind::DIM && formula) {
    // Local search for a resolving set of the claimed size.
    if (auto found = find_resolving_set(g, *formula, level, budget)) {
      const Certificate cert = make_certificate(kind, g, *found);
      v.evidence.witnesses.push_back(
          {"local-search", found->size(), true, certificate_to_json(cert, g)});
      note_upper(found->size());
    }
  }

  bool infeasible = false;
  try {
    const SolverResult r = min_param(g, kind, budget);
    v.evidence.values.emplace_back("solver_status", std::string(status_name(r.status)));
    if (r.status == SolveStatus::Infeasible) {
      infeasible = true;
    } else {
      lower = std::max(lower, r.lower);
      if (r.upper) note_upper(*r.upper);
      if (r.witness) {
        v.evidence.witnesses.push_back({r.exact() ? "solver" : "solver-upper",
                                        r.witness->vertices.size(), true,
                                        certificate_to_json(*r.witness, g)});
      }
    }
  } catch (const std::exception& e) {
    v.notes = std::string("solver failed: ") + e.what();
  }

  if (infeasible) {
    v.status = VerdictStatus::Refuted;
    v.notes = "no vertex set of FCN(" + std::to_string(level) + ") has this property";
    return v;
  }
  v.evidence.oracle_lower = lower;
  v.evidence.oracle_upper = best_upper;
  if (best_upper && lower == *best_upper) v.evidence.oracle_value = lower;

  if (!formula) {
    v.notes = "no claimed value at this level";
    return v;
  }
  if (best_upper && *best_upper < *formula) {
    v.status = VerdictStatus::Refuted;
    v.notes = "a verified set of size " + std::to_string(*best_upper) +
              " is smaller than the claimed " + std::to_string(*formula);
  } else if (lower > *formula) {
    v.status = VerdictStatus::Refuted;
    v.notes = "every set has at least " + std::to_string(lower) + " vertices; claimed " +
              std::to_string(*formula);
  } else if (best_upper && lower == *formula && *best_upper == *formula) {
    v.status = VerdictStatus::Confirmed;
  } else {
    v.status = VerdictStatus::Undecided;
    std::string hi = best_upper ? std::to_string(*best_upper) : "?";
    v.notes = "bounds [" + std::to_string(lower) + ", " + hi + "] contain the claimed " +
              std::to_string(*formula);
  }
  return v;
}

// ---------------------------------------------------------------------------
// Rooted products

const std::vector<std::string>& product_theorem_ids() {
  static const std::vector<std::string> ids{"Thm2", "Thm20", "Thm3", "Thm4",
                                            "Thm5", "Thm6",  "Thm7", "Thm8"};
  return ids;
}

const std::vector<std::string>& bound_theorem_ids() {
  static const std::vector<std::string> ids{"Thm1",  "Thm18", "Thm9",  "Thm10", "Thm14",
                                            "Thm15", "Thm16", "Thm17", "Chain", "Thm22"};
  return ids;
}

namespace {

bool isolate_free(const Graph& g) { return g.order() > 0 && !g.has_isolated_vertex(); }

void require_product_theorem(std::string_view id) {
  const auto& ids = product_theorem_ids();
  if (std::find(ids.begin(), ids.end(), id) == ids.end()) {
    throw std::invalid_argument("unknown rooted-product theorem '" + std::string(id) + "'");
  }
}

void require_bound_theorem(std::string_view id) {
  const auto& ids = bound_theorem_ids();
  if (std::find(ids.begin(), ids.end(), id) == ids.end()) {
    throw std::invalid_argument("unknown bound theorem '" + std::string(id) + "'");
  }
}

/// Structural hypotheses (those that don't need a solver).
bool structural_hypotheses(const Graph& gamma, const Graph& omega, std::string_view id) {
  const std::size_t n = gamma.order();
  if (id == "Thm2" || id == "Thm20") {
    return isolate_free(gamma) && n >= 2 && omega.order() >= 2;
  }
  if (id == "Thm3") return isolate_free(gamma) && isolate_free(omega);
  if (id == "Thm4") {
    // gamma_c of the factors only exists for connected factors.
    return isolate_free(gamma) && n >= 2 && omega.order() >= 2 && is_connected(gamma) &&
           is_connected(omega);
  }
  if (id == "Thm5") {
    // Double domination needs order >= 2 on each factor.
    return n >= 2 && omega.order() >= 2 && is_connected(gamma) && is_connected(omega);
  }
  if (id == "Thm6") return isolate_free(gamma) && is_c4(omega);
  if (id == "Thm7") return n >= 1 && omega.order() >= 1;
  if (id == "Thm8") return isolate_free(gamma) && omega.order() >= 1;
  return false;
}

}  // namespace

bool product_hypotheses_hold(const Graph& gamma, const Graph& omega, std::string_view id) {
  require_product_theorem(id);
  if (!structural_hypotheses(gamma, omega, id)) return false;
  if (id == "Thm8") {
    const SolverResult r = min_param(gamma, ParameterKind::TWODOM, Budget::unlimited());
    return r.exact() && r.value < gamma.order();
  }
  return true;
}

Verdict check_rooted_product_membership(const Graph& gamma, const Graph& omega,
                                        const RootSpec& root, std::string_view theorem_id,
                                        const Budget& budget) {
  require_product_theorem(theorem_id);
  Verdict v;
  v.claim_id = std::string(theorem_id);
  SampleTally tally;
  tally.instances = 1;
  tally.checks = 1;
  const Vertex r = resolve_root(omega, root);
  const std::string where = "gamma " + describe_graph(gamma) + "; omega " + describe_graph(omega) +
                            "; root " + omega.label(r);
  try {
    if (!product_hypotheses_hold(gamma, omega, theorem_id)) {
      v.notes = "hypotheses fail: " + where;
      return v;
    }
    const Graph product = rooted_product(gamma, omega, r);
    const long long n = sl(gamma.order());
    ParamCache pg(gamma, budget), po(omega, budget), pp(product, budget);

    bool holds = false;
    std::string detail;
    auto membership = [&](ParameterKind kind, const std::set<long long>& rhs) {
      const long long left = sl(pp.must(kind));
      holds = rhs.count(left) > 0;
      std::string s = "{";
      for (auto x : rhs) s += (s.size() > 1 ? ", " : "") + std::to_string(x);
      detail = std::string(kind_name(kind)) + "(product) = " + std::to_string(left) + ", set " +
               s + "}";
    };

    if (theorem_id == "Thm2") {
      const long long o = sl(po.must(ParameterKind::DOM));
      membership(ParameterKind::DOM, {n * o, n * o - n + sl(pg.must(ParameterKind::DOM))});
    } else if (theorem_id == "Thm20") {
      const long long o = sl(po.must(ParameterKind::IDOM));
      membership(ParameterKind::IDOM, {n * o, n * o - n + sl(pg.must(ParameterKind::IDOM))});
    } else if (theorem_id == "Thm3") {
      const long long o = sl(po.must(ParameterKind::TDOM));
      membership(ParameterKind::TDOM, {n * o - n, sl(pg.must(ParameterKind::DOM)) + n * o - n,
                                       sl(pg.must(ParameterKind::TDOM)) + n * o - n, n * o});
    } else if (theorem_id == "Thm4") {
      const long long o = sl(po.must(ParameterKind::CDOM));
      membership(ParameterKind::CDOM, {n * o, n * o + n});
    } else if (theorem_id == "Thm5") {
      const long long o = sl(po.must(ParameterKind::DDOM));
      const SolverResult q = quasi_double_domination_number(gamma, budget);
      if (!q.exact()) throw NotSettled("QDDOM did not finish within the budget");
      v.evidence.values.emplace_back("gamma:QDDOM", std::to_string(q.value));
      membership(ParameterKind::DDOM,
                 {n * o, sl(q.value) + n * o - n, sl(pg.must(ParameterKind::TWODOM)) + n * o - n,
                  sl(pg.must(ParameterKind::DOM)) + n * o - n, n * o - n,
                  sl(pg.must(ParameterKind::DDOM)) + n * o - 2 * n});
    } else if (theorem_id == "Thm6") {
      const long long o = sl(po.must(ParameterKind::DDOM));
      const long long left = sl(pp.must(ParameterKind::DDOM));
      holds = left == n * o;
      detail = "DDOM(product) = " + std::to_string(left) + ", n * DDOM(C4) = " +
               std::to_string(n * o);
    } else if (theorem_id == "Thm7") {
      const long long o = sl(po.must(ParameterKind::TWODOM));
      membership(ParameterKind::TWODOM, {sl(pg.must(ParameterKind::DOM)) + n * o - n,
                                         sl(pg.must(ParameterKind::TWODOM)) + n * o - n, n * o});
    } else if (theorem_id == "Thm8") {
      const long long o = sl(po.must(ParameterKind::TWODOM));
      const long long left = sl(pp.must(ParameterKind::TWODOM));
      const Vertex rv = r;
      const Graph omega_minus = remove_vertices(omega, std::span<const Vertex>(&rv, 1));
      ParamCache pm(omega_minus, budget);
      const long long minus = sl(pm.must(ParameterKind::TWODOM));
      const bool a = left == n * o;
      const bool b = minus >= o;
      holds = a == b;
      detail = "(a) TWODOM(product) = " + std::to_string(left) + " vs n * TWODOM(omega) = " +
               std::to_string(n * o) + " is " + (a ? "true" : "false") +
               "; (b) TWODOM(omega - v) = " + std::to_string(minus) + " >= " +
               std::to_string(o) + " is " + (b ? "true" : "false");
      v.evidence.values.emplace_back("omega-v:TWODOM", std::to_string(minus));
    }

    pg.record(v.evidence, "gamma:");
    po.record(v.evidence, "omega:");
    pp.record(v.evidence, "product:");
    v.evidence.values.emplace_back("detail", detail);
    tally.substantive = 1;
    if (holds) {
      v.status = VerdictStatus::Confirmed;
    } else {
      v.status = VerdictStatus::Refuted;
      tally.violations = 1;
      tally.counterexamples.push_back(where + ": " + detail);
      pp.record_witnesses(v.evidence, "product:");
      v.notes = detail;
    }
  } catch (const NotSettled& e) {
    v.notes = e.what();
  }
  v.evidence.tally = tally;
  return v;
}

// ---------------------------------------------------------------------------
// Bound theorems

namespace {

struct Inequality {
  std::string text;
  bool holds;
};

}  // namespace

Verdict check_bound_theorem(const Graph& g, std::string_view theorem_id, const Budget& budget) {
  require_bound_theorem(theorem_id);
  Verdict v;
  v.claim_id = std::string(theorem_id);
  SampleTally tally;
  tally.instances = 1;
  tally.checks = 1;
  if (g.order() < 2 || !is_connected(g)) {
    v.notes = "needs a connected graph with at least two vertices";
    return v;
  }
  ParamCache pc(g, budget);
  std::vector<Inequality> ineqs;
  auto le = [&](const std::string& a, std::size_t x, const std::string& b, std::size_t y) {
    ineqs.push_back({a + " = " + std::to_string(x) + " <= " + b + " = " + std::to_string(y),
                     x <= y});
  };
  using K = ParameterKind;

  // Shared shape of Thm1, Thm18, Thm9, Thm10: max{p, dim} <= q <= p + dim.
  auto sandwich = [&](K p, K q, bool lower_p, bool lower_dim) {
    const auto qv = pc.get(q);
    if (!qv) return false;
    const std::size_t pv = pc.must(p), dim = pc.must(K::DIM);
    const std::string pn(kind_name(p)), qn(kind_name(q));
    if (lower_p) le(pn, pv, qn, *qv);
    if (lower_dim) le("DIM", dim, qn, *qv);
    le(qn, *qv, pn + " + DIM", pv + dim);
    return true;
  };

  bool defined = true, vacuous = false;
  try {
    if (theorem_id == "Thm1") {
      defined = sandwich(K::DOM, K::RDOM, true, true);
    } else if (theorem_id == "Thm18") {
      defined = sandwich(K::IDOM, K::RIDOM, true, true);
    } else if (theorem_id == "Thm9") {
      defined = sandwich(K::TDOM, K::RTDOM, true, true);
    } else if (theorem_id == "Thm10") {
      defined = sandwich(K::CDOM, K::RCDOM, true, true);
    } else if (theorem_id == "Thm14" || theorem_id == "Thm15") {
      const std::size_t t = pc.must(K::TDOM), dim = pc.must(K::DIM);
      const bool cond = theorem_id == "Thm14" ? t >= dim : t <= dim;
      if (!cond) vacuous = true;
      else sandwich(K::TDOM, K::RTDOM, theorem_id == "Thm14", theorem_id == "Thm15");
    } else if (theorem_id == "Thm16" || theorem_id == "Thm17") {
      const std::size_t c = pc.must(K::CDOM), dim = pc.must(K::DIM);
      const bool cond = theorem_id == "Thm16" ? c >= dim : c <= dim;
      if (!cond) vacuous = true;
      else sandwich(K::CDOM, K::RCDOM, theorem_id == "Thm16", theorem_id == "Thm17");
    } else if (theorem_id == "Chain") {
      const std::size_t r = pc.must(K::RDOM), rt = pc.must(K::RTDOM), rc = pc.must(K::RCDOM);
      le("RDOM", r, "RTDOM", rt);
      le("RTDOM", rt, "RCDOM", rc);
    } else if (theorem_id == "Thm22") {
      le("twin excess", dim_lower_bound_twins(g), "DIM", pc.must(K::DIM));
    }
  } catch (const NotSettled& e) {
    v.notes = e.what();
    v.evidence.tally = tally;
    return v;
  }

  pc.record(v.evidence, "");
  if (!defined) {
    tally.undefined = 1;
    v.status = VerdictStatus::Confirmed;
    v.notes = "a parameter has no feasible set on this graph; nothing to compare";
  } else if (vacuous) {
    tally.vacuous = 1;
    v.status = VerdictStatus::Confirmed;
    v.notes = "condition fails; vacuously true";
  } else {
    tally.substantive = 1;
    v.status = VerdictStatus::Confirmed;
    for (const auto& q : ineqs) {
      if (!q.holds) {
        v.status = VerdictStatus::Refuted;
        v.notes += (v.notes.empty() ? "" : "; ") + q.text + " fails";
      }
    }
    if (v.status == VerdictStatus::Refuted) {
      tally.violations = 1;
      tally.counterexamples.push_back(describe_graph(g) + ": " + v.notes);
      pc.record_witnesses(v.evidence, "");
    }
  }
  v.evidence.tally = tally;
  return v;
}

Verdict check_figure5(const Budget& budget) {
  Verdict v;
  v.claim_id = "Fig5";
  const Graph g = rooted_product(path(2), complete(3), Vertex{0});
  ParamCache pc(g, budget);
  using K = ParameterKind;
  try {
    const std::size_t dom = pc.must(K::DOM), t = pc.must(K::TDOM), c = pc.must(K::CDOM),
                      dim = pc.must(K::DIM), r = pc.must(K::RDOM), rt = pc.must(K::RTDOM),
                      rc = pc.must(K::RCDOM);
    pc.record(v.evidence, "");
    pc.record_witnesses(v.evidence, "");
    std::vector<std::string> misses;
    if (rt != t + dim) misses.push_back("RTDOM is not TDOM + DIM");
    if (rc != c + dim) misses.push_back("RCDOM is not CDOM + DIM");
    if (r != std::max(dom, dim)) misses.push_back("RDOM is not max{DOM, DIM}");
    if (misses.empty()) {
      v.status = VerdictStatus::Confirmed;
      v.notes = "P2 o K3: RTDOM and RCDOM at the upper bound, RDOM at the lower bound";
    } else {
      v.status = VerdictStatus::Refuted;
      for (const auto& m : misses) v.notes += (v.notes.empty() ? "" : "; ") + m;
    }
  } catch (const NotSettled& e) {
    v.notes = e.what();
  }
  return v;
}

// ---------------------------------------------------------------------------
// Suites

namespace {

std::uint64_t id_hash(std::string_view id) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : id) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

void merge_tally(SampleTally& into, const SampleTally& t) {
  into.instances += t.instances;
  into.checks += t.checks;
  into.substantive += t.substantive;
  into.vacuous += t.vacuous;
  into.undefined += t.undefined;
  into.violations += t.violations;
  for (const auto& c : t.counterexamples) {
    if (into.counterexamples.size() < kMaxCounterexamples) into.counterexamples.push_back(c);
  }
}

Verdict aggregate(std::string id, const std::vector<Verdict>& parts, std::size_t planned) {
  Verdict v;
  v.claim_id = std::move(id);
  SampleTally total;
  std::size_t unsettled = 0;
  for (const auto& p : parts) {
    if (p.evidence.tally) merge_tally(total, *p.evidence.tally);
    if (p.status == VerdictStatus::Undecided) {
      ++unsettled;
      if (v.notes.empty()) v.notes = p.notes;
    }
    if (p.status == VerdictStatus::Refuted && v.evidence.witnesses.empty()) {
      v.evidence.witnesses = p.evidence.witnesses;
    }
  }
  total.instances = planned;
  v.evidence.tally = total;
  if (total.violations > 0) {
    v.status = VerdictStatus::Refuted;
    v.notes = total.counterexamples.empty() ? std::string()
                                            : "first: " + total.counterexamples.front();
  } else if (unsettled > 0) {
    v.status = VerdictStatus::Undecided;
    v.notes = std::to_string(unsettled) + " check(s) unsettled: " + v.notes;
  } else {
    v.status = VerdictStatus::Confirmed;
  }
  return v;
}

}  // namespace

Verdict run_product_suite(std::string_view theorem_id, const SuiteOptions& opts) {
  require_product_theorem(theorem_id);
  const std::uint64_t base = opts.seed ^ id_hash(theorem_id);
  const bool needs_isolate_free_gamma = theorem_id != "Thm7" && theorem_id != "Thm5";
  const bool connected = theorem_id == "Thm4" || theorem_id == "Thm5";

  std::vector<std::vector<Verdict>> per(opts.instances);
  detail::parallel_for(opts.instances, opts.threads, [&](std::size_t i) {
    RandomGraphSpec gs;
    gs.n_min = theorem_id == "Thm7" || theorem_id == "Thm3" ? 1 : 2;
    gs.n_max = opts.gamma_max;
    gs.p_min = 0.2;
    gs.p_max = 0.8;
    gs.seed = derive_seed(base, 2 * i);
    gs.isolate_free = needs_isolate_free_gamma;
    gs.connected = connected;
    RandomGraphSpec os = gs;
    os.n_min = theorem_id == "Thm2" || theorem_id == "Thm20" || connected ? 2 : 1;
    os.n_max = opts.omega_max;
    os.seed = derive_seed(base, 2 * i + 1);
    os.isolate_free = theorem_id == "Thm3";
    RandomGraphSource gsrc(gs), osrc(os);

    Graph gamma, omega;
    for (std::size_t attempt = 0;; ++attempt) {
      if (attempt == 1000) throw std::runtime_error("could not sample instance hypotheses");
      gamma = gsrc.next();
      omega = theorem_id == "Thm6" ? cycle(4) : osrc.next();
      if (product_hypotheses_hold(gamma, omega, theorem_id)) break;
    }
    for (Vertex root = 0; root < omega.order(); ++root) {
      Verdict part = check_rooted_product_membership(gamma, omega, root, theorem_id, opts.budget);
      if (part.evidence.tally) part.evidence.tally->instances = 0;
      per[i].push_back(std::move(part));
    }
  });

  std::vector<Verdict> flat;
  for (auto& p : per) {
    for (auto& x : p) flat.push_back(std::move(x));
  }
  return aggregate(std::string(theorem_id), flat, opts.instances);
}

Verdict run_bound_suite(std::string_view theorem_id, const SuiteOptions& opts) {
  require_bound_theorem(theorem_id);
  // All bound theorems see the same graph sample.
  const std::uint64_t base = opts.seed ^ id_hash("bound-suite");
  std::vector<Verdict> parts(opts.instances);
  detail::parallel_for(opts.instances, opts.threads, [&](std::size_t i) {
    RandomGraphSpec spec;
    spec.n_min = opts.bound_n_min;
    spec.n_max = opts.bound_n_max;
    spec.p_min = 0.2;
    spec.p_max = 0.8;
    spec.seed = derive_seed(base, i);
    spec.connected = true;
    parts[i] = check_bound_theorem(random_graph(spec), theorem_id, opts.budget);
  });
  return aggregate(std::string(theorem_id), parts, opts.instances);
}

HarnessReport run_checks(const std::vector<std::string>& claim_ids,
                         const std::vector<std::size_t>& levels, const SuiteOptions& opts) {
  std::vector<std::string> ids;
  const bool all = std::find(claim_ids.begin(), claim_ids.end(), "all") != claim_ids.end();
  if (all) {
    for (const auto& c : fcn_claims()) ids.push_back(c.id);
    for (const auto& t : product_theorem_ids()) ids.push_back(t);
    for (const auto& t : bound_theorem_ids()) ids.push_back(t);
    ids.push_back("Fig5");
  } else {
    ids = claim_ids;
  }

  HarnessReport report;
  report.seed = opts.seed;
  report.levels = levels;
  for (const auto& id : ids) {
    if (find_fcn_claim(id)) {
      const FcnClaim& c = *find_fcn_claim(id);
      bool any = false;
      for (std::size_t l : levels) {
        if (l < c.min_level || l > c.max_level) continue;
        report.verdicts.push_back(check_fcn_claim(id, l, opts.budget));
        any = true;
      }
      if (!any && !all) {
        Verdict v;
        v.claim_id = id;
        v.notes = "none of the requested levels is in the claim's range";
        report.verdicts.push_back(v);
      }
    } else if (std::find(product_theorem_ids().begin(), product_theorem_ids().end(), id) !=
               product_theorem_ids().end()) {
      report.verdicts.push_back(run_product_suite(id, opts));
    } else if (std::find(bound_theorem_ids().begin(), bound_theorem_ids().end(), id) !=
               bound_theorem_ids().end()) {
      report.verdicts.push_back(run_bound_suite(id, opts));
    } else if (id == "Fig5") {
      report.verdicts.push_back(check_figure5(opts.budget));
    } else {
      throw std::invalid_argument("unknown claim id '" + id + "'");
    }
  }
  return report;
}

}  // namespace fcnlab
