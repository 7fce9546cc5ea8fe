#include "cli.hpp"

#include "fcnlab/constructions.hpp"
#include "fcnlab/generators.hpp"
#include "fcnlab/graph_io.hpp"
#include "fcnlab/harness.hpp"
#include "fcnlab/random_graph.hpp"
#include "fcnlab/solvers.hpp"
#include "fcnlab/table.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <ostream>
#include <set>
#include <sstream>

namespace fcnlab::cli {

namespace {

using Json = nlohmann::ordered_json;

/// Raised for bad option values that CLI11 can't validate on its own.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

double default_budget() {
  if (const char* env = std::getenv("FCNLAB_BUDGET_SECS")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return 60.0;
}

Budget make_budget(double seconds, bool exhaustive) {
  if (exhaustive) return Budget::exhaustive();
  return Budget::seconds(seconds);
}

ParameterKind kind_arg(const std::string& name) {
  try {
    return parse_kind(name);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

Graph load_graph(const std::string& path) {
  try {
    return read_graph_file(path);
  } catch (const std::exception& e) {
    throw UsageError(path + ": " + e.what());
  }
}

void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
  } else {
    write_text_file(path, text);
  }
}

void write_json(const std::string& path, const Json& doc) {
  if (!path.empty()) write_text_file(path, doc.dump(2) + "\n");
}

struct Options {
  // shared
  std::string json_out;
  double budget = default_budget();
  bool exhaustive = false;
  unsigned threads = 1;
  // generate / product
  std::string family = "fcn";
  std::size_t level = 0;
  std::size_t n = 4;
  std::size_t n_max = 0;
  double p = 0.5;
  bool connected = false;
  std::optional<std::uint64_t> seed;
  std::string format = "json";
  std::string output;
  std::string gamma_path, omega_path, root;
  bool concat = false;
  // solve / verify / construct
  std::string param;
  std::string graph_path;
  std::string cert_path;
  std::string emit_cert;
  std::string variant = "literal";
  // check / table
  std::vector<std::string> claims;
  std::string levels = "0..2";
  std::string report_path;
  std::size_t instances = 200;
};

int do_generate(const Options& o, std::ostream& out) {
  Graph g;
  if (o.family == "fcn") {
    g = fcn(o.level);
  } else if (o.family == "cycle") {
    g = cycle(o.n);
  } else if (o.family == "path") {
    g = path(o.n);
  } else if (o.family == "complete") {
    g = complete(o.n);
  } else if (o.family == "hypercube") {
    g = hypercube(o.n);
  } else if (o.family == "random") {
    if (!o.seed) throw UsageError("--family random needs an explicit --seed");
    RandomGraphSpec spec;
    spec.n_min = o.n;
    spec.n_max = std::max(o.n, o.n_max);
    spec.p_min = spec.p_max = o.p;
    spec.seed = *o.seed;
    spec.connected = o.connected;
    g = random_graph(spec);
  } else {
    throw UsageError("unknown family '" + o.family + "'");
  }
  emit(o.output, export_graph(g, parse_graph_format(o.format)), out);
  write_json(o.json_out, Json{{"name", g.name()},
                              {"order", g.order()},
                              {"size", g.size()},
                              {"digest", graph_digest(g)}});
  return kOk;
}

int do_product(const Options& o, std::ostream& out) {
  const Graph gamma = load_graph(o.gamma_path);
  const Graph omega = load_graph(o.omega_path);
  RootSpec root = o.root;
  if (!omega.has_labels()) {
    try {
      root = static_cast<Vertex>(std::stoul(o.root));
    } catch (const std::exception&) {
      throw UsageError("root '" + o.root + "' is not a vertex index of the unlabelled omega");
    }
  }
  Graph g;
  try {
    g = rooted_product(gamma, omega, root);
  } catch (const GraphError& e) {
    throw UsageError(e.what());
  }
  if (o.concat) g = concatenate_product_labels(g);
  emit(o.output, export_graph(g, parse_graph_format(o.format)), out);
  write_json(o.json_out, Json{{"name", g.name()},
                              {"order", g.order()},
                              {"size", g.size()},
                              {"digest", graph_digest(g)}});
  return kOk;
}

int do_solve(const Options& o, std::ostream& out) {
  const ParameterKind kind = kind_arg(o.param);
  const Graph g = load_graph(o.graph_path);
  SolverResult r;
  try {
    r = min_param(g, kind, make_budget(o.budget, o.exhaustive));
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const std::string doc = solver_result_to_json(r, g, true);
  out << kind_name(kind) << " on " << g.name() << ": ";
  switch (r.status) {
    case SolveStatus::Exact: out << r.value << " (exact)\n"; break;
    case SolveStatus::Infeasible: out << "no vertex set has this property\n"; break;
    case SolveStatus::BoundsOnly:
      out << "between " << r.lower << " and "
          << (r.upper ? std::to_string(*r.upper) : std::string("?")) << " (budget exhausted)\n";
      break;
  }
  if (!o.emit_cert.empty() && r.witness) {
    write_text_file(o.emit_cert, certificate_to_json(*r.witness, g));
  }
  if (!o.json_out.empty()) write_text_file(o.json_out, doc);
  return r.status == SolveStatus::BoundsOnly ? kUndecided : kOk;
}

int do_verify(const Options& o, std::ostream& out) {
  const ParameterKind kind = kind_arg(o.param);
  const Graph g = load_graph(o.graph_path);
  Certificate cert;
  try {
    cert = parse_certificate(read_text_file(o.cert_path), g);
  } catch (const ParseError& e) {
    throw UsageError(o.cert_path + ": " + e.what());
  }
  CertificateCheck res;
  if (cert.kind != kind) {
    res.message = "certificate is for " + std::string(kind_name(cert.kind)) + ", not " +
                  std::string(kind_name(kind));
  } else {
    res = verify_certificate(cert, g);
  }
  out << (res.ok ? "OK" : "FAIL") << ": " << kind_name(kind) << " certificate of size "
      << cert.vertices.size() << " on " << g.name()
      << (res.message.empty() ? "" : " (" + res.message + ")") << "\n";
  write_json(o.json_out, Json{{"kind", std::string(kind_name(kind))},
                              {"graph_digest", graph_digest(g)},
                              {"size", cert.vertices.size()},
                              {"ok", res.ok},
                              {"message", res.message}});
  return res.ok ? kOk : kFailure;
}

int do_construct(const Options& o, std::ostream& out, std::ostream& err) {
  const ParameterKind kind = kind_arg(o.param);
  ConstructionVariant variant;
  Certificate cert;
  try {
    variant = parse_variant(o.variant);
    cert = construct(kind, o.level, variant);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const Graph g = fcn(o.level);
  const auto violation = find_violation(kind, g, cert.vertices);
  const std::string text = certificate_to_json(cert, g);
  emit(o.emit_cert, text, out);
  const auto formula = formula_value(kind, o.level);
  std::ostream& log = o.emit_cert.empty() || o.emit_cert == "-" ? err : out;
  log << kind_name(kind) << " construction (" << variant_name(variant) << ") on FCN(" << o.level
      << "): " << cert.vertices.size() << " vertices, "
      << (violation ? "FAILS: " + *violation : std::string("verifies"));
  if (formula) {
    log << "; formula value " << *formula;
    if (*formula != cert.vertices.size()) log << " (size differs)";
  }
  log << "\n";
  write_json(o.json_out, Json{{"kind", std::string(kind_name(kind))},
                              {"level", o.level},
                              {"variant", std::string(variant_name(variant))},
                              {"size", cert.vertices.size()},
                              {"formula_value", formula ? Json(*formula) : Json(nullptr)},
                              {"valid", !violation},
                              {"violation", violation ? Json(*violation) : Json(nullptr)}});
  return violation ? kFailure : kOk;
}

bool needs_sampling(const std::vector<std::string>& ids) {
  for (const auto& id : ids) {
    if (id == "all") return true;
    const auto& p = product_theorem_ids();
    const auto& b = bound_theorem_ids();
    if (std::find(p.begin(), p.end(), id) != p.end()) return true;
    if (std::find(b.begin(), b.end(), id) != b.end()) return true;
  }
  return false;
}

int do_check(const Options& o, std::ostream& out) {
  std::vector<std::string> ids;
  for (const auto& c : o.claims) {
    std::stringstream ss(c);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (!item.empty()) ids.push_back(item);
    }
  }
  if (ids.empty()) throw UsageError("--claim needs at least one id (or 'all')");
  for (const auto& id : ids) {
    const auto& p = product_theorem_ids();
    const auto& b = bound_theorem_ids();
    if (id != "all" && id != "Fig5" && !find_fcn_claim(id) &&
        std::find(p.begin(), p.end(), id) == p.end() &&
        std::find(b.begin(), b.end(), id) == b.end()) {
      throw UsageError("unknown claim id '" + id + "'");
    }
  }
  if (needs_sampling(ids) && !o.seed) {
    throw UsageError("sampled claims need an explicit --seed");
  }
  SuiteOptions opts;
  opts.seed = o.seed.value_or(0);
  opts.threads = o.threads;
  opts.instances = o.instances;
  opts.budget = make_budget(o.budget, o.exhaustive);
  const HarnessReport report = run_checks(ids, parse_levels(o.levels), opts);
  out << report_to_text(report);
  const std::string doc = report_to_json(report);
  if (!o.report_path.empty()) write_text_file(o.report_path, doc);
  if (!o.json_out.empty()) write_text_file(o.json_out, doc);

  bool refuted = false, undecided = false;
  for (const auto& v : report.verdicts) {
    refuted = refuted || v.status == VerdictStatus::Refuted;
    undecided = undecided || v.status == VerdictStatus::Undecided;
  }
  if (refuted) return kFailure;
  return undecided ? kUndecided : kOk;
}

int do_table(const Options& o, std::ostream& out) {
  const auto rows = build_table(parse_levels(o.levels), make_budget(o.budget, false), o.threads);
  out << table_to_text(rows);
  if (!o.json_out.empty()) write_text_file(o.json_out, table_to_json(rows));
  for (const auto& row : rows) {
    for (const auto& c : row.cells) {
      if (c.oracle_status == SolveStatus::BoundsOnly) return kUndecided;
    }
  }
  return kOk;
}

}  // namespace

std::vector<std::size_t> parse_levels(const std::string& text) {
  std::set<std::size_t> levels;
  std::stringstream ss(text);
  std::string part;
  auto number = [&](const std::string& s) -> std::size_t {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); })) {
      throw UsageError("bad level '" + s + "' in '" + text + "'");
    }
    const auto v = std::stoul(s);
    if (v > 7) throw UsageError("level " + s + " is above the supported maximum 7");
    return v;
  };
  while (std::getline(ss, part, ',')) {
    const auto dots = part.find("..");
    if (dots == std::string::npos) {
      levels.insert(number(part));
    } else {
      const auto lo = number(part.substr(0, dots)), hi = number(part.substr(dots + 2));
      if (lo > hi) throw UsageError("empty level range '" + part + "'");
      for (auto l = lo; l <= hi; ++l) levels.insert(l);
    }
  }
  if (levels.empty()) throw UsageError("no levels given");
  return {levels.begin(), levels.end()};
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"fcnlab: domination and resolving parameters of fractal cubic networks"};
  app.require_subcommand(1);
  Options o;

  auto add_budget = [&](CLI::App* sc) {
    sc->add_option("--budget", o.budget, "Wall-clock budget per solve in seconds")
        ->check(CLI::PositiveNumber);
  };
  auto add_json = [&](CLI::App* sc) {
    sc->add_option("--json", o.json_out, "Also write the result as JSON to FILE");
  };
  const std::vector<std::string> formats{"json", "dot", "edges"};

  auto* gen = app.add_subcommand("generate", "Write a graph family member");
  gen->add_option("--family", o.family, "fcn, cycle, path, complete, hypercube or random")
      ->check(CLI::IsMember({"fcn", "cycle", "path", "complete", "hypercube", "random"}));
  gen->add_option("--level", o.level, "FCN level")->check(CLI::Range(0, 7));
  gen->add_option("--n", o.n, "Order (hypercube: dimension; random: minimum order)");
  gen->add_option("--n-max", o.n_max, "Random graphs: maximum order");
  gen->add_option("--p", o.p, "Random graphs: edge probability")->check(CLI::Range(0.0, 1.0));
  gen->add_flag("--connected", o.connected, "Random graphs: resample until connected");
  gen->add_option("--seed", o.seed, "Random graphs: seed (required)");
  gen->add_option("--format", o.format)->check(CLI::IsMember(formats));
  gen->add_option("--output,-o", o.output, "Output file (default stdout)");
  add_json(gen);

  auto* prod = app.add_subcommand("product", "Rooted product of two graph files");
  prod->add_option("--gamma", o.gamma_path)->required();
  prod->add_option("--omega", o.omega_path)->required();
  prod->add_option("--root", o.root, "Root vertex of omega (label or index)")->required();
  prod->add_flag("--concat-labels", o.concat, "Label vertices gw instead of g:w");
  prod->add_option("--format", o.format)->check(CLI::IsMember(formats));
  prod->add_option("--output,-o", o.output);
  add_json(prod);

  auto* solve = app.add_subcommand("solve", "Minimum set size for a parameter");
  solve->add_option("--param", o.param)->required();
  solve->add_option("--graph", o.graph_path)->required();
  add_budget(solve);
  solve->add_flag("--exhaustive", o.exhaustive, "Ignore the budget (graphs up to 20 vertices)");
  solve->add_option("--emit-cert", o.emit_cert, "Write the witness certificate to FILE");
  add_json(solve);

  auto* verify = app.add_subcommand("verify", "Check a certificate against a graph");
  verify->add_option("--param", o.param)->required();
  verify->add_option("--graph", o.graph_path)->required();
  verify->add_option("--cert", o.cert_path)->required();
  add_json(verify);

  auto* cons = app.add_subcommand("construct", "Explicit set for FCN(l)");
  cons->add_option("--param", o.param)->required();
  cons->add_option("--level", o.level)->required()->check(CLI::Range(1, 7));
  cons->add_option("--variant", o.variant, "literal or twin-closure (TWODOM/RDOM/RIDOM)");
  cons->add_option("--emit-cert", o.emit_cert, "Certificate file (default stdout)");
  add_json(cons);

  auto* check = app.add_subcommand("check", "Adjudicate claims");
  check->add_option("--claim", o.claims, "Claim id, comma list, or all")->required();
  check->add_option("--levels", o.levels, "FCN levels, e.g. 0..2");
  check->add_option("--seed", o.seed, "Sampling seed (required for sampled claims)");
  add_budget(check);
  check->add_option("--instances", o.instances, "Samples per general-graph theorem")
      ->check(CLI::PositiveNumber);
  check->add_option("--threads", o.threads)->check(CLI::PositiveNumber);
  check->add_option("--report", o.report_path, "Write the JSON report to FILE");
  add_json(check);

  auto* table = app.add_subcommand("table", "Formula, construction and solver side by side");
  table->add_option("--levels", o.levels);
  add_budget(table);
  table->add_option("--threads", o.threads)->check(CLI::PositiveNumber);
  add_json(table);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    if (!app.get_subcommands().empty()) err << app.get_subcommands().front()->help();
    return kUsage;
  }

  try {
    if (gen->parsed()) return do_generate(o, out);
    if (prod->parsed()) return do_product(o, out);
    if (solve->parsed()) return do_solve(o, out);
    if (verify->parsed()) return do_verify(o, out);
    if (cons->parsed()) return do_construct(o, out, err);
    if (check->parsed()) return do_check(o, out);
    if (table->parsed()) return do_table(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kUsage;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.push_back("fcnlab");
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace fcnlab::cli
