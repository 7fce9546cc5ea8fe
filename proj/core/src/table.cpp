#include "fcnlab/table.hpp"

#include "fcnlab/constructions.hpp"
#include "fcnlab/generators.hpp"
#include "parallel.hpp"

#include <json.hpp>

#include <iomanip>
#include <sstream>

namespace fcnlab {

std::string TableCell::oracle_text() const {
  switch (oracle_status) {
    case SolveStatus::Exact: return std::to_string(oracle_lower);
    case SolveStatus::Infeasible: return "none";
    case SolveStatus::BoundsOnly:
      return "[" + std::to_string(oracle_lower) + "," +
             (oracle_upper ? std::to_string(*oracle_upper) : "?") + "]";
  }
  return "?";
}

namespace {

TableCell solve_cell(const Graph& g, std::size_t level, ParameterKind kind, const Budget& budget) {
  TableCell c;
  c.kind = kind;
  c.formula = formula_value(kind, level);
  if (has_construction(kind) && level >= 1) {
    const Certificate cert = construct(kind, level);
    c.constructed_valid = check(kind, g, cert.vertices);
    if (c.constructed_valid) c.constructed_size = cert.vertices.size();
  }
  const SolverResult r = min_param(g, kind, budget);
  c.oracle_status = r.status;
  c.oracle_lower = r.lower;
  c.oracle_upper = r.upper;
  if (r.status == SolveStatus::BoundsOnly && needs_resolving(kind)) {
    c.oracle_lower = std::max(c.oracle_lower, dim_lower_bound_twins(g));
  }
  if (r.status == SolveStatus::BoundsOnly && c.constructed_size &&
      (!c.oracle_upper || *c.constructed_size < *c.oracle_upper)) {
    c.oracle_upper = c.constructed_size;
  }
  if (r.status == SolveStatus::BoundsOnly && c.oracle_upper && *c.oracle_upper == c.oracle_lower) {
    c.oracle_status = SolveStatus::Exact;
  }

  std::vector<std::size_t> present;
  if (c.formula) present.push_back(*c.formula);
  if (c.constructed_size) present.push_back(*c.constructed_size);
  bool ok = !(has_construction(kind) && level >= 1 && !c.constructed_valid);
  if (c.oracle_status == SolveStatus::Exact) present.push_back(c.oracle_lower);
  else ok = false;
  for (auto x : present) ok = ok && x == present.front();
  c.agreement = ok;
  return c;
}

}  // namespace

std::vector<TableRow> build_table(const std::vector<std::size_t>& levels, const Budget& budget,
                                  unsigned threads) {
  std::vector<TableRow> rows(levels.size());
  std::vector<Graph> graphs;
  for (std::size_t i = 0; i < levels.size(); ++i) {
    rows[i].level = levels[i];
    rows[i].cells.resize(kAllKinds.size());
    graphs.push_back(fcn(levels[i]));
  }
  const std::size_t per_row = kAllKinds.size();
  detail::parallel_for(levels.size() * per_row, threads, [&](std::size_t job) {
    const std::size_t r = job / per_row, k = job % per_row;
    rows[r].cells[k] = solve_cell(graphs[r], levels[r], kAllKinds[k], budget);
  });
  return rows;
}

std::string table_to_json(const std::vector<TableRow>& rows) {
  nlohmann::ordered_json doc = nlohmann::ordered_json::array();
  for (const auto& row : rows) {
    nlohmann::ordered_json jr;
    jr["level"] = row.level;
    nlohmann::ordered_json cells = nlohmann::ordered_json::object();
    for (const auto& c : row.cells) {
      nlohmann::ordered_json jc;
      jc["formula"] = c.formula ? nlohmann::ordered_json(*c.formula) : nullptr;
      jc["constructed_size"] =
          c.constructed_size ? nlohmann::ordered_json(*c.constructed_size) : nullptr;
      jc["oracle_status"] = std::string(status_name(c.oracle_status));
      jc["oracle_lower"] = c.oracle_lower;
      jc["oracle_upper"] = c.oracle_upper ? nlohmann::ordered_json(*c.oracle_upper) : nullptr;
      jc["agreement"] = c.agreement;
      cells[std::string(kind_name(c.kind))] = jc;
    }
    jr["cells"] = cells;
    doc.push_back(jr);
  }
  return doc.dump(2) + "\n";
}

std::string table_to_text(const std::vector<TableRow>& rows) {
  std::ostringstream out;
  // Cell: formula/constructed/oracle, '*' marks agreement.
  out << "cells are formula/constructed/solver; * = all present entries agree\n";
  out << std::left << std::setw(7) << "level";
  for (auto k : kAllKinds) out << std::setw(18) << kind_name(k);
  out << "\n";
  for (const auto& row : rows) {
    out << std::setw(7) << row.level;
    for (const auto& c : row.cells) {
      std::string s = (c.formula ? std::to_string(*c.formula) : "-") + "/" +
                      (c.constructed_size ? std::to_string(*c.constructed_size) : "-") + "/" +
                      c.oracle_text() + (c.agreement ? "*" : "");
      out << std::setw(18) << s;
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace fcnlab
