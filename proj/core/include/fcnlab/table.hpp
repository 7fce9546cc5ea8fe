#ifndef FCNLAB_TABLE_HPP
#define FCNLAB_TABLE_HPP

#include "fcnlab/solvers.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fcnlab {

struct TableCell {
  ParameterKind kind = ParameterKind::DOM;
  std::optional<std::size_t> formula;
  /// Size of the literal construction, when it exists and verifies.
  std::optional<std::size_t> constructed_size;
  bool constructed_valid = false;
  SolveStatus oracle_status = SolveStatus::BoundsOnly;
  std::size_t oracle_lower = 0;
  std::optional<std::size_t> oracle_upper;
  /// All present entries equal (an interval oracle is never "equal").
  bool agreement = false;

  std::string oracle_text() const;
};

struct TableRow {
  std::size_t level = 0;
  std::vector<TableCell> cells;  // one per kind, in kAllKinds order
};

/// One row per level; every cell solved under `budget`, cells fanned out
/// over `threads` workers.
std::vector<TableRow> build_table(const std::vector<std::size_t>& levels, const Budget& budget,
                                  unsigned threads = 1);

std::string table_to_json(const std::vector<TableRow>& rows);
std::string table_to_text(const std::vector<TableRow>& rows);

}  // namespace fcnlab

#endif  // FCNLAB_TABLE_HPP
