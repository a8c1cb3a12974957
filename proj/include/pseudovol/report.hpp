#pragma once
// The reproduction table: every pinned constant and invariance sweep of the
// library evaluated end to end, with per-row pass/fail at pinned tolerances.
// Shared by the command-line `constants` command and the acceptance runner.

#include <cstdint>
#include <string>
#include <vector>

#include "pseudovol/core.hpp"

namespace pseudovol {

struct ReportConfig {
  double tolerance_override = 0.0;  // <= 0: use each row's pinned tolerance
  int n_tor = 256;                  // trapezoid order for generic torus averages
  std::uint64_t seed = 20260825;    // drives the randomized sweeps
  std::vector<int> rows;            // empty: all 16
};

// One scalar check inside a row. `relative` selects how `tol` is applied;
// rows that count exact mismatches use computed = count, expected = 0.
struct CheckItem {
  std::string name;
  double computed = 0.0;
  double expected = 0.0;
  double tol = 0.0;
  bool relative = false;
  double abs_err = 0.0;
  double rel_err = 0.0;
  bool pass = false;
};

struct ConstantRow {
  int index = 0;  // 1-based criterion number
  std::string name;
  std::vector<CheckItem> items;
  bool pass = false;
  // the item with the largest tolerance-normalized error
  double computed = 0.0;
  double expected = 0.0;
  double abs_err = 0.0;
  double rel_err = 0.0;
};

// Evaluates the requested rows (all 16 by default) in index order.
std::vector<ConstantRow> reproduction_table(const ReportConfig& config);

// Renderers used by the CLI. All are deterministic byte-for-byte.
std::string render_pretty(const std::vector<ConstantRow>& rows);
std::string render_json(const std::vector<ConstantRow>& rows);
std::string render_csv(const std::vector<ConstantRow>& rows);

bool all_pass(const std::vector<ConstantRow>& rows);

}  // namespace pseudovol
