#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cayley_ricci/curvature.hpp"
#include "cayley_ricci/rational.hpp"

namespace ricci {

enum class TableColumn { TypeA, TypeB, AllEdges };

std::string_view to_string(TableColumn column);

struct TableRow {
  std::string group;  // "D:6"
  std::string gens;   // "sigma-tau"
  std::map<TableColumn, Rational> expected;
};

struct TableSpec {
  int id = 0;
  std::vector<TableRow> rows;  // asset order
};

/// Parses the golden asset format (see data/golden_tables.txt). Throws ParseError.
std::vector<TableSpec> parse_golden_tables(std::istream& in);

/// The asset compiled into the library.
const std::vector<TableSpec>& golden_tables();
const TableSpec& golden_table(int id);  // NotInTable

/// Throws NotInTable when the row is not listed.
std::map<TableColumn, Rational> expected(int table_id, std::string_view group, std::string_view gens);

struct ZmPrediction {
  bool type_a_zero = false;
  bool type_b_zero = false;
  /// First of the four type B conditions that holds, 1-based.
  std::optional<int> condition;
};

/// Pure integer predicate for Z/nZ with {+-1, +-k}:
///   type A vanishes if k >= 5, n != 3k - 2, n >= 2k + 4;
///   type B vanishes under any of
///     1. k >= 5, 3k + 3 <= n <= 4k - 2
///     2. k >= 3, 4k + 2 <= n <= 5k - 1
///     3. k >= 3, n >= 5k + 1
///     4. k >= 6, 2k + 4 <= n <= 3k - 3
/// Requires n > k >= 2 (InvalidGroup otherwise).
ZmPrediction check_zm(int k, int n);

struct ComputedCell {
  /// Common curvature of the column's edges; nullopt when absent or non-uniform.
  std::optional<Rational> value;
  /// Every distinct value seen, for diagnostics.
  std::vector<Rational> values;
};

struct RowReport {
  std::string group;
  std::string gens;
  std::map<TableColumn, ComputedCell> computed;
  std::map<TableColumn, Rational> expected;
  bool match = true;
};

struct CellMismatch {
  std::string group;
  std::string gens;
  TableColumn column;
  Rational expected;
  std::vector<Rational> computed;
};

struct TableReport {
  int id = 0;
  std::vector<RowReport> rows;
  std::vector<CellMismatch> mismatches;  // every failing cell
  bool all_match() const { return mismatches.empty(); }
};

/// Sweeps every row's graph and compares each expected cell exactly; never
/// stops at the first mismatch.
TableReport reproduce_table(const TableSpec& table, const CurvatureOptions& options = {});
TableReport reproduce_table(int table_id, const CurvatureOptions& options = {});

struct ScanCell {
  int k = 0;
  int n = 0;
  ComputedCell type_a;
  ComputedCell type_b;
  ZmPrediction prediction;
  /// False when a predicted zero is contradicted by the computed value.
  bool agrees = true;
};

/// Exhaustive exact curvature of Z/nZ with S_{1,k} over k_min..k_max and
/// n in [max(n_min, k + 1), n_max].
std::vector<ScanCell> scan_zm(int k_min, int k_max, int n_min, int n_max, const CurvatureOptions& options = {});

}  // namespace ricci
