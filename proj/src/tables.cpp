#include "cayley_ricci/tables.hpp"

#include <algorithm>
#include <istream>
#include <set>
#include <sstream>

#include "cayley_ricci/cayley.hpp"
#include "cayley_ricci/error.hpp"
#include "cayley_ricci/metric.hpp"

namespace ricci {

namespace {

constexpr const char* kEmbeddedGolden =
#include "golden_tables.inc"
    ;

TableColumn parse_column(const std::string& token, std::size_t line_no) {
  if (token == "A") return TableColumn::TypeA;
  if (token == "B") return TableColumn::TypeB;
  if (token == "*") return TableColumn::AllEdges;
  throw Error(ErrorCode::ParseError, "golden line " + std::to_string(line_no) + ": unknown column '" + token + "'");
}

ComputedCell cell_for(const SweepResult& sweep, TableColumn column) {
  std::set<Rational> values;
  for (const auto& report : sweep.reports) {
    const bool wanted = column == TableColumn::AllEdges || (column == TableColumn::TypeA && report.type == EdgeType::A) ||
                        (column == TableColumn::TypeB && report.type == EdgeType::B);
    if (wanted) values.insert(report.kappa);
  }
  ComputedCell cell;
  cell.values.assign(values.begin(), values.end());
  if (cell.values.size() == 1) cell.value = cell.values.front();
  return cell;
}

}  // namespace

std::string_view to_string(TableColumn column) {
  switch (column) {
    case TableColumn::TypeA: return "A";
    case TableColumn::TypeB: return "B";
    case TableColumn::AllEdges: return "*";
  }
  return "?";
}

std::vector<TableSpec> parse_golden_tables(std::istream& in) {
  std::vector<TableSpec> tables;
  std::size_t line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    std::istringstream fields(line.substr(0, line.find('#')));
    std::vector<std::string> tokens;
    for (std::string t; fields >> t;) tokens.push_back(t);
    if (tokens.empty()) continue;
    if (tokens[0] == "version") {
      if (tokens.size() != 2 || tokens[1] != "1") {
        throw Error(ErrorCode::ParseError, "golden line " + std::to_string(line_no) + ": unsupported version");
      }
      continue;
    }
    if (tokens.size() != 5) {
      throw Error(ErrorCode::ParseError, "golden line " + std::to_string(line_no) + ": expected 5 fields");
    }
    int id = 0;
    try {
      id = std::stoi(tokens[0]);
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, "golden line " + std::to_string(line_no) + ": bad table id");
    }
    auto table = std::find_if(tables.begin(), tables.end(), [&](const TableSpec& t) { return t.id == id; });
    if (table == tables.end()) {
      tables.push_back({id, {}});
      table = std::prev(tables.end());
    }
    auto row = std::find_if(table->rows.begin(), table->rows.end(),
                            [&](const TableRow& r) { return r.group == tokens[1] && r.gens == tokens[2]; });
    if (row == table->rows.end()) {
      table->rows.push_back({tokens[1], tokens[2], {}});
      row = std::prev(table->rows.end());
    }
    if (tokens[3] == "-") continue;
    const TableColumn column = parse_column(tokens[3], line_no);
    if (!row->expected.emplace(column, Rational::parse(tokens[4])).second) {
      throw Error(ErrorCode::ParseError, "golden line " + std::to_string(line_no) + ": duplicate cell");
    }
  }
  std::sort(tables.begin(), tables.end(), [](const TableSpec& a, const TableSpec& b) { return a.id < b.id; });
  return tables;
}

const std::vector<TableSpec>& golden_tables() {
  static const std::vector<TableSpec> tables = [] {
    std::istringstream in(kEmbeddedGolden);
    return parse_golden_tables(in);
  }();
  return tables;
}

const TableSpec& golden_table(int id) {
  for (const auto& table : golden_tables()) {
    if (table.id == id) return table;
  }
  throw Error(ErrorCode::NotInTable, "no table with id " + std::to_string(id));
}

std::map<TableColumn, Rational> expected(int table_id, std::string_view group, std::string_view gens) {
  for (const auto& row : golden_table(table_id).rows) {
    if (row.group == group && row.gens == gens) return row.expected;
  }
  throw Error(ErrorCode::NotInTable, std::string(group) + " with " + std::string(gens) + " is not in table " +
                                         std::to_string(table_id));
}

ZmPrediction check_zm(int k, int n) {
  if (k < 2 || n <= k) {
    throw Error(ErrorCode::InvalidGroup, "check_zm needs n > k >= 2, got k = " + std::to_string(k) + ", n = " +
                                             std::to_string(n));
  }
  ZmPrediction p;
  p.type_a_zero = k >= 5 && n != 3 * k - 2 && n >= 2 * k + 4;
  const bool conditions[4] = {
      k >= 5 && 3 * k + 3 <= n && n <= 4 * k - 2,
      k >= 3 && 4 * k + 2 <= n && n <= 5 * k - 1,
      k >= 3 && n >= 5 * k + 1,
      k >= 6 && 2 * k + 4 <= n && n <= 3 * k - 3,
  };
  for (int i = 0; i < 4; ++i) {
    if (conditions[i]) {
      p.type_b_zero = true;
      p.condition = i + 1;
      break;
    }
  }
  return p;
}

TableReport reproduce_table(const TableSpec& table, const CurvatureOptions& options) {
  TableReport report;
  report.id = table.id;
  for (const auto& row : table.rows) {
    const CayleyGraph graph = build_cayley(row.group, row.gens);
    const SweepResult sweep = curvature_sweep(graph, all_pairs(graph), options);

    RowReport out{row.group, row.gens, {}, row.expected, true};
    for (TableColumn column : {TableColumn::TypeA, TableColumn::TypeB, TableColumn::AllEdges}) {
      ComputedCell cell = cell_for(sweep, column);
      if (cell.values.empty()) continue;
      out.computed[column] = std::move(cell);
    }
    for (const auto& [column, value] : row.expected) {
      const auto it = out.computed.find(column);
      const bool ok = it != out.computed.end() && it->second.value == value;
      if (!ok) {
        out.match = false;
        report.mismatches.push_back({row.group, row.gens, column, value,
                                     it == out.computed.end() ? std::vector<Rational>{} : it->second.values});
      }
    }
    report.rows.push_back(std::move(out));
  }
  return report;
}

TableReport reproduce_table(int table_id, const CurvatureOptions& options) {
  return reproduce_table(golden_table(table_id), options);
}

std::vector<ScanCell> scan_zm(int k_min, int k_max, int n_min, int n_max, const CurvatureOptions& options) {
  std::vector<ScanCell> cells;
  for (int k = std::max(2, k_min); k <= k_max; ++k) {
    for (int n = std::max(n_min, k + 1); n <= n_max; ++n) {
      const GroupSpec spec = GroupSpec::cyclic(n);
      const CayleyGraph graph = build_cayley(spec, make_generators(spec, "s1k:" + std::to_string(k)));
      const SweepResult sweep = curvature_sweep(graph, all_pairs(graph), options);

      ScanCell cell;
      cell.k = k;
      cell.n = n;
      cell.type_a = cell_for(sweep, TableColumn::TypeA);
      cell.type_b = cell_for(sweep, TableColumn::TypeB);
      cell.prediction = check_zm(k, n);
      if (cell.prediction.type_a_zero && cell.type_a.value != Rational(0)) cell.agrees = false;
      if (cell.prediction.type_b_zero && cell.type_b.value != Rational(0)) cell.agrees = false;
      cells.push_back(std::move(cell));
    }
  }
  return cells;
}

}  // namespace ricci
