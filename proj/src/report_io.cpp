#include "cayley_ricci/report_io.hpp"

#include <sstream>

#include "cayley_ricci/error.hpp"
#include "cayley_ricci/groups.hpp"

namespace ricci {

using nlohmann::ordered_json;

namespace {

std::string cell_string(const ComputedCell& cell) {
  if (cell.value) return cell.value->to_string();
  if (cell.values.empty()) return "-";
  std::string out;
  for (const auto& v : cell.values) out += (out.empty() ? "" : "|") + v.to_string();
  return out;
}

std::string cell_string(const RowReport& row, TableColumn column) {
  const auto it = row.computed.find(column);
  return it == row.computed.end() ? "-" : cell_string(it->second);
}

ordered_json cell_json(const ComputedCell& cell) {
  if (cell.value) return rational_json(*cell.value);
  if (cell.values.empty()) return nullptr;
  ordered_json values = ordered_json::array();
  for (const auto& v : cell.values) values.push_back(rational_json(v));
  return values;
}

// Column heading n: the dihedral parameter, otherwise the group order.
int table_n(const std::string& group) {
  const GroupSpec spec = GroupSpec::parse(group);
  return spec.kind() == GroupKind::Dihedral ? spec.parameter() : spec.order();
}

int gens_k(const std::string& gens) {
  const auto colon = gens.find(':');
  return colon == std::string::npos ? 0 : std::stoi(gens.substr(colon + 1));
}

std::string type_key(EdgeType type) { return std::string(to_string(type)); }

}  // namespace

ordered_json rational_json(const Rational& r) { return r.to_string(); }

Rational rational_from_json(const ordered_json& j) {
  if (!j.is_string()) throw Error(ErrorCode::ParseError, "rational must be a \"num/den\" string");
  return Rational::parse(j.get<std::string>());
}

ordered_json curvature_json(const CayleyGraph& graph, const std::string& gens, const SweepResult& sweep) {
  ordered_json out;
  out["group"] = graph.spec().to_string();
  out["gens"] = gens;
  out["vertices"] = graph.vertex_count();
  out["edges"] = graph.edges().size();
  ordered_json kappa = ordered_json::object();
  for (const auto& [type, summary] : sweep.summary) {
    if (summary.uniform()) {
      kappa[type_key(type)] = rational_json(summary.values.front());
    } else {
      ordered_json values = ordered_json::array();
      for (const auto& v : summary.values) values.push_back(rational_json(v));
      kappa[type_key(type)] = values;
    }
  }
  out["kappa"] = kappa;
  ordered_json edges = ordered_json::array();
  for (const auto& r : sweep.reports) {
    edges.push_back({{"u", graph.label(r.u)},
                     {"v", graph.label(r.v)},
                     {"type", type_key(r.type)},
                     {"kappa", rational_json(r.kappa)}});
  }
  out["edge_curvatures"] = edges;
  return out;
}

std::string curvature_csv(const CayleyGraph& graph, const SweepResult& sweep) {
  std::ostringstream out;
  out << "u,v,type,kappa\n";
  for (const auto& r : sweep.reports) {
    out << graph.label(r.u) << ',' << graph.label(r.v) << ',' << to_string(r.type) << ',' << r.kappa << '\n';
  }
  return out.str();
}

std::string curvature_text(const CayleyGraph& graph, const std::string& gens, const SweepResult& sweep) {
  std::ostringstream out;
  out << graph.spec().to_string() << " gens " << gens << ": " << graph.vertex_count() << " vertices, "
      << graph.edges().size() << " edges\n";
  for (const auto& [type, summary] : sweep.summary) {
    out << "  type " << to_string(type) << " (" << summary.edge_count << " edges): kappa =";
    for (const auto& v : summary.values) out << ' ' << v;
    out << '\n';
  }
  return out.str();
}

ordered_json table_json(const TableReport& report) {
  ordered_json out;
  out["table"] = report.id;
  out["match"] = report.all_match();
  ordered_json rows = ordered_json::array();
  for (const auto& row : report.rows) {
    ordered_json r;
    r["group"] = row.group;
    r["gens"] = row.gens;
    ordered_json computed = ordered_json::object();
    for (const auto& [column, cell] : row.computed) computed[std::string(to_string(column))] = cell_json(cell);
    r["computed"] = computed;
    ordered_json expected = ordered_json::object();
    for (const auto& [column, value] : row.expected) expected[std::string(to_string(column))] = rational_json(value);
    r["expected"] = expected;
    r["match"] = row.match;
    rows.push_back(r);
  }
  out["rows"] = rows;
  ordered_json mismatches = ordered_json::array();
  for (const auto& m : report.mismatches) {
    ordered_json computed = ordered_json::array();
    for (const auto& v : m.computed) computed.push_back(rational_json(v));
    mismatches.push_back({{"group", m.group},
                          {"gens", m.gens},
                          {"column", std::string(to_string(m.column))},
                          {"expected", rational_json(m.expected)},
                          {"computed", computed}});
  }
  out["mismatches"] = mismatches;
  return out;
}

std::string table_csv(const TableReport& report) {
  std::ostringstream out;
  if (report.id == 0) {
    out << "n,gens,kappa\n";
    for (const auto& row : report.rows) {
      out << table_n(row.group) << ',' << row.gens << ',' << cell_string(row, TableColumn::AllEdges) << '\n';
    }
  } else if (report.id == 10) {
    out << "k,n,typeA,typeB\n";
    for (const auto& row : report.rows) {
      out << gens_k(row.gens) << ',' << table_n(row.group) << ',' << cell_string(row, TableColumn::TypeA) << ','
          << cell_string(row, TableColumn::TypeB) << '\n';
    }
  } else {
    out << "n,typeA,typeB\n";
    for (const auto& row : report.rows) {
      out << table_n(row.group) << ',' << cell_string(row, TableColumn::TypeA) << ','
          << cell_string(row, TableColumn::TypeB) << '\n';
    }
  }
  return out.str();
}

std::string table_text(const TableReport& report) {
  std::ostringstream out;
  out << "table " << report.id << ": " << report.rows.size() << " rows, " << report.mismatches.size()
      << " mismatches\n";
  for (const auto& row : report.rows) {
    out << "  " << (row.match ? "ok  " : "FAIL") << ' ' << row.group << ' ' << row.gens;
    for (const auto& [column, cell] : row.computed) out << "  " << to_string(column) << '=' << cell_string(cell);
    out << '\n';
  }
  return out.str();
}

std::string mismatch_csv(const TableReport& report) {
  std::ostringstream out;
  for (const auto& m : report.mismatches) {
    std::string computed;
    for (const auto& v : m.computed) computed += (computed.empty() ? "" : "|") + v.to_string();
    out << report.id << ',' << m.group << ',' << m.gens << ',' << to_string(m.column) << ',' << m.expected << ','
        << (computed.empty() ? "-" : computed) << '\n';
  }
  return out.str();
}

ordered_json scan_json(const std::vector<ScanCell>& cells) {
  ordered_json out;
  bool all = true;
  ordered_json rows = ordered_json::array();
  for (const auto& c : cells) {
    all = all && c.agrees;
    ordered_json r;
    r["k"] = c.k;
    r["n"] = c.n;
    r["A"] = cell_json(c.type_a);
    r["B"] = cell_json(c.type_b);
    r["predicted_A_zero"] = c.prediction.type_a_zero;
    r["predicted_B_zero"] = c.prediction.type_b_zero;
    r["condition"] = c.prediction.condition ? ordered_json(*c.prediction.condition) : ordered_json(nullptr);
    r["agrees"] = c.agrees;
    rows.push_back(r);
  }
  out["agrees"] = all;
  out["cells"] = rows;
  return out;
}

std::string scan_csv(const std::vector<ScanCell>& cells) {
  std::ostringstream out;
  out << "k,n,typeA,typeB,predA0,predB0,condition,agrees\n";
  for (const auto& c : cells) {
    out << c.k << ',' << c.n << ',' << cell_string(c.type_a) << ',' << cell_string(c.type_b) << ','
        << c.prediction.type_a_zero << ',' << c.prediction.type_b_zero << ','
        << (c.prediction.condition ? std::to_string(*c.prediction.condition) : "-") << ',' << c.agrees << '\n';
  }
  return out.str();
}

std::string scan_text(const std::vector<ScanCell>& cells) {
  std::size_t disagreements = 0;
  std::ostringstream body;
  for (const auto& c : cells) {
    if (c.agrees) continue;
    ++disagreements;
    body << "  k=" << c.k << " n=" << c.n << " A=" << cell_string(c.type_a) << " B=" << cell_string(c.type_b)
         << " predicted zero:" << (c.prediction.type_a_zero ? " A" : "") << (c.prediction.type_b_zero ? " B" : "")
         << '\n';
  }
  std::ostringstream out;
  out << "scan: " << cells.size() << " cells, " << disagreements << " disagreements\n" << body.str();
  return out.str();
}

}  // namespace ricci
