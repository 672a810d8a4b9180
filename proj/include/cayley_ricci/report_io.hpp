#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "cayley_ricci/cayley.hpp"
#include "cayley_ricci/curvature.hpp"
#include "cayley_ricci/tables.hpp"

namespace ricci {

// Every Rational is written as the string "num/den" in lowest terms, never as
// a float, so parsing and re-serializing a report is the identity.

nlohmann::ordered_json rational_json(const Rational& r);
Rational rational_from_json(const nlohmann::ordered_json& j);  // ParseError

nlohmann::ordered_json curvature_json(const CayleyGraph& graph, const std::string& gens, const SweepResult& sweep);
std::string curvature_csv(const CayleyGraph& graph, const SweepResult& sweep);
std::string curvature_text(const CayleyGraph& graph, const std::string& gens, const SweepResult& sweep);

nlohmann::ordered_json table_json(const TableReport& report);
/// n,typeA,typeB for the family tables; k,n,typeA,typeB for the (k, n) grid;
/// n,gens,kappa for the special cases.
std::string table_csv(const TableReport& report);
std::string table_text(const TableReport& report);
/// One line per failing cell: table,group,gens,column,expected,computed.
std::string mismatch_csv(const TableReport& report);

nlohmann::ordered_json scan_json(const std::vector<ScanCell>& cells);
std::string scan_csv(const std::vector<ScanCell>& cells);
std::string scan_text(const std::vector<ScanCell>& cells);

}  // namespace ricci
