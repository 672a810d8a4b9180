// cayley-ricci: exact Lin-Lu-Yau curvature of Cayley graphs from the shell.
//
// exit 0  success (and full agreement for table/scan)
// exit 1  mismatch, stabilization failure, or a certificate that does not verify
// exit 2  usage errors

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "cayley_ricci/cayley.hpp"
#include "cayley_ricci/certificate_io.hpp"
#include "cayley_ricci/curvature.hpp"
#include "cayley_ricci/error.hpp"
#include "cayley_ricci/metric.hpp"
#include "cayley_ricci/report_io.hpp"
#include "cayley_ricci/tables.hpp"
#include "cayley_ricci/transport.hpp"

namespace {

using ricci::ErrorCode;
using ricci::Rational;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

struct Range {
  int lo = 0;
  int hi = 0;
};

Range parse_range(const std::string& text) {
  const auto colon = text.find(':');
  try {
    if (colon == std::string::npos) {
      const int v = std::stoi(text);
      return {v, v};
    }
    return {std::stoi(text.substr(0, colon)), std::stoi(text.substr(colon + 1))};
  } catch (const std::exception&) {
    throw ricci::Error(ErrorCode::ParseError, "bad range '" + text + "', expected a:b");
  }
}

unsigned parse_parallelism(const std::string& text) {
  if (text == "auto") return 0;
  try {
    std::size_t used = 0;
    const int v = std::stoi(text, &used);
    if (used == text.size() && v >= 1) return static_cast<unsigned>(v);
  } catch (const std::exception&) {
  }
  throw ricci::Error(ErrorCode::ParseError, "parallelism must be a positive integer or 'auto', got '" + text + "'");
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ricci::Error(ErrorCode::ParseError, "cannot open " + path);
  return in;
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::StabilizationFailure:
    case ErrorCode::MarginalMismatch:
    case ErrorCode::NotLipschitz:
      return kExitMismatch;
    default:
      return kExitUsage;
  }
}

struct Options {
  std::string format = "text";
  int alpha_depth = 10;
  std::string parallelism = "1";

  std::string group;
  std::string gens;
  int table_id = -1;
  std::string k_range;
  std::string n_range;
  std::string plan_path;
  std::string potential_path;
  std::string alpha;
  std::vector<std::string> edge;
};

void emit(const std::string& format, const nlohmann::ordered_json& json, const std::string& csv,
          const std::string& text) {
  if (format == "json") {
    std::cout << json.dump(2) << '\n';
  } else if (format == "csv") {
    std::cout << csv;
  } else {
    std::cout << text;
  }
}

int run_curvature(const Options& o, const ricci::CurvatureOptions& copts) {
  const ricci::CayleyGraph graph = ricci::build_cayley(o.group, o.gens);
  const ricci::SweepResult sweep = ricci::curvature_sweep(graph, ricci::all_pairs(graph), copts);
  emit(o.format, ricci::curvature_json(graph, o.gens, sweep), ricci::curvature_csv(graph, sweep),
       ricci::curvature_text(graph, o.gens, sweep));
  return kExitOk;
}

int run_table(const Options& o, const ricci::CurvatureOptions& copts) {
  const ricci::TableReport report = ricci::reproduce_table(o.table_id, copts);
  emit(o.format, ricci::table_json(report), ricci::table_csv(report), ricci::table_text(report));
  if (!report.all_match()) {
    if (o.format != "json") std::cerr << "mismatches:\n" << ricci::mismatch_csv(report);
    return kExitMismatch;
  }
  return kExitOk;
}

int run_scan(const Options& o, const ricci::CurvatureOptions& copts) {
  const Range k = parse_range(o.k_range);
  const Range n = parse_range(o.n_range);
  const auto cells = ricci::scan_zm(k.lo, k.hi, n.lo, n.hi, copts);
  emit(o.format, ricci::scan_json(cells), ricci::scan_csv(cells), ricci::scan_text(cells));
  for (const auto& c : cells) {
    if (!c.agrees) return kExitMismatch;
  }
  return kExitOk;
}

int run_verify(const Options& o) {
  const ricci::CayleyGraph graph = ricci::build_cayley(o.group, o.gens);
  const ricci::DistanceMatrix dist = ricci::all_pairs(graph);

  std::optional<ricci::CertificateFile> plan_file;
  std::optional<ricci::CertificateFile> pot_file;
  if (!o.plan_path.empty()) {
    auto in = open_input(o.plan_path);
    plan_file = ricci::read_plan(graph, in);
  }
  if (!o.potential_path.empty()) {
    auto in = open_input(o.potential_path);
    pot_file = ricci::read_potential(graph, in);
  }

  std::optional<std::pair<std::size_t, std::size_t>> edge;
  if (!o.edge.empty()) {
    edge = std::make_pair(graph.parse_vertex(o.edge.at(0)), graph.parse_vertex(o.edge.at(1)));
  } else if (plan_file && plan_file->edge) {
    edge = plan_file->edge;
  } else if (pot_file && pot_file->edge) {
    edge = pot_file->edge;
  }
  if (!edge) throw ricci::Error(ErrorCode::ParseError, "no edge given: use --edge or an 'edge' directive");
  graph.edge_type(edge->first, edge->second);  // NotAnEdge for non-edges

  std::optional<Rational> alpha;
  if (!o.alpha.empty()) {
    alpha = Rational::parse(o.alpha);
  } else if (plan_file && plan_file->alpha) {
    alpha = plan_file->alpha;
  }
  if (!alpha) throw ricci::Error(ErrorCode::ParseError, "no alpha given: use --alpha or an 'alpha' directive");

  const ricci::ProbMeasure mu = ricci::mu_alpha(graph, edge->first, *alpha);
  const ricci::ProbMeasure nu = ricci::mu_alpha(graph, edge->second, *alpha);

  nlohmann::ordered_json out;
  out["group"] = graph.spec().to_string();
  out["gens"] = o.gens;
  out["edge"] = {graph.label(edge->first), graph.label(edge->second)};
  out["alpha"] = ricci::rational_json(*alpha);
  std::ostringstream text;
  std::ostringstream csv;
  csv << "check,value\n";
  int status = kExitOk;

  std::optional<Rational> cost;
  std::optional<Rational> bound;
  if (plan_file) {
    cost = ricci::verify_plan(dist, plan_file->plan, mu, nu);
    out["cost"] = ricci::rational_json(*cost);
    out["marginals"] = "OK";
    text << "plan cost " << *cost << ", marginals OK\n";
    csv << "cost," << *cost << "\nmarginals,OK\n";
  }
  if (pot_file) {
    const bool lipschitz = ricci::verify_lipschitz(dist, pot_file->potential);
    out["lipschitz"] = lipschitz;
    csv << "lipschitz," << (lipschitz ? "OK" : "FAIL") << '\n';
    if (!lipschitz) {
      text << "potential is not 1-Lipschitz\n";
      status = kExitMismatch;
    } else {
      bound = ricci::dual_bound(dist, pot_file->potential, mu, nu);
      out["dual_bound"] = ricci::rational_json(*bound);
      text << "potential 1-Lipschitz, dual bound " << *bound << '\n';
      csv << "dual_bound," << *bound << '\n';
    }
  }
  if (cost && bound) {
    const bool tight = *cost == *bound;
    out["certified"] = tight;
    csv << "certified," << (tight ? "OK" : "FAIL") << '\n';
    if (tight) {
      const Rational d(dist(edge->first, edge->second));
      const Rational kappa = Rational(1) - *cost / d;
      out["W1"] = ricci::rational_json(*cost);
      out["kappa_alpha"] = ricci::rational_json(kappa);
      text << "certified W1 = " << *cost << ", kappa_alpha = " << kappa << '\n';
      csv << "W1," << *cost << "\nkappa_alpha," << kappa << '\n';
    } else {
      text << "plan cost " << *cost << " and dual bound " << *bound << " differ\n";
      status = kExitMismatch;
    }
  }
  emit(o.format, out, csv.str(), text.str());
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Lin-Lu-Yau curvature of Cayley graphs"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--alpha-depth", o.alpha_depth, "Extra alpha halvings before giving up")->check(CLI::NonNegativeNumber);
  app.add_option("--parallelism", o.parallelism, "Worker threads, or auto");

  auto* curvature = app.add_subcommand("curvature", "Curvature of every edge of one graph");
  curvature->add_option("--group", o.group, "D:<n>, Q:<4m> or Z:<n>")->required();
  curvature->add_option("--gens", o.gens, "sigma-tau, s1, s1k:<k>, complete, list:a,b,...")->required();

  auto* table = app.add_subcommand("table", "Reproduce a golden table");
  table->add_option("--id", o.table_id, "Table id (0 = special cases)")->required();

  auto* scan = app.add_subcommand("scan", "Check the Z/nZ vanishing conditions on a (k, n) grid");
  scan->add_option("--k", o.k_range, "k range a:b")->required();
  scan->add_option("--n", o.n_range, "n range a:b")->required();

  auto* verify = app.add_subcommand("verify", "Check a transport plan and/or potential certificate");
  verify->add_option("--plan", o.plan_path, "Plan file");
  verify->add_option("--potential", o.potential_path, "Potential file");
  verify->add_option("--graph", o.group, "D:<n>, Q:<4m> or Z:<n>")->required();
  verify->add_option("--gens", o.gens, "Generating set")->required();
  verify->add_option("--alpha", o.alpha, "Idleness p/q");
  verify->add_option("--edge", o.edge, "Edge endpoints as two labels")->expected(2);

  for (auto* sub : {curvature, table, scan, verify}) {
    sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (verify->parsed() && o.plan_path.empty() && o.potential_path.empty()) {
      throw ricci::Error(ErrorCode::ParseError, "verify needs --plan and/or --potential");
    }
    ricci::CurvatureOptions copts;
    copts.alpha_depth = o.alpha_depth;
    const char* env = std::getenv("RICCI_PARALLELISM");
    copts.parallelism = parse_parallelism(env != nullptr && *env != '\0' ? std::string(env) : o.parallelism);

    if (curvature->parsed()) return run_curvature(o, copts);
    if (table->parsed()) return run_table(o, copts);
    if (scan->parsed()) return run_scan(o, copts);
    return run_verify(o);
  } catch (const ricci::Error& e) {
    std::cerr << "cayley-ricci: " << e.what() << '\n';
    return exit_code_for(e.code());
  }
}
