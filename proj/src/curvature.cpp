#include "cayley_ricci/curvature.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <set>
#include <thread>

#include "cayley_ricci/error.hpp"

namespace ricci {

namespace {

Rational kappa_from_cost(const Rational& cost, int distance) { return Rational(1) - cost / Rational(distance); }

}  // namespace

Rational kappa_alpha(const CayleyGraph& graph, const DistanceMatrix& dist, std::size_t x, std::size_t y,
                     const Rational& alpha) {
  if (x == y) throw Error(ErrorCode::SameVertex, "curvature needs two distinct vertices, got " + graph.label(x) + " twice");
  const auto mu = mu_alpha(graph, x, alpha);
  const auto nu = mu_alpha(graph, y, alpha);
  return kappa_from_cost(w1_exact(dist, mu, nu).cost, dist(x, y));
}

EdgeCurvatureReport analyze_edge(const CayleyGraph& graph, const DistanceMatrix& dist, std::size_t x,
                                 std::size_t y, const CurvatureOptions& options) {
  if (x == y) throw Error(ErrorCode::SameVertex, "curvature needs two distinct vertices, got " + graph.label(x) + " twice");
  EdgeCurvatureReport report;
  report.u = x;
  report.v = y;
  report.type = graph.edge_type(x, y);

  std::vector<AlphaSample> samples;
  std::vector<Rational> ratios;
  const int last_exponent = 5 + options.alpha_depth;
  for (int exponent = 3; exponent <= last_exponent; ++exponent) {
    const Rational idle = Rational(1, std::int64_t{1} << exponent);  // 1 - alpha
    const Rational alpha = Rational(1) - idle;
    auto solution = w1_solve(dist, mu_alpha(graph, x, alpha), mu_alpha(graph, y, alpha));
    const Rational kappa = kappa_from_cost(solution.cost, dist(x, y));
    samples.push_back({alpha, kappa});
    ratios.push_back(kappa / idle);

    const std::size_t n = ratios.size();
    if (n >= 3 && ratios[n - 1] == ratios[n - 2] && ratios[n - 2] == ratios[n - 3]) {
      report.kappa = ratios.back();
      report.samples.assign(samples.end() - 3, samples.end());
      report.certificate_alpha = alpha;
      report.plan = std::move(solution.plan);
      report.potential = std::move(solution.potential);
      return report;
    }
  }

  std::string trail;
  for (const auto& r : ratios) trail += " " + r.to_string();
  throw Error(ErrorCode::StabilizationFailure,
              "ratios kappa_alpha/(1-alpha) on (" + graph.label(x) + ", " + graph.label(y) + ") never settled:" + trail);
}

Rational ricci_lly(const CayleyGraph& graph, const DistanceMatrix& dist, std::size_t x, std::size_t y,
                   const CurvatureOptions& options) {
  return analyze_edge(graph, dist, x, y, options).kappa;
}

std::optional<Rational> SweepResult::uniform_value(EdgeType type) const {
  const auto it = summary.find(type);
  if (it == summary.end() || !it->second.uniform()) return std::nullopt;
  return it->second.values.front();
}

SweepResult curvature_sweep(const CayleyGraph& graph, const DistanceMatrix& dist, const CurvatureOptions& options) {
  const auto& edges = graph.edges();
  SweepResult result;
  result.reports.resize(edges.size());

  unsigned workers = options.parallelism == 0 ? std::max(1u, std::thread::hardware_concurrency()) : options.parallelism;
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(1, edges.size())));

  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> failures(edges.size());
  auto work = [&] {
    for (std::size_t i = next++; i < edges.size(); i = next++) {
      try {
        result.reports[i] = analyze_edge(graph, dist, edges[i].u, edges[i].v, options);
      } catch (...) {
        failures[i] = std::current_exception();
      }
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work);
    for (auto& thread : pool) thread.join();
  }
  // Lowest edge index wins so the reported error does not depend on scheduling.
  for (const auto& failure : failures) {
    if (failure) std::rethrow_exception(failure);
  }

  std::map<EdgeType, std::set<Rational>> values;
  for (const auto& report : result.reports) {
    auto& summary = result.summary[report.type];
    ++summary.edge_count;
    values[report.type].insert(report.kappa);
  }
  for (auto& [type, summary] : result.summary) summary.values.assign(values[type].begin(), values[type].end());
  return result;
}

}  // namespace ricci
