#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "cayley_ricci/cayley.hpp"
#include "cayley_ricci/metric.hpp"
#include "cayley_ricci/rational.hpp"
#include "cayley_ricci/transport.hpp"

namespace ricci {

struct CurvatureOptions {
  /// Number of extra halvings of 1 - alpha tried after the initial three
  /// samples before giving up with StabilizationFailure. A negative depth
  /// leaves fewer than three samples and always fails.
  int alpha_depth = 10;
  /// Worker threads for sweeps; 0 picks std::thread::hardware_concurrency().
  unsigned parallelism = 1;
};

struct AlphaSample {
  Rational alpha;
  Rational kappa_alpha;
};

struct EdgeCurvatureReport {
  std::size_t u = 0;
  std::size_t v = 0;
  EdgeType type = EdgeType::A;
  Rational kappa;
  /// The three consecutive samples whose ratios kappa_alpha / (1 - alpha) agree.
  std::vector<AlphaSample> samples;
  /// Optimal coupling and potential at the largest sampled alpha.
  Rational certificate_alpha;
  TransportPlan plan;
  LipschitzPotential potential;
};

/// 1 - W1(mu_x^alpha, mu_y^alpha) / d(x, y). Throws SameVertex, AlphaOutOfRange.
Rational kappa_alpha(const CayleyGraph& graph, const DistanceMatrix& dist, std::size_t x, std::size_t y,
                     const Rational& alpha);

/// Limit of kappa_alpha / (1 - alpha) as alpha -> 1. W1 is piecewise linear in
/// alpha and kappa_1 = 0, so the ratio is constant on the last linear piece:
/// sample alpha = 1 - 2^-j for j = 3, 4, 5, ... and stop at the first three
/// consecutive equal ratios. Throws NotAnEdge, and StabilizationFailure if that never happens
/// within options.alpha_depth extra samples.
EdgeCurvatureReport analyze_edge(const CayleyGraph& graph, const DistanceMatrix& dist, std::size_t x,
                                 std::size_t y, const CurvatureOptions& options = {});

/// Throws NotAnEdge unless (x, y) is an edge.
Rational ricci_lly(const CayleyGraph& graph, const DistanceMatrix& dist, std::size_t x, std::size_t y,
                   const CurvatureOptions& options = {});

struct TypeSummary {
  std::size_t edge_count = 0;
  /// Distinct curvature values, ascending.
  std::vector<Rational> values;
  bool uniform() const { return values.size() == 1; }
};

struct SweepResult {
  std::vector<EdgeCurvatureReport> reports;  // graph.edges() order
  std::map<EdgeType, TypeSummary> summary;   // only types that occur

  /// Common value of a type when uniform, nullopt otherwise or when absent.
  std::optional<Rational> uniform_value(EdgeType type) const;
};

/// Every edge, independent per-edge work spread over options.parallelism
/// threads; output order never depends on scheduling.
SweepResult curvature_sweep(const CayleyGraph& graph, const DistanceMatrix& dist, const CurvatureOptions& options = {});

}  // namespace ricci
