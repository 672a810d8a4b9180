#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "cayley_ricci/cayley.hpp"
#include "cayley_ricci/metric.hpp"
#include "cayley_ricci/rational.hpp"

namespace ricci {

/// Sparse nonnegative vertex masses. Zero masses are not stored. Whether the
/// total is 1 is checked by the consumers (w1_exact and friends), so that
/// unbalanced input can be reported instead of silently normalized.
class ProbMeasure {
 public:
  ProbMeasure() = default;
  /// Throws InvalidMeasure on a negative mass.
  explicit ProbMeasure(const std::map<std::size_t, Rational>& masses);

  static ProbMeasure point_mass(std::size_t vertex) { return ProbMeasure({{vertex, Rational(1)}}); }

  Rational operator()(std::size_t vertex) const;
  const std::map<std::size_t, Rational>& masses() const { return masses_; }
  std::vector<std::size_t> support() const;
  Rational total() const;

  friend bool operator==(const ProbMeasure&, const ProbMeasure&) = default;

 private:
  std::map<std::size_t, Rational> masses_;
};

/// Coupling entries keyed by (source, target). Diagonal entries are mass that
/// stays in place at zero cost.
using TransportPlan = std::map<std::pair<std::size_t, std::size_t>, Rational>;

/// Integer vertex potential. May be defined on a subset of the vertices; a
/// partial potential that is 1-Lipschitz on its domain extends to all of V.
using LipschitzPotential = std::map<std::size_t, std::int64_t>;

struct PrimalSolution {
  Rational cost;
  TransportPlan plan;
};

struct DualSolution {
  Rational value;
  LipschitzPotential potential;  // defined on every vertex
};

/// mass alpha at x, (1 - alpha)/deg(x) on each neighbor. Throws AlphaOutOfRange.
ProbMeasure mu_alpha(const CayleyGraph& graph, std::size_t x, const Rational& alpha);

struct TransportSolution {
  Rational cost;
  TransportPlan plan;
  LipschitzPotential potential;  // defined on every vertex
};

/// Solves once and returns both the optimal coupling and the optimal potential.
TransportSolution w1_solve(const DistanceMatrix& dist, const ProbMeasure& mu, const ProbMeasure& nu);

/// Exact W1 by successive shortest augmenting paths over the bipartite
/// support graph. Throws UnbalancedMeasures unless both totals are 1.
PrimalSolution w1_exact(const DistanceMatrix& dist, const ProbMeasure& mu, const ProbMeasure& nu);

/// Optimal integer 1-Lipschitz potential read off the solver's final residual
/// network; its objective equals w1_exact's cost.
DualSolution w1_dual(const DistanceMatrix& dist, const ProbMeasure& mu, const ProbMeasure& nu);

/// Maximizes sum f (mu - nu) over all integer potentials on
/// supp(mu) u supp(nu) with values in [-bound, bound] that are pairwise
/// 1-Lipschitz. Independent of the flow solver. Throws SearchSpaceTooLarge.
Rational oracle_w1_bruteforce(const DistanceMatrix& dist, const ProbMeasure& mu, const ProbMeasure& nu,
                              int bound);

/// Checks the plan's marginals exactly and returns its cost, an upper bound on
/// W1. Throws MarginalMismatch naming the first failing row or column.
Rational verify_plan(const DistanceMatrix& dist, const TransportPlan& plan, const ProbMeasure& mu,
                     const ProbMeasure& nu);

/// True iff |f(u) - f(v)| <= d(u, v) for every pair in f's domain.
bool verify_lipschitz(const DistanceMatrix& dist, const LipschitzPotential& f);

/// Edge-wise check for potentials defined on every vertex.
bool verify_lipschitz(const CayleyGraph& graph, const LipschitzPotential& f);

/// sum f(x) (mu(x) - nu(x)), a lower bound on W1. Throws NotLipschitz, or
/// UndefinedPotential when f misses a support vertex.
Rational dual_bound(const DistanceMatrix& dist, const LipschitzPotential& f, const ProbMeasure& mu,
                    const ProbMeasure& nu);

/// Smallest 1-Lipschitz extension f(v) = min_u (f(u) + d(u, v)).
LipschitzPotential extend_potential(const DistanceMatrix& dist, const LipschitzPotential& f);

}  // namespace ricci
