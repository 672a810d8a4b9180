#include "cayley_ricci/transport.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>
#include <string>

#include "cayley_ricci/error.hpp"

namespace ricci {

ProbMeasure::ProbMeasure(const std::map<std::size_t, Rational>& masses) {
  for (const auto& [vertex, mass] : masses) {
    if (mass.sign() < 0) {
      throw Error(ErrorCode::InvalidMeasure, "negative mass " + mass.to_string() + " at vertex " + std::to_string(vertex));
    }
    if (mass.sign() > 0) masses_.emplace(vertex, mass);
  }
}

Rational ProbMeasure::operator()(std::size_t vertex) const {
  const auto it = masses_.find(vertex);
  return it == masses_.end() ? Rational(0) : it->second;
}

std::vector<std::size_t> ProbMeasure::support() const {
  std::vector<std::size_t> out;
  out.reserve(masses_.size());
  for (const auto& [vertex, mass] : masses_) out.push_back(vertex);
  return out;
}

Rational ProbMeasure::total() const {
  Rational sum;
  for (const auto& [vertex, mass] : masses_) sum += mass;
  return sum;
}

ProbMeasure mu_alpha(const CayleyGraph& graph, std::size_t x, const Rational& alpha) {
  if (alpha < Rational(0) || alpha > Rational(1)) {
    throw Error(ErrorCode::AlphaOutOfRange, "alpha = " + alpha.to_string() + " outside [0, 1]");
  }
  std::map<std::size_t, Rational> masses;
  masses[x] = alpha;
  const auto& nbrs = graph.neighbors(x);
  const Rational share = (Rational(1) - alpha) / Rational(static_cast<std::int64_t>(nbrs.size()));
  for (std::size_t v : nbrs) masses[v] = share;
  return ProbMeasure(masses);
}

namespace {

void require_balanced(const ProbMeasure& mu, const ProbMeasure& nu) {
  const Rational a = mu.total();
  const Rational b = nu.total();
  if (a != Rational(1) || b != Rational(1)) {
    throw Error(ErrorCode::UnbalancedMeasures,
                "measures must both have total mass 1, got " + a.to_string() + " and " + b.to_string());
  }
}

void require_in_range(const DistanceMatrix& dist, const ProbMeasure& m) {
  for (const auto& [vertex, mass] : m.masses()) {
    if (vertex >= dist.size()) {
      throw Error(ErrorCode::InvalidMeasure, "vertex " + std::to_string(vertex) + " outside the graph");
    }
  }
}

// Residual network of the transportation problem between the two supports.
// Source i -> sink j arcs are uncapacitated with cost d(x_i, y_j); their
// reverses exist while flow is positive.
class TransportNetwork {
 public:
  TransportNetwork(const DistanceMatrix& dist, const ProbMeasure& mu, const ProbMeasure& nu)
      : sources_(mu.support()), sinks_(nu.support()) {
    for (std::size_t x : sources_) supply_.push_back(mu(x));
    for (std::size_t y : sinks_) demand_.push_back(nu(y));
    cost_.assign(sources_.size(), std::vector<std::int64_t>(sinks_.size()));
    for (std::size_t i = 0; i < sources_.size(); ++i) {
      for (std::size_t j = 0; j < sinks_.size(); ++j) cost_[i][j] = dist(sources_[i], sinks_[j]);
    }
    flow_.assign(sources_.size(), std::vector<Rational>(sinks_.size()));
  }

  void solve() {
    while (augment()) {
    }
  }

  Rational cost() const {
    Rational total;
    for (std::size_t i = 0; i < sources_.size(); ++i) {
      for (std::size_t j = 0; j < sinks_.size(); ++j) {
        if (flow_[i][j].sign() > 0) total += flow_[i][j] * Rational(cost_[i][j]);
      }
    }
    return total;
  }

  TransportPlan plan() const {
    TransportPlan out;
    for (std::size_t i = 0; i < sources_.size(); ++i) {
      for (std::size_t j = 0; j < sinks_.size(); ++j) {
        if (flow_[i][j].sign() > 0) out[{sources_[i], sinks_[j]}] = flow_[i][j];
      }
    }
    return out;
  }

  // Shortest-path labels h over the final residual network, rooted at a
  // virtual node joined to every source and sink by zero-cost arcs. Returns
  // labels for sinks only; sources are implied through h(y) <= h(x) + d.
  std::vector<std::int64_t> sink_labels() const {
    const std::size_t p = sources_.size();
    const std::size_t q = sinks_.size();
    std::vector<std::int64_t> h(p + q, 0);
    for (std::size_t round = 0; round <= p + q; ++round) {
      bool changed = false;
      for (std::size_t i = 0; i < p; ++i) {
        for (std::size_t j = 0; j < q; ++j) {
          if (h[i] + cost_[i][j] < h[p + j]) {
            h[p + j] = h[i] + cost_[i][j];
            changed = true;
          }
          if (flow_[i][j].sign() > 0 && h[p + j] - cost_[i][j] < h[i]) {
            h[i] = h[p + j] - cost_[i][j];
            changed = true;
          }
        }
      }
      if (!changed) return {h.begin() + static_cast<std::ptrdiff_t>(p), h.end()};
    }
    throw std::logic_error("negative cycle in an optimal residual network");
  }

  const std::vector<std::size_t>& sinks() const { return sinks_; }

 private:
  // One Bellman-Ford pass over S -> sources -> sinks -> T, then push the
  // bottleneck along the cheapest path. Returns false once all supply is
  // routed.
  bool augment() {
    const std::size_t p = sources_.size();
    const std::size_t q = sinks_.size();
    constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;
    // Node layout: [0, p) sources, [p, p + q) sinks. The super source is
    // implicit through initial labels.
    std::vector<std::int64_t> label(p + q, kInf);
    std::vector<std::ptrdiff_t> pred(p + q, -1);
    bool any_supply = false;
    for (std::size_t i = 0; i < p; ++i) {
      if (supply_[i].sign() > 0) {
        label[i] = 0;
        any_supply = true;
      }
    }
    if (!any_supply) return false;

    for (std::size_t round = 0; round <= p + q; ++round) {
      bool changed = false;
      for (std::size_t i = 0; i < p; ++i) {
        for (std::size_t j = 0; j < q; ++j) {
          if (label[i] < kInf && label[i] + cost_[i][j] < label[p + j]) {
            label[p + j] = label[i] + cost_[i][j];
            pred[p + j] = static_cast<std::ptrdiff_t>(i);
            changed = true;
          }
          if (flow_[i][j].sign() > 0 && label[p + j] < kInf && label[p + j] - cost_[i][j] < label[i]) {
            label[i] = label[p + j] - cost_[i][j];
            pred[i] = static_cast<std::ptrdiff_t>(p + j);
            changed = true;
          }
        }
      }
      if (!changed) break;
    }

    std::ptrdiff_t best = -1;
    for (std::size_t j = 0; j < q; ++j) {
      if (demand_[j].sign() > 0 && label[p + j] < kInf && (best < 0 || label[p + j] < label[p + best])) {
        best = static_cast<std::ptrdiff_t>(j);
      }
    }
    if (best < 0) throw std::logic_error("supply left but no sink reachable");

    // Walk back from the sink; path alternates sink <- source <- sink ...
    std::vector<std::size_t> path{p + static_cast<std::size_t>(best)};
    while (pred[path.back()] >= 0) path.push_back(static_cast<std::size_t>(pred[path.back()]));
    std::reverse(path.begin(), path.end());

    Rational amount = std::min(supply_[path.front()], demand_[static_cast<std::size_t>(best)]);
    for (std::size_t k = 1; k + 1 < path.size(); k += 2) {
      // path[k] is a sink, path[k + 1] a source reached via a reverse arc.
      amount = std::min(amount, flow_[path[k + 1]][path[k] - p]);
    }

    supply_[path.front()] -= amount;
    demand_[static_cast<std::size_t>(best)] -= amount;
    for (std::size_t k = 0; k + 1 < path.size(); ++k) {
      if (path[k] < p) {
        flow_[path[k]][path[k + 1] - p] += amount;
      } else {
        flow_[path[k + 1]][path[k] - p] -= amount;
      }
    }
    return true;
  }

  std::vector<std::size_t> sources_;
  std::vector<std::size_t> sinks_;
  std::vector<Rational> supply_;
  std::vector<Rational> demand_;
  std::vector<std::vector<std::int64_t>> cost_;
  std::vector<std::vector<Rational>> flow_;
};

Rational objective(const LipschitzPotential& f, const ProbMeasure& mu, const ProbMeasure& nu) {
  Rational sum;
  for (const auto& [x, mass] : mu.masses()) sum += Rational(f.at(x)) * mass;
  for (const auto& [y, mass] : nu.masses()) sum -= Rational(f.at(y)) * mass;
  return sum;
}

// Depth-first enumeration of integer potentials with pruning on the pairwise
// Lipschitz constraints. Int is std::int64_t when the scaled objective fits,
// mpz_class otherwise.
template <typename Int>
class PotentialSearch {
 public:
  PotentialSearch(const DistanceMatrix& dist, std::vector<std::size_t> points, std::vector<Int> weights,
                  std::vector<int> lo, std::vector<int> hi)
      : dist_(dist), points_(std::move(points)), weights_(std::move(weights)), lo_(std::move(lo)), hi_(std::move(hi)),
        values_(points_.size(), 0) {}

  Int run() {
    values_[0] = 0;
    best_set_ = false;
    descend(1, Int(0));
    return best_;
  }

 private:
  void descend(std::size_t depth, const Int& partial) {
    if (depth == points_.size()) {
      if (!best_set_ || partial > best_) {
        best_ = partial;
        best_set_ = true;
      }
      return;
    }
    int lo = lo_[depth];
    int hi = hi_[depth];
    for (std::size_t k = 0; k < depth; ++k) {
      const int d = dist_(points_[k], points_[depth]);
      lo = std::max(lo, values_[k] - d);
      hi = std::min(hi, values_[k] + d);
    }
    for (int v = lo; v <= hi; ++v) {
      values_[depth] = v;
      descend(depth + 1, partial + Int(v) * weights_[depth]);
    }
  }

  const DistanceMatrix& dist_;
  std::vector<std::size_t> points_;
  std::vector<Int> weights_;
  std::vector<int> lo_;
  std::vector<int> hi_;
  std::vector<int> values_;
  Int best_{0};
  bool best_set_ = false;
};

constexpr double kMaxSearchSpace = 1e10;

}  // namespace

TransportSolution w1_solve(const DistanceMatrix& dist, const ProbMeasure& mu, const ProbMeasure& nu) {
  require_balanced(mu, nu);
  require_in_range(dist, mu);
  require_in_range(dist, nu);
  TransportNetwork network(dist, mu, nu);
  network.solve();
  const auto h = network.sink_labels();

  // c-transform against the sink labels: f(v) = min_j d(v, y_j) - h_j.
  LipschitzPotential f;
  std::int64_t lowest = std::numeric_limits<std::int64_t>::max();
  for (std::size_t v = 0; v < dist.size(); ++v) {
    std::int64_t value = std::numeric_limits<std::int64_t>::max();
    for (std::size_t j = 0; j < network.sinks().size(); ++j) {
      value = std::min(value, dist(v, network.sinks()[j]) - h[j]);
    }
    f[v] = value;
    lowest = std::min(lowest, value);
  }
  for (auto& [v, value] : f) value -= lowest;
  return {network.cost(), network.plan(), std::move(f)};
}

PrimalSolution w1_exact(const DistanceMatrix& dist, const ProbMeasure& mu, const ProbMeasure& nu) {
  auto solution = w1_solve(dist, mu, nu);
  return {std::move(solution.cost), std::move(solution.plan)};
}

DualSolution w1_dual(const DistanceMatrix& dist, const ProbMeasure& mu, const ProbMeasure& nu) {
  auto solution = w1_solve(dist, mu, nu);
  Rational value = objective(solution.potential, mu, nu);
  return {std::move(value), std::move(solution.potential)};
}

Rational oracle_w1_bruteforce(const DistanceMatrix& dist, const ProbMeasure& mu, const ProbMeasure& nu,
                              int bound) {
  require_balanced(mu, nu);
  require_in_range(dist, mu);
  require_in_range(dist, nu);
  std::set<std::size_t> domain;
  for (const auto& [x, m] : mu.masses()) domain.insert(x);
  for (const auto& [y, m] : nu.masses()) domain.insert(y);

  // The objective is shift invariant, so pin f(anchor) = 0; every other value
  // then lies within d(anchor, u) of 0. Visit points nearest the anchor first.
  std::vector<std::size_t> points(domain.begin(), domain.end());
  const std::size_t anchor = points.front();
  std::stable_sort(points.begin(), points.end(),
                   [&](std::size_t a, std::size_t b) { return dist(anchor, a) < dist(anchor, b); });

  std::vector<int> lo;
  std::vector<int> hi;
  double space = 1.0;
  for (std::size_t u : points) {
    const int reach = std::min(bound, dist(anchor, u));
    lo.push_back(-reach);
    hi.push_back(reach);
    space *= 2.0 * reach + 1.0;
  }
  if (space > kMaxSearchSpace) {
    throw Error(ErrorCode::SearchSpaceTooLarge,
                std::to_string(points.size()) + " support points give about " + std::to_string(space) + " candidates");
  }

  // Scale mu - nu to integers over the common denominator.
  mpz_class denom = 1;
  for (std::size_t u : points) {
    const Rational delta = mu(u) - nu(u);
    mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), delta.mpq().get_den_mpz_t());
  }
  std::vector<mpz_class> scaled;
  mpz_class magnitude = 0;
  for (std::size_t u : points) {
    const mpq_class delta = (mu(u) - nu(u)).mpq() * mpq_class(denom);
    scaled.push_back(delta.get_num());
    magnitude += abs(delta.get_num());
  }

  mpz_class best;
  if (magnitude * (bound + 1) < mpz_class(std::numeric_limits<std::int64_t>::max() / 4)) {
    std::vector<std::int64_t> weights;
    for (const auto& w : scaled) weights.push_back(w.get_si());
    best = static_cast<long>(PotentialSearch<std::int64_t>(dist, points, weights, lo, hi).run());
  } else {
    best = PotentialSearch<mpz_class>(dist, points, scaled, lo, hi).run();
  }
  return Rational::from_mpq(mpq_class(best, denom));
}

Rational verify_plan(const DistanceMatrix& dist, const TransportPlan& plan, const ProbMeasure& mu,
                     const ProbMeasure& nu) {
  std::map<std::size_t, Rational> rows;
  std::map<std::size_t, Rational> cols;
  Rational cost;
  for (const auto& [key, mass] : plan) {
    const auto [x, y] = key;
    if (x >= dist.size() || y >= dist.size()) {
      throw Error(ErrorCode::MarginalMismatch, "plan entry (" + std::to_string(x) + ", " + std::to_string(y) +
                                                   ") refers to a vertex outside the graph");
    }
    if (mass.sign() < 0) {
      throw Error(ErrorCode::MarginalMismatch, "negative plan mass " + mass.to_string() + " at (" +
                                                   std::to_string(x) + ", " + std::to_string(y) + ")");
    }
    rows[x] += mass;
    cols[y] += mass;
    cost += mass * Rational(dist(x, y));
  }
  for (const auto& [x, m] : mu.masses()) rows.try_emplace(x);
  for (const auto& [y, m] : nu.masses()) cols.try_emplace(y);
  for (const auto& [x, sum] : rows) {
    if (sum != mu(x)) {
      throw Error(ErrorCode::MarginalMismatch, "row " + std::to_string(x) + " sums to " + sum.to_string() +
                                                   ", expected " + mu(x).to_string() + " (off by " +
                                                   (sum - mu(x)).to_string() + ")");
    }
  }
  for (const auto& [y, sum] : cols) {
    if (sum != nu(y)) {
      throw Error(ErrorCode::MarginalMismatch, "column " + std::to_string(y) + " sums to " + sum.to_string() +
                                                   ", expected " + nu(y).to_string() + " (off by " +
                                                   (sum - nu(y)).to_string() + ")");
    }
  }
  return cost;
}

bool verify_lipschitz(const DistanceMatrix& dist, const LipschitzPotential& f) {
  for (auto a = f.begin(); a != f.end(); ++a) {
    for (auto b = std::next(a); b != f.end(); ++b) {
      if (a->first >= dist.size() || b->first >= dist.size()) return false;
      const std::int64_t gap = a->second > b->second ? a->second - b->second : b->second - a->second;
      if (gap > dist(a->first, b->first)) return false;
    }
  }
  return f.empty() || f.rbegin()->first < dist.size();
}

bool verify_lipschitz(const CayleyGraph& graph, const LipschitzPotential& f) {
  for (std::size_t v = 0; v < graph.vertex_count(); ++v) {
    if (!f.contains(v)) throw Error(ErrorCode::UndefinedPotential, "potential undefined at " + graph.label(v));
  }
  for (const auto& edge : graph.edges()) {
    const std::int64_t gap = f.at(edge.u) - f.at(edge.v);
    if (gap > 1 || gap < -1) return false;
  }
  return true;
}

Rational dual_bound(const DistanceMatrix& dist, const LipschitzPotential& f, const ProbMeasure& mu,
                    const ProbMeasure& nu) {
  for (const ProbMeasure* m : {&mu, &nu}) {
    for (const auto& [v, mass] : m->masses()) {
      if (!f.contains(v)) {
        throw Error(ErrorCode::UndefinedPotential, "potential undefined at support vertex " + std::to_string(v));
      }
    }
  }
  if (!verify_lipschitz(dist, f)) throw Error(ErrorCode::NotLipschitz, "potential is not 1-Lipschitz");
  return objective(f, mu, nu);
}

LipschitzPotential extend_potential(const DistanceMatrix& dist, const LipschitzPotential& f) {
  LipschitzPotential out;
  if (f.empty()) return out;
  for (std::size_t v = 0; v < dist.size(); ++v) {
    std::int64_t value = std::numeric_limits<std::int64_t>::max();
    for (const auto& [u, fu] : f) value = std::min(value, fu + dist(u, v));
    out[v] = value;
  }
  return out;
}

}  // namespace ricci
