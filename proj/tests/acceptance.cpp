// Acceptance suite: one [PASS]/[FAIL] line per criterion, exit 1 if any fails.
// Every comparison is exact rational equality; time limits are wall clock.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cayley_ricci/certificate_io.hpp"
#include "cayley_ricci/curvature.hpp"
#include "cayley_ricci/error.hpp"
#include "cayley_ricci/tables.hpp"

using namespace ricci;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::vector<std::string> notes;

  void fail(std::string note) {
    ok = false;
    if (notes.size() < 12) notes.push_back(std::move(note));
  }
};

std::optional<Rational> uniform(const SweepResult& s, EdgeType t) { return s.uniform_value(t); }

std::string show(const std::optional<Rational>& r) { return r ? r->to_string() : "none"; }

SweepResult sweep_of(const std::string& group, const std::string& gens) {
  const auto g = build_cayley(group, gens);
  return curvature_sweep(g, all_pairs(g));
}

void expect_pair(Outcome& out, const std::string& group, const std::string& gens, const Rational& a,
                 const Rational& b) {
  const auto s = sweep_of(group, gens);
  const auto ka = uniform(s, EdgeType::A), kb = uniform(s, EdgeType::B);
  if (ka != a || kb != b) {
    out.fail(group + " " + gens + ": got (" + show(ka) + ", " + show(kb) + "), want (" + a.to_string() + ", " +
             b.to_string() + ")");
  }
}

void expect_table(Outcome& out, int id) {
  const auto report = reproduce_table(id);
  for (const auto& m : report.mismatches) {
    std::string got;
    for (const auto& v : m.computed) got += (got.empty() ? "" : "|") + v.to_string();
    out.fail("table " + std::to_string(id) + " " + m.group + " " + m.gens + " " + std::string(to_string(m.column)) +
             ": got " + (got.empty() ? "none" : got) + ", want " + m.expected.to_string());
  }
}

// ---------------------------------------------------------------------------

Outcome criterion1() {
  Outcome out;
  const std::vector<std::tuple<int, Rational, Rational>> rows = {
      {3, Rational(1), Rational(2, 3)},    {4, Rational(2, 3), Rational(2, 3)}, {5, Rational(1, 3), Rational(2, 3)},
      {6, Rational(0), Rational(2, 3)},    {9, Rational(0), Rational(2, 3)},    {12, Rational(0), Rational(2, 3)}};
  for (const auto& [n, a, b] : rows) expect_pair(out, "D:" + std::to_string(n), "sigma-tau", a, b);
  return out;
}

Outcome criterion2() {
  Outcome out;
  expect_pair(out, "Q:8", "sigma-tau", Rational(1, 2), Rational(1, 2));
  expect_pair(out, "Q:12", "sigma-tau", Rational(1, 4), Rational(1, 2));
  for (int order : {16, 20, 28}) expect_pair(out, "Q:" + std::to_string(order), "sigma-tau", Rational(0), Rational(1, 2));
  return out;
}

Outcome family(int small_table, int k, std::vector<int> large_n, const Rational& a) {
  Outcome out;
  expect_table(out, small_table);
  for (int n : large_n) expect_pair(out, "Z:" + std::to_string(n), "s1k:" + std::to_string(k), a, Rational(0));
  return out;
}

Outcome criterion3() { return family(3, 2, {11, 12, 20}, Rational(1, 2)); }
Outcome criterion4() { return family(5, 3, {16, 17, 30}, Rational(1, 2)); }
Outcome criterion5() { return family(7, 4, {23, 24, 40}, Rational(1, 4)); }

Outcome criterion6() {
  Outcome out;
  expect_table(out, 9);
  return out;
}

Outcome criterion7() {
  Outcome out;
  for (const auto& c : scan_zm(2, 8, 3, 40)) {
    if (!c.agrees) {
      out.fail("k=" + std::to_string(c.k) + " n=" + std::to_string(c.n) + ": kappa_A=" + show(c.type_a.value) +
               " kappa_B=" + show(c.type_b.value) + " but hypotheses predict zero for" +
               (c.prediction.type_a_zero ? " A" : "") + (c.prediction.type_b_zero ? " B" : ""));
    }
  }
  return out;
}

Outcome criterion8() {
  Outcome out;
  const std::vector<std::pair<int, Rational>> cycles = {
      {3, Rational(3, 2)}, {4, Rational(1)}, {5, Rational(1, 2)}, {6, Rational(0)}, {10, Rational(0)}};
  for (const auto& [n, want] : cycles) {
    const auto s = sweep_of("Z:" + std::to_string(n), "s1");
    for (const auto& r : s.reports) {
      if (r.kappa != want) out.fail("Z:" + std::to_string(n) + " s1: got " + r.kappa.to_string());
    }
  }
  for (int n = 3; n <= 9; ++n) {
    const auto s = sweep_of("Z:" + std::to_string(n), "complete");
    for (const auto& r : s.reports) {
      if (r.kappa != Rational(n, n - 1)) out.fail("K_" + std::to_string(n) + ": got " + r.kappa.to_string());
    }
  }
  return out;
}

Outcome criterion9() {
  Outcome out;
  std::mt19937 rng(20240601);
  std::vector<std::string> dihedral, quaternion, cyclic;
  for (int n = 3; n <= 12; ++n) dihedral.push_back("D:" + std::to_string(n));
  for (int m = 2; m <= 7; ++m) quaternion.push_back("Q:" + std::to_string(4 * m));
  const std::vector<Rational> alphas = {Rational(1, 4), Rational(1, 2), Rational(3, 4), Rational(7, 8)};
  for (int trial = 0; trial < 200; ++trial) {
    std::string group, gens;
    switch (trial % 3) {
      case 0: group = dihedral[rng() % dihedral.size()]; gens = "sigma-tau"; break;
      case 1: group = quaternion[rng() % quaternion.size()]; gens = "sigma-tau"; break;
      default: {
        const int k = 2 + static_cast<int>(rng() % 4);
        const int n = k + 3 + static_cast<int>(rng() % 30);
        group = "Z:" + std::to_string(n);
        gens = "s1k:" + std::to_string(k);
      }
    }
    const auto g = build_cayley(group, gens);
    const auto d = all_pairs(g);
    const auto& e = g.edges()[rng() % g.edges().size()];
    const auto& alpha = alphas[rng() % alphas.size()];
    const auto mu = mu_alpha(g, e.u, alpha);
    const auto nu = mu_alpha(g, e.v, alpha);
    const auto primal = w1_exact(d, mu, nu).cost;
    const auto dual = w1_dual(d, mu, nu).value;
    const auto oracle = oracle_w1_bruteforce(d, mu, nu, d.diameter());
    if (primal != dual || primal != oracle) {
      out.fail(group + " " + gens + " (" + g.label(e.u) + "," + g.label(e.v) + ") alpha " + alpha.to_string() +
               ": exact " + primal.to_string() + ", dual " + dual.to_string() + ", oracle " + oracle.to_string());
    }
  }
  return out;
}

// Curvature each proof establishes for its edge; W1 at alpha = 1/2 on a unit
// edge is then 1 - kappa / 2.
const std::map<std::string, Rational>& certificate_kappa() {
  static const std::map<std::string, Rational> table = {
      {"d3_typeA", Rational(1)},         {"d3_typeB", Rational(2, 3)},      {"d4", Rational(2, 3)},
      {"d5_typeA", Rational(1, 3)},      {"d5_typeB", Rational(2, 3)},      {"d6_typeA", Rational(0)},
      {"d6_typeB", Rational(2, 3)},      {"dn_typeA", Rational(0)},         {"dn_typeB", Rational(2, 3)},
      {"q8_typeA", Rational(1, 2)},      {"q8_typeB", Rational(1, 2)},      {"q12_typeA", Rational(1, 4)},
      {"q12_typeB", Rational(1, 2)},     {"qn_typeA", Rational(0)},         {"qn_typeB", Rational(1, 2)},
      {"s12_typeA", Rational(1, 2)},     {"s12_typeB", Rational(0)},        {"s13_typeA", Rational(1, 2)},
      {"s13_typeB", Rational(0)},        {"s14_typeA", Rational(1, 4)},     {"s14_typeB", Rational(0)},
      {"s15_typeA", Rational(0)},        {"s15_typeB", Rational(0)},        {"zm_typeA_k5_n14", Rational(0)},
      {"zm_typeB_c1_k5_n18", Rational(0)}, {"zm_typeB_c2_k3_n14", Rational(0)},
      {"zm_typeB_c3_k3_n16", Rational(0)}, {"zm_typeB_c4_k7_n18", Rational(0)}};
  return table;
}

Outcome criterion10() {
  Outcome out;
  std::size_t seen = 0;
  for (const auto& [name, kappa] : certificate_kappa()) {
    const std::string base = std::string(CERT_DIR) + "/" + name;
    try {
      std::ifstream plan_in(base + ".plan");
      std::ifstream pot_in(base + ".pot");
      if (!plan_in || !pot_in) {
        out.fail(name + ": missing certificate files");
        continue;
      }
      std::string hash, tag, group, word, gens;
      plan_in >> hash >> tag >> group >> word >> gens;
      plan_in.seekg(0);
      const auto g = build_cayley(group, gens);
      const auto d = all_pairs(g);
      const auto plan = read_plan(g, plan_in);
      const auto pot = read_potential(g, pot_in);
      if (!plan.edge || !plan.alpha || *plan.alpha != Rational(1, 2)) {
        out.fail(name + ": plan must name its edge and alpha = 1/2");
        continue;
      }
      const auto [x, y] = *plan.edge;
      const auto mu = mu_alpha(g, x, *plan.alpha);
      const auto nu = mu_alpha(g, y, *plan.alpha);
      const Rational cost = verify_plan(d, plan.plan, mu, nu);
      if (!verify_lipschitz(g, pot.potential)) {
        out.fail(name + ": potential is not 1-Lipschitz");
        continue;
      }
      const Rational bound = dual_bound(d, pot.potential, mu, nu);
      const Rational claimed = Rational(1) - kappa * (Rational(1) - *plan.alpha);
      if (cost != bound || cost != claimed) {
        out.fail(name + ": cost " + cost.to_string() + ", dual bound " + bound.to_string() + ", claimed W1 " +
                 claimed.to_string());
      }
      ++seen;
    } catch (const Error& e) {
      out.fail(name + ": " + e.what());
    }
  }
  if (seen != certificate_kappa().size()) out.fail("only " + std::to_string(seen) + " certificates checked");
  return out;
}

std::vector<std::pair<std::string, std::string>> family_representatives() {
  std::vector<std::pair<std::string, std::string>> reps;
  for (int n : {3, 4, 5, 6, 9, 12}) reps.push_back({"D:" + std::to_string(n), "sigma-tau"});
  for (int order : {8, 12, 16, 20, 28}) reps.push_back({"Q:" + std::to_string(order), "sigma-tau"});
  for (int n : {3, 4, 5, 6, 10}) reps.push_back({"Z:" + std::to_string(n), "s1"});
  for (int n = 3; n <= 9; ++n) reps.push_back({"Z:" + std::to_string(n), "complete"});
  const std::vector<std::pair<int, std::vector<int>>> circulants = {
      {2, {6, 7, 8, 9, 10, 11, 12, 20}}, {3, {6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 30}},
      {4, {6, 8, 11, 15, 19, 22, 23, 24, 40}}, {5, {7, 10, 13, 18, 25, 26, 31}}};
  for (const auto& [k, ns] : circulants) {
    for (int n : ns) reps.push_back({"Z:" + std::to_string(n), "s1k:" + std::to_string(k)});
  }
  return reps;
}

Outcome criterion11() {
  Outcome out;
  for (const auto& [group, gens] : family_representatives()) {
    const auto g = build_cayley(group, gens);
    const auto d = all_pairs(g);
    const auto s = curvature_sweep(g, d);
    std::map<std::pair<std::size_t, std::size_t>, Rational> kappa;
    for (const auto& r : s.reports) kappa[{r.u, r.v}] = r.kappa;
    const std::string where = group + " " + gens;

    for (const auto& r : s.reports) {
      if (ricci_lly(g, d, r.v, r.u) != r.kappa) out.fail(where + ": kappa(x,y) != kappa(y,x)");
      if (kappa_alpha(g, d, r.u, r.v, Rational(1)) != Rational(0)) out.fail(where + ": kappa_1 != 0");
      // (alpha_i, kappa_alpha_i) and (1, 0) on one line: slopes agree.
      for (std::size_t i = 0; i + 1 < r.samples.size(); ++i) {
        const auto& p = r.samples[i];
        const auto& q = r.samples[i + 1];
        if (p.kappa_alpha * (Rational(1) - q.alpha) != q.kappa_alpha * (Rational(1) - p.alpha)) {
          out.fail(where + ": samples not collinear with (1, 0)");
        }
      }
    }
    if (g.vertex_count() <= 48) {
      const auto& spec = g.spec();
      for (const auto& h : g.vertices()) {
        for (const auto& r : s.reports) {
          auto u = g.index_of(mul(spec, h, g.vertex(r.u)));
          auto v = g.index_of(mul(spec, h, g.vertex(r.v)));
          if (u > v) std::swap(u, v);
          const auto it = kappa.find({u, v});
          if (it == kappa.end() || it->second != r.kappa) {
            out.fail(where + ": translation by " + g.label(g.index_of(h)) + " changes kappa");
            break;
          }
        }
      }
    }
  }
  return out;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    std::string title;
    double limit_seconds;  // 0: exactness only
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "Table 1 dihedral D_n, n = 3,4,5,6,9,12", 5, criterion1},
      {2, "Table 2 quaternion Q8, Q12, Q16, Q20, Q28", 5, criterion2},
      {3, "Tables 3-4 S_{1,2}: n = 6..10 and n = 11, 12, 20", 10, criterion3},
      {4, "Tables 5-6 S_{1,3}: n = 6..15 and n = 16, 17, 30", 10, criterion4},
      {5, "Tables 7-8 S_{1,4}: n = 6..22 and n = 23, 24, 40", 15, criterion5},
      {6, "Table 9 S_{1,5}: n = 7..25", 15, criterion6},
      {7, "Z/nZ vanishing scan, 2 <= k <= 8, k < n <= 40", 120, criterion7},
      {8, "cycles S_1 and complete graphs K_3..K_9", 0, criterion8},
      {9, "strong duality on 200 random (graph, edge, alpha) triples", 60, criterion9},
      {10, "transport plan and potential certificates", 0, criterion10},
      {11, "symmetry, translation invariance, kappa_1 = 0, collinearity", 0, criterion11},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = Clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out.fail(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    if (c.limit_seconds > 0 && seconds > c.limit_seconds) {
      std::ostringstream msg;
      msg << "took " << seconds << " s, limit " << c.limit_seconds << " s";
      out.fail(msg.str());
    }
    std::ostringstream line;
    line.precision(3);
    line << (out.ok ? "[PASS] " : "[FAIL] ") << c.id << ". " << c.title << " (" << std::fixed << seconds << " s)";
    std::cout << line.str() << '\n';
    for (const auto& note : out.notes) std::cout << "         " << note << '\n';
    failures += out.ok ? 0 : 1;
  }
  std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed\n";
  return failures == 0 ? 0 : 1;
}
