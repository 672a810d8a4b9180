#include <gtest/gtest.h>

#include "cayley_ricci/cayley.hpp"
#include "test_support.hpp"

using namespace ricci;
using testing_support::code_of;

TEST(Cayley, DihedralIsFourRegularWithTwoEdgeTypes) {
  const auto g = build_cayley("D:6", "sigma-tau");
  EXPECT_EQ(g.vertex_count(), 12u);
  for (std::size_t v = 0; v < g.vertex_count(); ++v) EXPECT_EQ(g.degree(v), 3u);  // t = t^-1
  std::size_t a = 0, b = 0;
  for (const auto& e : g.edges()) (e.type == EdgeType::A ? a : b)++;
  EXPECT_EQ(a, 12u);
  EXPECT_EQ(b, 6u);
}

TEST(Cayley, QuaternionHasDistinctTauInverse) {
  const auto g = build_cayley("Q:8", "sigma-tau");
  for (std::size_t v = 0; v < g.vertex_count(); ++v) EXPECT_EQ(g.degree(v), 4u);
}

TEST(Cayley, CoincidingGeneratorsAreMergedAsAB) {
  const auto g = build_cayley("Z:5", "s1k:4");
  EXPECT_EQ(g.edge_type(0, 4), EdgeType::AB);
  EXPECT_EQ(g.degree(0), 2u);
  const auto h = build_cayley("Z:10", "s1k:5");  // +5 = -5
  EXPECT_EQ(h.degree(0), 3u);
  EXPECT_EQ(h.edge_type(0, 5), EdgeType::B);
  EXPECT_EQ(h.edge_type(0, 1), EdgeType::A);
  // n = 7: +-5 = -+2, so S_{1,5} is S_{1,2} as an edge set.
  const auto a = build_cayley("Z:7", "s1k:5");
  const auto b = build_cayley("Z:7", "s1k:2");
  ASSERT_EQ(a.edges().size(), b.edges().size());
  for (std::size_t i = 0; i < a.edges().size(); ++i) {
    EXPECT_EQ(a.edges()[i].u, b.edges()[i].u);
    EXPECT_EQ(a.edges()[i].v, b.edges()[i].v);
    EXPECT_EQ(a.edges()[i].type, b.edges()[i].type);
  }
}

TEST(Cayley, NeighborsSortedAndSymmetric) {
  for (const auto& f : testing_support::representatives()) {
    const auto g = build_cayley(f.group, f.gens);
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      const auto& nb = g.neighbors(v);
      EXPECT_TRUE(std::is_sorted(nb.begin(), nb.end()));
      for (auto w : nb) {
        EXPECT_TRUE(g.has_edge(w, v));
        EXPECT_EQ(g.edge_type(v, w), g.edge_type(w, v));
      }
    }
    for (const auto& e : g.edges()) EXPECT_LT(e.u, e.v);
  }
}

TEST(Cayley, LeftTranslationIsAGraphAutomorphism) {
  for (const auto& f : testing_support::representatives()) {
    const auto g = build_cayley(f.group, f.gens);
    const auto& spec = g.spec();
    for (const auto& h : g.vertices()) {
      for (const auto& e : g.edges()) {
        const auto u = g.index_of(mul(spec, h, g.vertex(e.u)));
        const auto v = g.index_of(mul(spec, h, g.vertex(e.v)));
        ASSERT_TRUE(g.has_edge(u, v));
        EXPECT_EQ(g.edge_type(u, v), e.type);
      }
    }
  }
}

TEST(Cayley, GeneratorValidation) {
  const auto z6 = GroupSpec::cyclic(6);
  EXPECT_EQ(code_of([&] { make_generators(z6, "list:0,1,5"); }), ErrorCode::ContainsIdentity);
  EXPECT_EQ(code_of([&] { make_generators(z6, "list:1,2"); }), ErrorCode::NonSymmetricSet);
  EXPECT_EQ(code_of([&] { build_cayley(z6, make_generators(z6, "list:2,4")); }), ErrorCode::NotGenerating);
  EXPECT_EQ(code_of([&] { make_generators(z6, "bogus"); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([&] { make_generators(z6, "sigma-tau"); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { build_cayley("Z:2", "s1"); }), ErrorCode::InvalidGroup);
  EXPECT_EQ(make_generators(z6, "list:1,5,1,-1").size(), 2u);
}

TEST(Cayley, EdgeTypeOfNonEdgeThrows) {
  const auto g = build_cayley("Z:11", "s1k:2");
  EXPECT_EQ(code_of([&] { g.edge_type(0, 5); }), ErrorCode::NotAnEdge);
}

TEST(Cayley, CompleteSetGivesCompleteGraph) {
  for (int n = 3; n <= 9; ++n) {
    const auto g = build_cayley("Z:" + std::to_string(n), "complete");
    EXPECT_EQ(g.edges().size(), static_cast<std::size_t>(n * (n - 1) / 2));
  }
}
