#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

namespace rainbow {
namespace {

using testing::complete;
using testing::cycle;
using testing::path;

void expect_sound(const Graph& g, const ColoringResult& r, int k) {
  EXPECT_TRUE(r.verified);
  EXPECT_TRUE(r.coloring.binds(g));
  EXPECT_LE(r.colors_used, k);
  EXPECT_EQ(r.colors_used, r.coloring.colors_used());
  EXPECT_TRUE(testing::naive_rainbow_connected(g, r.coloring));
}

Graph wheel5() {
  return make_graph(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1}});
}

TEST(ColorRc2, Examples) {
  const Graph g = testing::minus_edge(complete(5), {1, 3});
  expect_sound(g, color_rc2(g), 2);
  const ColoringResult k4 = color_rc2(complete(4));
  expect_sound(complete(4), k4, 2);
  EXPECT_EQ(k4.colors_used, 1);
  EXPECT_THROW(color_rc2(path(4)), PreconditionNotMet);
}

TEST(ColorRc3, Examples) {
  int seen = 0;
  testing::for_each_connected(6, [&](const Graph& g) {
    if (g.size() != 8 || seen++ % 50 != 0) return;
    expect_sound(g, color_rc3(g), 3);
  });
  EXPECT_GT(seen, 0);
  const ColoringResult k6 = color_rc3(complete(6));
  EXPECT_EQ(k6.colors_used, 1);
  EXPECT_THROW(color_rc3(cycle(6)), PreconditionNotMet);
}

TEST(ColorRc4, Examples) {
  const Graph lp = lollipop(7, 4);
  ASSERT_EQ(lp.size(), 9);
  expect_sound(lp, color_rc4(lp), 4);
  for (std::uint64_t i = 0; i < 100; ++i) {
    const Graph g = detail::sample_graph(7, 9, 42, i);
    expect_sound(g, color_rc4(g), 4);
  }
  EXPECT_EQ(color_rc4(complete(7)).colors_used, 1);
  EXPECT_THROW(color_rc4(path(7)), PreconditionNotMet);
  EXPECT_THROW(color_rc4(make_graph(7, {{0, 1}})), PreconditionNotMet);
}

TEST(ColorDense, RejectsOtherColorCounts) {
  EXPECT_THROW(color_dense(complete(5), 5), InputError);
  EXPECT_THROW(color_dense(complete(5), 1), InputError);
}

TEST(ReduceMinDegree, Wheel) {
  // Hub 0, rim 1-2-3-4-5-1.
  const ReductionStep s = reduce_min_degree(wheel5(), 1);
  EXPECT_EQ(s.w, 1);
  EXPECT_EQ(s.t, 1);
  EXPECT_EQ(s.complement_list, (std::vector<Vertex>{3, 4}));
  ASSERT_EQ(s.matched.size(), 2u);
  EXPECT_EQ(s.matched[0].u, 0);
  EXPECT_EQ(s.matched[0].v, 3);
  EXPECT_EQ(s.matched[1].u, 0);
  EXPECT_EQ(s.matched[1].v, 4);
  EXPECT_EQ(s.deleted, (std::vector<Edge>{{0, 3}}));
}

TEST(ReduceMinDegree, NearMatchingRemoved) {
  const Edge drop[] = {{0, 1}, {2, 3}};
  const ReductionStep s = reduce_min_degree(delete_edges(complete(5), drop), 1);
  EXPECT_EQ(s.w, 0);
  EXPECT_EQ(s.t, 0);
  EXPECT_EQ(s.complement_list, (std::vector<Vertex>{1}));
  ASSERT_EQ(s.matched.size(), 1u);
  EXPECT_EQ(s.matched[0].u, 2);
  EXPECT_TRUE(s.deleted.empty());
}

TEST(ReduceMinDegree, CompleteAndMissingCommonNeighbor) {
  const ReductionStep s = reduce_min_degree(complete(5), 1);
  EXPECT_TRUE(s.complement_list.empty());
  EXPECT_TRUE(s.deleted.empty());
  EXPECT_EQ(s.t, -1);
  EXPECT_THROW(reduce_min_degree(path(4), 1), StructuralError);
}

TEST(ReduceMinDegree, KeepsLastPairs) {
  const ReductionStep s = reduce_min_degree(wheel5(), 2);
  EXPECT_TRUE(s.deleted.empty());
}

TEST(FallbackExact, Examples) {
  const ColoringResult c4 = fallback_exact(cycle(4), 3);
  EXPECT_LE(c4.colors_used, 3);
  EXPECT_EQ(c4.tag, CaseTag::Base);
  EXPECT_LE(fallback_exact(cycle(5), 3).colors_used, 3);
  const ColoringResult p5 = fallback_exact(path(5), 4);
  EXPECT_EQ(p5.colors_used, 4);
  EXPECT_THROW(fallback_exact(path(5), 3), ProofGap);
  EXPECT_THROW(fallback_exact(path(8), 7), PreconditionNotMet);
}

TEST(DenseProperties, DeterministicAndBoundedByOracle) {
  ColorerOptions opts;
  opts.cache = std::make_shared<ExactCache>();
  for (int k = 2; k <= 4; ++k) {
    for (int n = k + 4; n <= 8; ++n) {
      for (std::uint64_t i = 0; i < 40; ++i) {
        const Graph g = detail::sample_graph(n, density_threshold(k, n), 100 + k, i);
        const ColoringResult a = color_dense(g, k, opts);
        const ColoringResult b = color_dense(g, k, {});
        expect_sound(g, a, k);
        EXPECT_EQ(a.coloring, b.coloring);
        EXPECT_EQ(a.trace.size(), b.trace.size());
        if (n <= 7) {
          ExactOptions eo;
          eo.k_max = k;
          EXPECT_LE(rc_exact(g, eo).value, a.colors_used);
        }
      }
    }
  }
}

TEST(DenseProperties, TraceWellFormed) {
  ColorerOptions opts;
  for (int k = 2; k <= 4; ++k) {
    for (int n = 8; n <= 10; ++n) {
      for (std::uint64_t i = 0; i < 30; ++i) {
        const Graph g = detail::sample_graph(n, density_threshold(k, n), 7, i);
        const ColoringResult r = color_dense(g, k, opts);
        ASSERT_FALSE(r.trace.empty());
        const ReductionStep& top = r.trace.front();
        EXPECT_EQ(top.order, n);
        EXPECT_EQ(top.depth, 0);
        for (const ReductionStep& s : r.trace) {
          EXPECT_LE(s.depth, n - std::max(opts.base_cap, k + 2));
          EXPECT_LE(s.order, n);
        }
        // Reduction steps at the top level can be checked against G itself.
        if (top.tag == CaseTag::TwoColorInduction || top.tag == CaseTag::ThreeColorInduction) {
          EXPECT_EQ(g.degree(top.w), n - 2 - top.t);
          const int lo = top.tag == CaseTag::TwoColorInduction ? 0 : 1;
          const int hi = top.tag == CaseTag::TwoColorInduction ? n - 3 : n - 4;
          EXPECT_GE(top.t, lo);
          EXPECT_LE(top.t, hi);
          EXPECT_EQ(static_cast<int>(top.complement_list.size()), top.t + 1);
          for (const MatchedPair& p : top.matched) {
            EXPECT_TRUE(g.adjacent(top.w, p.u));
            EXPECT_TRUE(g.adjacent(p.u, p.v));
            EXPECT_FALSE(g.adjacent(top.w, p.v));
          }
          for (Edge e : top.deleted) EXPECT_TRUE(g.adjacent(e.u, e.v));
        }
      }
    }
  }
}

// A graph on which the four-color case analysis, read literally, has no branch.
std::optional<Graph> find_literal_gap(const char* reason) {
  ColorerOptions literal;
  literal.repairs = false;
  literal.fallback_cap = 0;
  for (std::uint64_t i = 0; i < 20000; ++i) {
    const Graph g = detail::sample_graph(7, density_threshold(4, 7), 9, i);
    try {
      color_rc4(g, literal);
    } catch (const ProofGap& gap) {
      if (gap.reason() == reason) return g;
    }
  }
  return std::nullopt;
}

TEST(DenseRepairs, LiteralGapIsRepaired) {
  const auto g = find_literal_gap("case-analysis-incomplete");
  ASSERT_TRUE(g.has_value());
  ColorerOptions literal;
  literal.repairs = false;
  literal.fallback_cap = 0;
  try {
    color_rc4(*g, literal);
    FAIL() << "expected a proof gap";
  } catch (const ProofGap& gap) {
    EXPECT_EQ(gap.tag(), CaseTag::FourCase1);
    EXPECT_EQ(gap.graph(), *g);
  }

  ColorerOptions repaired;
  repaired.fallback_cap = 0;
  const ColoringResult r = color_rc4(*g, repaired);
  expect_sound(*g, r, 4);
  ASSERT_FALSE(r.recovered_gaps.empty());
  EXPECT_EQ(r.recovered_gaps.front().recovery.rfind("repair:", 0), 0u);

  literal.fallback_cap = 7;
  const ColoringResult f = color_rc4(*g, literal);
  expect_sound(*g, f, 4);
  EXPECT_EQ(f.tag, CaseTag::FallbackExact);
  ASSERT_EQ(f.recovered_gaps.size(), 1u);
  EXPECT_EQ(f.recovered_gaps.front().recovery, "exact-fallback");
}

TEST(CaseTag, NamesRoundTrip) {
  for (CaseTag t : {CaseTag::Base, CaseTag::PendantDelta1, CaseTag::TwoColorInduction, CaseTag::ThreeColorInduction,
                    CaseTag::ThreeColorDisjointPair, CaseTag::ThreeColorDisconnectedRepair, CaseTag::FourCase1,
                    CaseTag::FourCase2, CaseTag::FourCase3P1, CaseTag::FourCase3P2, CaseTag::FourCase3PBig,
                    CaseTag::FallbackExact}) {
    EXPECT_EQ(case_tag_from_string(to_string(t)), t);
  }
  EXPECT_EQ(to_string(CaseTag::FourCase3P1), "FourCase3-p1");
  EXPECT_FALSE(case_tag_from_string("FourCase4").has_value());
}

}  // namespace
}  // namespace rainbow
