#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "support.hpp"

namespace rainbow {
namespace {

using testing::complete;
using testing::cycle;
using testing::path;

TEST(LowerBound, Examples) {
  EXPECT_EQ(rc_lower_bound(complete(4)), 1);
  EXPECT_EQ(rc_lower_bound(path(5)), 4);
  EXPECT_EQ(rc_lower_bound(cycle(6)), 3);
  EXPECT_EQ(rc_lower_bound(testing::star(5)), 4);
  EXPECT_THROW(rc_lower_bound(Graph(3, {})), InputError);
}

TEST(Enumerate, Examples) {
  using Seqs = std::vector<std::vector<Color>>;
  EXPECT_EQ(enumerate_colorings(2, 2), (Seqs{{1, 2}}));
  EXPECT_EQ(enumerate_colorings(3, 2), (Seqs{{1, 1, 2}, {1, 2, 1}, {1, 2, 2}}));
  EXPECT_EQ(enumerate_colorings(3, 3), (Seqs{{1, 2, 3}}));
  EXPECT_TRUE(enumerate_colorings(2, 3).empty());
}

TEST(Enumerate, CountsAreStirlingNumbers) {
  for (int m = 1; m <= 9; ++m) {
    for (int k = 1; k <= m; ++k) EXPECT_EQ(enumerate_colorings(m, k).size(), stirling2(m, k)) << m << "," << k;
  }
  EXPECT_EQ(stirling2(10, 3), 9330u);
}

TEST(Enumerate, PermutationsCoverAllSurjections) {
  for (int m = 1; m <= 6; ++m) {
    for (int k = 1; k <= std::min(m, 4); ++k) {
      std::set<std::vector<Color>> expanded;
      for (const auto& seq : enumerate_colorings(m, k)) {
        std::vector<Color> perm(static_cast<std::size_t>(k));
        std::iota(perm.begin(), perm.end(), 1);
        do {
          std::vector<Color> out;
          for (Color c : seq) out.push_back(perm[static_cast<std::size_t>(c - 1)]);
          EXPECT_TRUE(expanded.insert(out).second);
        } while (std::next_permutation(perm.begin(), perm.end()));
      }
      // All surjections m -> k by plain counting.
      std::set<std::vector<Color>> surjections;
      std::vector<Color> s(static_cast<std::size_t>(m), 1);
      while (true) {
        if (std::set<Color>(s.begin(), s.end()).size() == static_cast<std::size_t>(k)) surjections.insert(s);
        int i = 0;
        while (i < m && s[i] == k) s[i++] = 1;
        if (i == m) break;
        ++s[i];
      }
      EXPECT_EQ(expanded, surjections);
    }
  }
}

TEST(RcExact, Examples) {
  const RcCertificate k4 = rc_exact(complete(4));
  EXPECT_EQ(k4.value, 1);
  EXPECT_EQ(k4.optimality, Optimality::LowerBoundMet);
  EXPECT_EQ(rc_exact(path(4)).value, 3);
  const RcCertificate c5 = rc_exact(cycle(5));
  EXPECT_EQ(c5.value, 3);
  EXPECT_EQ(c5.optimality, Optimality::ExhaustedBelow);
  EXPECT_TRUE(is_rainbow_connected(cycle(5), *c5.witness));
  EXPECT_LE(c5.witness->colors_used(), 3);
  EXPECT_EQ(rc_exact(cycle(6)).value, 3);
}

TEST(RcExact, Errors) {
  EXPECT_THROW(rc_exact(make_graph(4, {{0, 1}, {2, 3}})), InputError);
  EXPECT_THROW(rc_exact(Graph(1, {})), InputError);
  ExactOptions tiny;
  tiny.budget = 5;
  try {
    rc_exact(cycle(5), tiny);
    FAIL() << "budget not enforced";
  } catch (const BudgetExceeded& e) {
    EXPECT_EQ(e.lower_bound(), 2);
    EXPECT_EQ(e.upper_bound(), 5);
  }
}

TEST(RcExact, CapReportsAboveCap) {
  ExactOptions capped;
  capped.k_max = 2;
  const RcCertificate c = rc_exact(path(5), capped);
  EXPECT_FALSE(c.found());
  EXPECT_EQ(c.optimality, Optimality::AboveCap);
  capped.k_max = 2;
  const RcCertificate c5 = rc_exact(cycle(5), capped);
  EXPECT_FALSE(c5.found());
}

TEST(RcExact, CacheReturnsSameCertificate) {
  ExactCache cache;
  ExactOptions opts;
  opts.cache = &cache;
  const Graph g = cycle(6);
  const RcCertificate a = rc_exact(g, opts);
  const RcCertificate b = rc_exact(g, opts);
  EXPECT_EQ(a.value, b.value);
  EXPECT_EQ(a.witness, b.witness);
  EXPECT_EQ(cache.hits(), 1u);
}

TEST(RcExactProperties, BoundsTreesAndCompleteGraphs) {
  for (int n = 2; n <= 6; ++n) {
    const RcCertificate kn = rc_exact(complete(n));
    EXPECT_EQ(kn.value, 1);
    testing::for_each_connected(n, [&](const Graph& g) {
      const RcCertificate c = rc_exact(g);
      ASSERT_TRUE(c.found());
      EXPECT_LE(diameter(g), c.value);
      EXPECT_LE(c.value, g.size());
      if (g.size() == n - 1) {
        EXPECT_EQ(c.value, n - 1);
      }
      EXPECT_LE(c.witness->colors_used(), c.value);
      EXPECT_TRUE(is_rainbow_connected(g, *c.witness));
    });
  }
}

TEST(RcExactProperties, AgreesWithNaiveEnumeration) {
  for (int n = 2; n <= 5; ++n) {
    testing::for_each_connected(n, [](const Graph& g) { ASSERT_EQ(rc_exact(g).value, testing::naive_rc(g)); });
  }
}

TEST(RcExactProperties, EdgeAdditionNeverIncreases) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 4);
    const long m = n - 1 + static_cast<long>(rng() % static_cast<std::uint64_t>(pairs(n) - n + 1));
    const Graph g = generate(GraphKind::Random, {n, m}, rng());
    std::vector<Edge> non_edges;
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        if (!g.adjacent(u, v)) non_edges.push_back({u, v});
      }
    }
    ASSERT_FALSE(non_edges.empty());
    const Edge e = non_edges[rng() % non_edges.size()];
    EXPECT_LE(rc_exact(add_edge(g, e)).value, rc_exact(g).value);
  }
}

}  // namespace
}  // namespace rainbow
