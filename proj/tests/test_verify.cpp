#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "support.hpp"

namespace rainbow {
namespace {

using testing::complete;
using testing::cycle;
using testing::path;

TEST(RainbowPath, Examples) {
  const Graph k3 = complete(3);
  EXPECT_TRUE(rainbow_path_exists(k3, EdgeColoring::constant(k3), 0, 1));
  const Graph p3 = path(3);
  EXPECT_FALSE(rainbow_path_exists(p3, EdgeColoring::constant(p3), 0, 2));
  EXPECT_TRUE(rainbow_path_exists(p3, EdgeColoring::constant(p3), 1, 1));
  // C4 edges in sorted order: 01, 03, 12, 23. Around the cycle 01,12,23,30 -> 1,2,1,2.
  const Graph c4 = cycle(4);
  const EdgeColoring alt(c4, {1, 2, 2, 1}, 2);
  EXPECT_EQ(alt.color_of(c4, 0, 1), 1);
  EXPECT_EQ(alt.color_of(c4, 1, 2), 2);
  EXPECT_EQ(alt.color_of(c4, 2, 3), 1);
  EXPECT_EQ(alt.color_of(c4, 3, 0), 2);
  EXPECT_TRUE(rainbow_path_exists(c4, alt, 0, 2));
  EXPECT_TRUE(rainbow_path_exists(c4, alt, 1, 3));
}

TEST(RainbowPath, RejectsForeignColoring) {
  const Graph p3 = path(3);
  const EdgeColoring c = EdgeColoring::constant(complete(3));
  EXPECT_THROW(rainbow_path_exists(p3, c, 0, 2), InputError);
  EXPECT_THROW(is_rainbow_connected(p3, c), InputError);
}

TEST(RainbowConnected, Examples) {
  const Graph k4 = complete(4);
  EXPECT_TRUE(is_rainbow_connected(k4, EdgeColoring::constant(k4)));
  const Graph p4 = path(4);
  EXPECT_TRUE(is_rainbow_connected(p4, EdgeColoring(p4, {1, 2, 3}, 3)));
  EXPECT_FALSE(is_rainbow_connected(p4, EdgeColoring(p4, {1, 2, 1}, 2)));
  const Graph two = make_graph(4, {{0, 1}, {2, 3}});
  EXPECT_FALSE(is_rainbow_connected(two, EdgeColoring::all_distinct(two)));
}

TEST(Witness, Examples) {
  const Graph k3 = complete(3);
  const auto w = rainbow_witness(k3, EdgeColoring::constant(k3), 0, 1);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->path, (std::vector<Vertex>{0, 1}));
  EXPECT_EQ(w->colors, (std::vector<Color>{1}));
  const Graph p3 = path(3);
  const auto w2 = rainbow_witness(p3, EdgeColoring(p3, {1, 2}, 2), 0, 2);
  ASSERT_TRUE(w2);
  EXPECT_EQ(w2->path, (std::vector<Vertex>{0, 1, 2}));
  EXPECT_EQ(w2->colors, (std::vector<Color>{1, 2}));
  EXPECT_FALSE(rainbow_witness(p3, EdgeColoring::constant(p3), 0, 2));
}

TEST(Witness, ShortestWithSmallestNextVertex) {
  // K4 minus 03: from 0 to 3 both 0-1-3 and 0-2-3 are rainbow with distinct colors.
  const Graph g = testing::minus_edge(complete(4), {0, 3});
  const auto w = rainbow_witness(g, EdgeColoring::all_distinct(g), 0, 3);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->path, (std::vector<Vertex>{0, 1, 3}));
}

TEST(VerifyProperties, AgreesWithPathEnumeration) {
  std::mt19937_64 rng(5);
  for (int n = 2; n <= 6; ++n) {
    testing::for_each_connected(n, [&](const Graph& g) {
      if (rng() % 8 != 0) return;
      const int palette = 1 + static_cast<int>(rng() % 4);
      const EdgeColoring c = testing::random_coloring(g, palette, rng);
      ASSERT_EQ(is_rainbow_connected(g, c), testing::naive_rainbow_connected(g, c));
      for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = 0; v < n; ++v) {
          const auto w = rainbow_witness(g, c, u, v);
          ASSERT_EQ(w.has_value(), testing::naive_rainbow_path(g, c, u, v));
          if (w) {
            EXPECT_TRUE(witness_is_valid(g, c, *w, u, v));
          }
        }
      }
    });
  }
}

TEST(VerifyProperties, PathSearchAgreesWithSubsetSearch) {
  std::mt19937_64 rng(6);
  VerifyOptions dfs;
  dfs.subset_search_cap = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 6);
    const Graph g = generate(GraphKind::Random, {n, std::min(pairs(n), n - 1 + static_cast<long>(rng() % 4))}, rng());
    const EdgeColoring c = testing::random_coloring(g, 1 + static_cast<int>(rng() % 5), rng);
    EXPECT_EQ(is_rainbow_connected(g, c), is_rainbow_connected(g, c, dfs));
  }
}

TEST(VerifyProperties, PermutationInvariance) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 6);
    const Graph g = generate(GraphKind::Random, {n, std::min(pairs(n), n - 1 + static_cast<long>(rng() % 4))}, rng());
    const int palette = 2 + static_cast<int>(rng() % 4);
    const EdgeColoring c = testing::random_coloring(g, palette, rng);
    std::vector<Color> perm(static_cast<std::size_t>(palette) + 1);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin() + 1, perm.end(), rng);
    EXPECT_EQ(is_rainbow_connected(g, c), is_rainbow_connected(g, c.permuted(g, perm, palette)));
  }
}

TEST(VerifyProperties, AllDistinctMatchesConnectivity) {
  testing::for_each_connected(5, [](const Graph& g) {
    EXPECT_TRUE(is_rainbow_connected(g, EdgeColoring::all_distinct(g)));
  });
  const Graph g = make_graph(5, {{0, 1}, {1, 2}, {3, 4}});
  EXPECT_FALSE(is_rainbow_connected(g, EdgeColoring::all_distinct(g)));
}

TEST(VerifyProperties, TreesCheckUniquePaths) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 9);
    const Graph t = generate(GraphKind::Random, {n, n - 1}, rng());
    const EdgeColoring c = testing::random_coloring(t, 1 + static_cast<int>(rng() % (n - 1)), rng);
    bool all_rainbow = true;
    for (Vertex u = 0; u < n && all_rainbow; ++u) {
      // The unique tree path: walk BFS parents from v back to u.
      std::vector<Vertex> parent(static_cast<std::size_t>(n), -1);
      std::vector<Vertex> queue{u};
      parent[u] = u;
      for (std::size_t i = 0; i < queue.size(); ++i) {
        for (Vertex y : t.neighbors(queue[i])) {
          if (parent[y] < 0) {
            parent[y] = queue[i];
            queue.push_back(y);
          }
        }
      }
      for (Vertex v = 0; v < n && all_rainbow; ++v) {
        std::vector<bool> used(static_cast<std::size_t>(c.palette()) + 1, false);
        for (Vertex x = v; x != u; x = parent[x]) {
          const Color col = c.color_of(t, x, parent[x]);
          if (used[col]) all_rainbow = false;
          used[col] = true;
        }
      }
    }
    EXPECT_EQ(is_rainbow_connected(t, c), all_rainbow);
  }
}

TEST(EdgeColoring, Validation) {
  const Graph p3 = path(3);
  EXPECT_THROW(EdgeColoring(p3, {1}, 2), InputError);
  EXPECT_THROW(EdgeColoring(p3, {1, 3}, 2), InputError);
  EXPECT_THROW(EdgeColoring(p3, {0, 1}, 2), InputError);
  EXPECT_EQ(EdgeColoring(p3, {2, 2}, 4).colors_used(), 1);
}

}  // namespace
}  // namespace rainbow
