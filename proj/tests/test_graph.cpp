#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

namespace rainbow {
namespace {

using testing::complete;
using testing::cycle;
using testing::path;

TEST(MakeGraph, NormalizesEdges) {
  const Graph k3 = make_graph(3, {{0, 1}, {1, 2}, {0, 2}});
  EXPECT_EQ(k3.size(), 3);
  EXPECT_TRUE(k3.is_complete());
  const Graph p4 = make_graph(4, {{1, 0}, {2, 1}, {3, 2}});
  EXPECT_EQ(p4.size(), 3);
  for (Edge e : p4.edges()) EXPECT_LT(e.u, e.v);
  EXPECT_EQ(p4, path(4));
}

TEST(MakeGraph, RejectsBadInput) {
  EXPECT_THROW(make_graph(3, {{0, 0}}), InputError);
  EXPECT_THROW(make_graph(3, {{0, 1}, {1, 0}}), InputError);
  EXPECT_THROW(make_graph(3, {{0, 3}}), InputError);
  EXPECT_THROW(make_graph(-1, {}), InputError);
}

TEST(Distance, Examples) {
  EXPECT_EQ(distance(path(4), 0, 3), 3);
  const Graph k4 = complete(4);
  for (Vertex u = 0; u < 4; ++u) {
    for (Vertex v = 0; v < 4; ++v) EXPECT_EQ(distance(k4, u, v), u == v ? 0 : 1);
  }
  const Graph two = make_graph(4, {{0, 1}, {2, 3}});
  EXPECT_FALSE(distance(two, 0, 3).has_value());
  EXPECT_THROW(distance(two, 0, 4), InputError);
}

TEST(KStepNeighborhood, Examples) {
  EXPECT_EQ(k_step_neighborhood(path(5), VertexSet{0}, 2), VertexSet{2});
  EXPECT_EQ(k_step_neighborhood(complete(4), VertexSet{0}, 1), (VertexSet{1, 2, 3}));
  const VertexSet s{1, 3};
  EXPECT_EQ(k_step_neighborhood(cycle(6), s, 0), s);
  EXPECT_TRUE(k_step_neighborhood(path(3), VertexSet{0}, 7).empty());
  EXPECT_THROW(k_step_neighborhood(path(3), VertexSet{}, 1), InputError);
  EXPECT_THROW(k_step_neighborhood(path(3), VertexSet{0}, -1), InputError);
}

TEST(ComplementNeighborhood, Examples) {
  EXPECT_TRUE(complement_neighborhood(complete(4), 0).empty());
  EXPECT_EQ(complement_neighborhood(path(4), 0), (VertexSet{2, 3}));
  EXPECT_EQ(complement_neighborhood(Graph(3, {}), 0), (VertexSet{1, 2}));
  EXPECT_THROW(complement_neighborhood(path(4), 9), InputError);
}

TEST(Diameter, Examples) {
  EXPECT_EQ(diameter(cycle(6)), 3);
  EXPECT_EQ(diameter(complete(5)), 1);
  EXPECT_EQ(diameter(path(4)), 3);
  EXPECT_THROW(diameter(Graph(2, {})), InputError);
}

TEST(MinDegreeVertex, TieBreakSmallestId) {
  EXPECT_EQ(min_degree_vertex(testing::star(5)), (std::pair<Vertex, int>{1, 1}));
  EXPECT_EQ(min_degree_vertex(complete(4)), (std::pair<Vertex, int>{0, 3}));
  EXPECT_EQ(min_degree_vertex(path(4)), (std::pair<Vertex, int>{0, 1}));
}

TEST(Components, Examples) {
  EXPECT_EQ(components(cycle(5)).size(), 1u);
  const Graph k3_plus = make_graph(4, {{0, 1}, {1, 2}, {0, 2}});
  EXPECT_EQ(components(k3_plus), (std::vector<VertexSet>{VertexSet{0, 1, 2}, VertexSet{3}}));
  EXPECT_EQ(components(Graph(3, {})), (std::vector<VertexSet>{VertexSet{0}, VertexSet{1}, VertexSet{2}}));
}

TEST(DerivedGraphs, Examples) {
  const Relabeled k3 = delete_vertex(complete(4), 3);
  EXPECT_EQ(k3.graph, complete(3));
  EXPECT_EQ(k3.to_parent, (std::vector<Vertex>{0, 1, 2}));
  const Relabeled mid = delete_vertex(path(4), 1);
  EXPECT_EQ(mid.to_parent, (std::vector<Vertex>{0, 2, 3}));
  EXPECT_EQ(mid.graph, make_graph(3, {{1, 2}}));

  const Edge drop[] = {{0, 1}};
  // C4 is 0-1-2-3-0; removing 01 leaves the path 1-2-3-0.
  const Graph p = delete_edges(cycle(4), drop);
  EXPECT_EQ(p.size(), 3);
  EXPECT_EQ(diameter(p), 3);
  EXPECT_EQ(induced(complete(4), VertexSet{0, 1}).graph, complete(2));
  const Edge missing[] = {{0, 2}};
  EXPECT_THROW(delete_edges(cycle(4), missing), InputError);
  EXPECT_THROW(delete_vertex(cycle(4), 4), InputError);
}

TEST(GraphProperties, RandomGraphs) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 9);
    const long m = n - 1 + static_cast<long>(rng() % static_cast<std::uint64_t>(pairs(n) - (n - 1) + 1));
    const Graph g = generate(GraphKind::Random, {n, m}, rng());
    ASSERT_TRUE(is_connected(g));
    ASSERT_EQ(g.size(), m);
    for (Vertex v = 0; v < n; ++v) {
      EXPECT_EQ(g.neighbors(v).size() + complement_neighborhood(g, v).size(), n - 1);
      EXPECT_EQ(delete_vertex(g, v).graph.size(), g.size() - g.degree(v));
    }
    // Layers partition the reachable set.
    const auto layers = bfs_layers(g, VertexSet{0});
    VertexSet seen;
    for (const VertexSet& layer : layers) {
      EXPECT_TRUE((seen & layer).empty());
      seen = seen | layer;
    }
    EXPECT_EQ(seen, g.vertices());
    for (Vertex a = 0; a < n; ++a) {
      for (Vertex b = 0; b < n; ++b) {
        for (Vertex c = 0; c < n; ++c) EXPECT_LE(*distance(g, a, c), *distance(g, a, b) + *distance(g, b, c));
      }
    }
    // Components of a graph with one vertex removed cover the rest disjointly.
    const Graph h = delete_vertex(g, 0).graph;
    VertexSet cover;
    for (const VertexSet& c : components(h)) {
      EXPECT_TRUE((cover & c).empty());
      cover = cover | c;
    }
    EXPECT_EQ(cover, h.vertices());
  }
}

}  // namespace
}  // namespace rainbow
