#pragma once

// Immutable simple undirected graphs on dense vertex ids 0..n-1.
//
// Adjacency is kept twice: as the sorted edge list (which fixes edge
// positions for colorings) and as one 64-bit row per vertex, so that
// neighborhood intersections are single word operations. Orders above 64
// are rejected.

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rainbow/error.hpp"

namespace rainbow {

using Vertex = int;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

/// Orders the endpoints so that u < v.
constexpr Edge normalized(Edge e) noexcept {
  return e.u < e.v ? e : Edge{e.v, e.u};
}

class VertexSet {
 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = const Vertex*;
    using reference = Vertex;

    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}

    constexpr Vertex operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    friend constexpr bool operator==(iterator, iterator) = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
  VertexSet(std::initializer_list<Vertex> members) {
    for (Vertex v : members) insert(v);
  }

  static constexpr VertexSet range(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static constexpr VertexSet single(Vertex v) { return VertexSet(std::uint64_t{1} << v); }

  constexpr std::uint64_t bits() const noexcept { return bits_; }
  constexpr bool contains(Vertex v) const noexcept {
    return v >= 0 && v < 64 && ((bits_ >> v) & 1u);
  }
  constexpr int size() const noexcept { return std::popcount(bits_); }
  constexpr bool empty() const noexcept { return bits_ == 0; }
  /// Smallest member; the set must be nonempty.
  constexpr Vertex front() const noexcept { return std::countr_zero(bits_); }

  void insert(Vertex v) {
    if (v < 0 || v >= 64) throw InputError("vertex id " + std::to_string(v) + " out of range");
    bits_ |= std::uint64_t{1} << v;
  }
  constexpr void erase(Vertex v) noexcept {
    if (v >= 0 && v < 64) bits_ &= ~(std::uint64_t{1} << v);
  }

  constexpr bool is_subset_of(VertexSet other) const noexcept {
    return (bits_ & ~other.bits_) == 0;
  }

  std::vector<Vertex> members() const { return {begin(), end()}; }

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(VertexSet, VertexSet) = default;

 private:
  std::uint64_t bits_ = 0;
};

class Graph {
 public:
  static constexpr int kMaxOrder = 64;

  Graph() = default;

  /// Validating constructor. Edges may come in any order and orientation.
  Graph(int n, std::span<const Edge> edges) : n_(n) {
    if (n < 0 || n > kMaxOrder) {
      throw InputError("graph order " + std::to_string(n) + " outside 0.." + std::to_string(kMaxOrder));
    }
    rows_.assign(static_cast<std::size_t>(n), 0);
    edges_.reserve(edges.size());
    for (Edge e : edges) {
      if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
        throw InputError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                         ") references a vertex outside 0.." + std::to_string(n - 1));
      }
      if (e.u == e.v) throw InputError("self-loop at vertex " + std::to_string(e.u));
      const Edge ne = normalized(e);
      if ((rows_[ne.u] >> ne.v) & 1u) {
        throw InputError("duplicate edge (" + std::to_string(ne.u) + "," + std::to_string(ne.v) + ")");
      }
      rows_[ne.u] |= std::uint64_t{1} << ne.v;
      rows_[ne.v] |= std::uint64_t{1} << ne.u;
      edges_.push_back(ne);
    }
    std::sort(edges_.begin(), edges_.end());
    finish();
  }

  Graph(int n, std::initializer_list<Edge> edges) : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  /// Builds from symmetric, loop-free adjacency rows without re-validation.
  static Graph from_rows(int n, std::span<const std::uint64_t> rows) {
    Graph g;
    g.n_ = n;
    g.rows_.assign(rows.begin(), rows.begin() + n);
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v : VertexSet(g.rows_[u] & ~((std::uint64_t{2} << u) - 1))) g.edges_.push_back({u, v});
    }
    g.finish();
    return g;
  }

  int order() const noexcept { return n_; }
  int size() const noexcept { return static_cast<int>(edges_.size()); }
  std::span<const Edge> edges() const noexcept { return edges_; }
  const Edge& edge(std::size_t i) const { return edges_.at(i); }

  VertexSet vertices() const noexcept { return VertexSet::range(n_); }
  VertexSet neighbors(Vertex v) const { return VertexSet(rows_.at(check(v))); }
  int degree(Vertex v) const { return neighbors(v).size(); }
  bool adjacent(Vertex u, Vertex v) const { return neighbors(u).contains(check(v)); }
  bool is_complete() const noexcept {
    return static_cast<long>(edges_.size()) == static_cast<long>(n_) * (n_ - 1) / 2;
  }

  /// Position of edge uv in edges(), or -1 when u and v are not adjacent.
  int edge_index(Vertex u, Vertex v) const {
    check(u);
    check(v);
    return index_[static_cast<std::size_t>(u) * n_ + v];
  }

  /// Unchecked variant for inner loops; u, v must be valid ids.
  int edge_index_unchecked(Vertex u, Vertex v) const noexcept {
    return index_[static_cast<std::size_t>(u) * n_ + v];
  }
  std::uint64_t row(Vertex v) const noexcept { return rows_[v]; }

  /// Hash of (n, edge list); colorings use it to check which graph they bind.
  std::uint64_t fingerprint() const noexcept { return fingerprint_; }

  Vertex check(Vertex v) const {
    if (v < 0 || v >= n_) {
      throw InputError("vertex id " + std::to_string(v) + " outside 0.." + std::to_string(n_ - 1));
    }
    return v;
  }

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

 private:
  void finish() {
    index_.assign(static_cast<std::size_t>(n_) * n_, -1);
    std::uint64_t h = 0xcbf29ce484222325ull ^ static_cast<std::uint64_t>(n_);
    auto mix = [&](std::uint64_t x) {
      h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    };
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      const Edge e = edges_[i];
      index_[static_cast<std::size_t>(e.u) * n_ + e.v] = static_cast<int>(i);
      index_[static_cast<std::size_t>(e.v) * n_ + e.u] = static_cast<int>(i);
      mix((static_cast<std::uint64_t>(e.u) << 8) | static_cast<std::uint64_t>(e.v));
    }
    fingerprint_ = h;
  }

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::uint64_t> rows_;
  std::vector<int> index_;
  std::uint64_t fingerprint_ = 0;
};

inline Graph make_graph(int n, std::span<const Edge> edges) { return Graph(n, edges); }
inline Graph make_graph(int n, std::initializer_list<Edge> edges) { return Graph(n, edges); }

/// A derived graph plus, for each of its vertices, the id it had in the parent.
struct Relabeled {
  Graph graph;
  std::vector<Vertex> to_parent;
};

inline constexpr long pairs(long n) { return n < 2 ? 0 : n * (n - 1) / 2; }

// --- distances and neighborhoods -------------------------------------------

/// BFS layers from S: layers[k] is N^k(S). Stops at the last nonempty layer.
inline std::vector<VertexSet> bfs_layers(const Graph& g, VertexSet sources) {
  if (sources.empty()) throw InputError("source set is empty");
  if (!sources.is_subset_of(g.vertices())) throw InputError("source set has ids outside the graph");
  std::vector<VertexSet> layers{sources};
  VertexSet seen = sources;
  while (true) {
    std::uint64_t next = 0;
    for (Vertex v : layers.back()) next |= g.row(v);
    const VertexSet layer = VertexSet(next) - seen;
    if (layer.empty()) break;
    seen = seen | layer;
    layers.push_back(layer);
  }
  return layers;
}

inline VertexSet k_step_neighborhood(const Graph& g, VertexSet sources, int k) {
  if (k < 0) throw InputError("step count must be nonnegative");
  const auto layers = bfs_layers(g, sources);
  return k < static_cast<int>(layers.size()) ? layers[k] : VertexSet{};
}

/// Shortest-path length, or nullopt when v is unreachable from u.
inline std::optional<int> distance(const Graph& g, Vertex u, Vertex v) {
  g.check(u);
  g.check(v);
  const auto layers = bfs_layers(g, VertexSet::single(u));
  for (std::size_t k = 0; k < layers.size(); ++k) {
    if (layers[k].contains(v)) return static_cast<int>(k);
  }
  return std::nullopt;
}

inline VertexSet complement_neighborhood(const Graph& g, Vertex v) {
  return g.vertices() - g.neighbors(v) - VertexSet::single(v);
}

inline bool is_connected(const Graph& g) {
  if (g.order() <= 1) return true;
  VertexSet seen = VertexSet::single(0);
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    std::uint64_t next = 0;
    for (Vertex v : frontier) next |= g.row(v);
    frontier = VertexSet(next) - seen;
    seen = seen | frontier;
  }
  return seen == g.vertices();
}

inline int eccentricity(const Graph& g, Vertex v) {
  const auto layers = bfs_layers(g, VertexSet::single(g.check(v)));
  return static_cast<int>(layers.size()) - 1;
}

inline int diameter(const Graph& g) {
  if (g.order() == 0) throw InputError("diameter of the empty graph is undefined");
  if (!is_connected(g)) throw InputError("diameter requires a connected graph");
  int best = 0;
  for (Vertex v = 0; v < g.order(); ++v) best = std::max(best, eccentricity(g, v));
  return best;
}

/// Minimum-degree vertex; ties go to the smallest id.
inline std::pair<Vertex, int> min_degree_vertex(const Graph& g) {
  if (g.order() == 0) throw InputError("graph has no vertices");
  Vertex best = 0;
  int best_degree = g.degree(0);
  for (Vertex v = 1; v < g.order(); ++v) {
    if (const int d = g.degree(v); d < best_degree) {
      best = v;
      best_degree = d;
    }
  }
  return {best, best_degree};
}

/// Connected components ordered by their smallest member.
inline std::vector<VertexSet> components(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet left = g.vertices();
  while (!left.empty()) {
    VertexSet comp = VertexSet::single(left.front());
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      std::uint64_t next = 0;
      for (Vertex v : frontier) next |= g.row(v);
      frontier = VertexSet(next) - comp;
      comp = comp | frontier;
    }
    out.push_back(comp);
    left = left - comp;
  }
  return out;
}

// --- derived graphs ---------------------------------------------------------

/// Subgraph induced by S, relabeled to 0..|S|-1 in increasing id order.
inline Relabeled induced(const Graph& g, VertexSet keep) {
  if (!keep.is_subset_of(g.vertices())) throw InputError("vertex set has ids outside the graph");
  Relabeled out;
  out.to_parent = keep.members();
  std::vector<int> to_child(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < out.to_parent.size(); ++i) to_child[out.to_parent[i]] = static_cast<int>(i);
  std::vector<std::uint64_t> rows(out.to_parent.size(), 0);
  for (std::size_t i = 0; i < out.to_parent.size(); ++i) {
    for (Vertex x : g.neighbors(out.to_parent[i]) & keep) rows[i] |= std::uint64_t{1} << to_child[x];
  }
  out.graph = Graph::from_rows(static_cast<int>(rows.size()), rows);
  return out;
}

inline Relabeled delete_vertices(const Graph& g, VertexSet drop) {
  if (!drop.is_subset_of(g.vertices())) throw InputError("vertex set has ids outside the graph");
  return induced(g, g.vertices() - drop);
}

inline Relabeled delete_vertex(const Graph& g, Vertex v) {
  return delete_vertices(g, VertexSet::single(g.check(v)));
}

/// Same vertex set, listed edges removed. Every listed edge must exist.
inline Graph delete_edges(const Graph& g, std::span<const Edge> drop) {
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(g.order()));
  for (Vertex v = 0; v < g.order(); ++v) rows[v] = g.row(v);
  for (Edge e : drop) {
    if (g.edge_index(e.u, e.v) < 0 || !((rows[e.u] >> e.v) & 1u)) {
      throw InputError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") is not in the graph");
    }
    rows[e.u] &= ~(std::uint64_t{1} << e.v);
    rows[e.v] &= ~(std::uint64_t{1} << e.u);
  }
  return Graph::from_rows(g.order(), rows);
}

inline Graph add_edge(const Graph& g, Edge e) {
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  edges.push_back(e);
  return Graph(g.order(), edges);
}

}  // namespace rainbow
