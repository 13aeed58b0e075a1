#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "rainbow/rainbow.hpp"

namespace rainbow::testing {

inline Graph path(int n) { return generate(GraphKind::Path, {n}); }
inline Graph cycle(int n) { return generate(GraphKind::Cycle, {n}); }
inline Graph complete(int n) { return generate(GraphKind::Complete, {n}); }
inline Graph star(int n) { return generate(GraphKind::Star, {n}); }

inline Graph minus_edge(const Graph& g, Edge e) {
  const Edge drop[] = {e};
  return delete_edges(g, drop);
}

/// Calls fn on every connected labeled graph of order n.
inline void for_each_connected(int n, const std::function<void(const Graph&)>& fn) {
  const auto slots = detail::edge_slots(n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
    const Graph g = detail::from_mask(n, slots, mask);
    if (is_connected(g)) fn(g);
  }
}

inline EdgeColoring random_coloring(const Graph& g, int palette, std::mt19937_64& rng) {
  std::uniform_int_distribution<Color> pick(1, palette);
  std::vector<Color> colors(static_cast<std::size_t>(g.size()));
  for (auto& c : colors) c = pick(rng);
  return EdgeColoring(g, std::move(colors), palette);
}

/// Rainbow path check by enumerating simple paths, independent of the library search.
inline bool naive_rainbow_path(const Graph& g, const EdgeColoring& c, Vertex u, Vertex v) {
  if (u == v) return true;
  std::vector<bool> on_path(static_cast<std::size_t>(g.order()), false);
  std::vector<bool> used(static_cast<std::size_t>(c.palette()) + 1, false);
  std::function<bool(Vertex)> dfs = [&](Vertex x) {
    if (x == v) return true;
    on_path[static_cast<std::size_t>(x)] = true;
    for (Vertex y = 0; y < g.order(); ++y) {
      if (!g.adjacent(x, y) || on_path[static_cast<std::size_t>(y)]) continue;
      const Color col = c.color_of(g, x, y);
      if (used[static_cast<std::size_t>(col)]) continue;
      used[static_cast<std::size_t>(col)] = true;
      const bool ok = dfs(y);
      used[static_cast<std::size_t>(col)] = false;
      if (ok) return true;
    }
    on_path[static_cast<std::size_t>(x)] = false;
    return false;
  };
  return dfs(u);
}

inline bool naive_rainbow_connected(const Graph& g, const EdgeColoring& c) {
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if (!naive_rainbow_path(g, c, u, v)) return false;
    }
  }
  return true;
}

/// Smallest k with a rainbow connected k-coloring, by plain k^m enumeration.
inline int naive_rc(const Graph& g) {
  for (int k = 1;; ++k) {
    if (!detail::naive_needs_more_than(g, k)) return k;
  }
}

}  // namespace rainbow::testing
