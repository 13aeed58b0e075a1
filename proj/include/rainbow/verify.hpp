#pragma once

// Edge colorings and rainbow-connectivity checks.
//
// The main search runs over states (vertex, set of colors used so far). A
// state is dropped when its vertex was already reached with a subset of its
// colors, since every continuation of the larger set is also open to the
// smaller one. With k colors at most n * 2^k states exist. Beyond
// `subset_search_cap` colors the search switches to a DFS over simple paths.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rainbow/error.hpp"
#include "rainbow/graph.hpp"

namespace rainbow {

using Color = int;

class EdgeColoring {
 public:
  static constexpr int kMaxColors = 64;

  EdgeColoring() = default;

  /// colors[i] colors graph.edges()[i]; every value must lie in 1..palette.
  EdgeColoring(const Graph& g, std::vector<Color> colors, int palette)
      : colors_(std::move(colors)), palette_(palette), fingerprint_(g.fingerprint()), edges_(g.size()) {
    if (palette < 1 || palette > kMaxColors) {
      throw InputError("palette size " + std::to_string(palette) + " outside 1.." + std::to_string(kMaxColors));
    }
    if (static_cast<int>(colors_.size()) != g.size()) {
      throw InputError("coloring has " + std::to_string(colors_.size()) + " entries for " +
                       std::to_string(g.size()) + " edges");
    }
    for (Color c : colors_) {
      if (c < 1 || c > palette) {
        throw InputError("color " + std::to_string(c) + " outside 1.." + std::to_string(palette));
      }
    }
  }

  static EdgeColoring constant(const Graph& g, Color c = 1) {
    return EdgeColoring(g, std::vector<Color>(static_cast<std::size_t>(g.size()), c), std::max(c, 1));
  }

  /// Every edge gets its own color.
  static EdgeColoring all_distinct(const Graph& g) {
    std::vector<Color> colors(static_cast<std::size_t>(g.size()));
    for (std::size_t i = 0; i < colors.size(); ++i) colors[i] = static_cast<Color>(i + 1);
    return EdgeColoring(g, std::move(colors), std::max(g.size(), 1));
  }

  int palette() const noexcept { return palette_; }
  std::span<const Color> colors() const noexcept { return colors_; }
  Color operator[](std::size_t edge) const { return colors_.at(edge); }
  std::size_t size() const noexcept { return colors_.size(); }

  bool binds(const Graph& g) const noexcept {
    return fingerprint_ == g.fingerprint() && edges_ == g.size();
  }

  Color color_of(const Graph& g, Vertex u, Vertex v) const {
    const int e = g.edge_index(u, v);
    if (e < 0) throw InputError("no edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    return colors_[static_cast<std::size_t>(e)];
  }

  int colors_used() const {
    std::uint64_t seen = 0;
    for (Color c : colors_) seen |= std::uint64_t{1} << (c - 1);
    return std::popcount(seen);
  }

  /// Applies a relabeling; perm[c] is the new id of color c (perm[0] unused).
  EdgeColoring permuted(const Graph& g, std::span<const Color> perm, int palette) const {
    std::vector<Color> out(colors_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = perm[static_cast<std::size_t>(colors_[i])];
    return EdgeColoring(g, std::move(out), palette);
  }

  friend bool operator==(const EdgeColoring& a, const EdgeColoring& b) {
    return a.fingerprint_ == b.fingerprint_ && a.palette_ == b.palette_ && a.colors_ == b.colors_;
  }

 private:
  std::vector<Color> colors_;
  int palette_ = 1;
  std::uint64_t fingerprint_ = 0;
  int edges_ = 0;
};

struct RainbowWitness {
  std::vector<Vertex> path;
  std::vector<Color> colors;
};

struct VerifyOptions {
  /// Palettes up to this size use the (vertex, color subset) search.
  int subset_search_cap = 16;
  /// When set, incremented once per expanded search state.
  std::uint64_t* expansions = nullptr;
};

namespace detail {

inline void require_bound(const Graph& g, const EdgeColoring& c) {
  if (!c.binds(g)) throw InputError("coloring is not bound to this graph");
}

// Supersets of each subset of a 6-bit universe; sup[s] has bit t set iff s ⊆ t.
inline const std::array<std::uint64_t, 64>& superset_table() {
  static const std::array<std::uint64_t, 64> table = [] {
    std::array<std::uint64_t, 64> t{};
    for (unsigned s = 0; s < 64; ++s) {
      for (unsigned x = 0; x < 64; ++x) {
        if ((s & ~x) == 0) t[s] |= std::uint64_t{1} << x;
      }
    }
    return t;
  }();
  return table;
}

struct SearchState {
  Vertex vertex;
  std::uint64_t used;
  int parent;
};

// Subset BFS from `source`. Returns the set of rainbow-reachable vertices.
// When `target` is given the search stops on reaching it and, if `trail` is
// non-null, leaves the state list there for path reconstruction; the index
// of the target state is returned through `hit`.
inline VertexSet subset_bfs(const Graph& g, const EdgeColoring& c, Vertex source, std::optional<Vertex> target,
                            const VerifyOptions& opts, std::vector<SearchState>* trail, int* hit) {
  const int n = g.order();
  const std::span<const Color> col = c.colors();
  const VertexSet all = g.vertices();
  std::uint64_t reached = std::uint64_t{1} << source;
  if (target && *target == source) {
    if (trail) *trail = {{source, 0, -1}};
    if (hit) *hit = 0;
    return VertexSet(reached);
  }

  std::vector<SearchState> local;
  std::vector<SearchState>& queue = trail ? *trail : local;
  queue.clear();
  queue.push_back({source, 0, -1});

  const bool dense = c.palette() <= 6;
  std::array<std::uint64_t, 64> dominated{};
  std::vector<std::vector<std::uint64_t>> minimal;
  if (!dense) minimal.resize(static_cast<std::size_t>(n));
  const auto& sup = superset_table();

  auto record = [&](Vertex v, std::uint64_t used) -> bool {
    if (dense) {
      if ((dominated[v] >> used) & 1u) return false;
      dominated[v] |= sup[used];
      return true;
    }
    auto& list = minimal[v];
    for (std::uint64_t s : list) {
      if ((s & ~used) == 0) return false;
    }
    std::erase_if(list, [used](std::uint64_t s) { return (used & ~s) == 0; });
    list.push_back(used);
    return true;
  };
  record(source, 0);

  std::uint64_t expanded = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const SearchState st = queue[head];
    ++expanded;
    for (Vertex x : VertexSet(g.row(st.vertex))) {
      const std::uint64_t bit = std::uint64_t{1} << (col[g.edge_index_unchecked(st.vertex, x)] - 1);
      if (st.used & bit) continue;
      const std::uint64_t next = st.used | bit;
      if (!record(x, next)) continue;
      queue.push_back({x, next, static_cast<int>(head)});
      reached |= std::uint64_t{1} << x;
      if (target && x == *target) {
        if (hit) *hit = static_cast<int>(queue.size() - 1);
        if (opts.expansions) *opts.expansions += expanded;
        return VertexSet(reached);
      }
    }
    if (!target && VertexSet(reached) == all) break;
  }
  if (opts.expansions) *opts.expansions += expanded;
  if (hit) *hit = -1;
  return VertexSet(reached);
}

// DFS over simple paths for large palettes.
inline VertexSet path_dfs(const Graph& g, const EdgeColoring& c, Vertex source, std::optional<Vertex> target,
                          const VerifyOptions& opts, std::vector<Vertex>* found) {
  const std::span<const Color> col = c.colors();
  const VertexSet all = g.vertices();
  std::uint64_t reached = std::uint64_t{1} << source;
  std::vector<Vertex> stack{source};
  std::uint64_t expanded = 0;
  bool done = target && *target == source;
  if (done && found) *found = stack;

  auto go = [&](auto&& self, Vertex v, std::uint64_t on_path, std::uint64_t used) -> void {
    ++expanded;
    for (Vertex x : VertexSet(g.row(v) & ~on_path)) {
      if (done) return;
      const std::uint64_t bit = std::uint64_t{1} << (col[g.edge_index_unchecked(v, x)] - 1);
      if (used & bit) continue;
      reached |= std::uint64_t{1} << x;
      stack.push_back(x);
      if (target && x == *target) {
        done = true;
        if (found) *found = stack;
        return;
      }
      if (!target && VertexSet(reached) == all) {
        done = true;
        return;
      }
      self(self, x, on_path | (std::uint64_t{1} << x), used | bit);
      stack.pop_back();
    }
  };
  if (!done) go(go, source, std::uint64_t{1} << source, 0);
  if (opts.expansions) *opts.expansions += expanded;
  return VertexSet(reached);
}

inline VertexSet reachable(const Graph& g, const EdgeColoring& c, Vertex source, const VerifyOptions& opts) {
  if (c.palette() <= opts.subset_search_cap) return subset_bfs(g, c, source, std::nullopt, opts, nullptr, nullptr);
  return path_dfs(g, c, source, std::nullopt, opts, nullptr);
}

}  // namespace detail

/// Vertices joined to `source` by some rainbow path (source included).
inline VertexSet rainbow_reachable(const Graph& g, const EdgeColoring& c, Vertex source,
                                   const VerifyOptions& opts = {}) {
  detail::require_bound(g, c);
  return detail::reachable(g, c, g.check(source), opts);
}

inline bool rainbow_path_exists(const Graph& g, const EdgeColoring& c, Vertex u, Vertex v,
                                const VerifyOptions& opts = {}) {
  detail::require_bound(g, c);
  g.check(u);
  g.check(v);
  if (u == v) return true;
  if (c.palette() <= opts.subset_search_cap) {
    int hit = -1;
    std::vector<detail::SearchState> trail;
    detail::subset_bfs(g, c, u, v, opts, &trail, &hit);
    return hit >= 0;
  }
  return detail::path_dfs(g, c, u, v, opts, nullptr).contains(v);
}

/// Shortest rainbow u-v path (BFS order, smaller next vertex first), if any.
inline std::optional<RainbowWitness> rainbow_witness(const Graph& g, const EdgeColoring& c, Vertex u, Vertex v,
                                                     const VerifyOptions& opts = {}) {
  detail::require_bound(g, c);
  g.check(u);
  g.check(v);
  RainbowWitness w;
  if (c.palette() <= opts.subset_search_cap) {
    int hit = -1;
    std::vector<detail::SearchState> trail;
    detail::subset_bfs(g, c, u, v, opts, &trail, &hit);
    if (hit < 0) return std::nullopt;
    for (int i = hit; i >= 0; i = trail[static_cast<std::size_t>(i)].parent) {
      w.path.push_back(trail[static_cast<std::size_t>(i)].vertex);
    }
    std::reverse(w.path.begin(), w.path.end());
  } else {
    std::vector<Vertex> found;
    detail::path_dfs(g, c, u, v, opts, &found);
    if (found.empty()) return std::nullopt;
    w.path = std::move(found);
  }
  for (std::size_t i = 0; i + 1 < w.path.size(); ++i) w.colors.push_back(c.color_of(g, w.path[i], w.path[i + 1]));
  return w;
}

/// First pair (u < v, lexicographic) with no rainbow path, if any.
inline std::optional<std::pair<Vertex, Vertex>> first_unconnected_pair(const Graph& g, const EdgeColoring& c,
                                                                       const VerifyOptions& opts = {}) {
  detail::require_bound(g, c);
  const VertexSet all = g.vertices();
  for (Vertex u = 0; u < g.order(); ++u) {
    const VertexSet r = detail::reachable(g, c, u, opts);
    if (r != all) return std::pair{u, (all - r).front()};
  }
  return std::nullopt;
}

inline bool is_rainbow_connected(const Graph& g, const EdgeColoring& c, const VerifyOptions& opts = {}) {
  detail::require_bound(g, c);
  const VertexSet all = g.vertices();
  // Reachability is symmetric, so the last source adds nothing.
  for (Vertex u = 0; u + 1 < g.order(); ++u) {
    if (detail::reachable(g, c, u, opts) != all) return false;
  }
  return true;
}

/// Checks a witness against the graph and coloring without any search.
inline bool witness_is_valid(const Graph& g, const EdgeColoring& c, const RainbowWitness& w, Vertex u, Vertex v) {
  if (w.path.empty() || w.path.front() != u || w.path.back() != v) return false;
  if (w.colors.size() + 1 != w.path.size()) return false;
  std::uint64_t used = 0;
  for (std::size_t i = 0; i + 1 < w.path.size(); ++i) {
    const int e = g.edge_index(w.path[i], w.path[i + 1]);
    if (e < 0 || c[static_cast<std::size_t>(e)] != w.colors[i]) return false;
    const std::uint64_t bit = std::uint64_t{1} << (w.colors[i] - 1);
    if (used & bit) return false;
    used |= bit;
  }
  return true;
}

}  // namespace rainbow
