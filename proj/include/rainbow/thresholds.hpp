#pragma once

// Edge-count thresholds f(n,k), candidate extremal graphs, and sweeps that
// check the dense-graph bounds over every labeled graph of a small order or
// over a seeded sample.

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstdint>
#include <exception>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "rainbow/dense.hpp"
#include "rainbow/error.hpp"
#include "rainbow/exact.hpp"
#include "rainbow/graph.hpp"
#include "rainbow/verify.hpp"

namespace rainbow {

enum class ThresholdStatus { Exact, LowerBoundOnly };

inline std::string_view to_string(ThresholdStatus s) {
  return s == ThresholdStatus::Exact ? "exact" : "lower-bound-only";
}

struct ThresholdEntry {
  int n = 0;
  int k = 0;
  long value = 0;
  ThresholdStatus status = ThresholdStatus::LowerBoundOnly;
  std::string source;
};

/// C(n-k+1,2) + (k-1): no smaller count can force rc <= k.
inline long threshold_lower_bound(int n, int k) { return pairs(n - k + 1) + (k - 1); }

inline ThresholdEntry f_threshold(int n, int k) {
  if (n < 2 || k < 1 || k > n - 1) {
    throw InputError("threshold needs 1 <= k <= n-1, got n=" + std::to_string(n) + " k=" + std::to_string(k));
  }
  ThresholdEntry e{n, k, threshold_lower_bound(n, k), ThresholdStatus::Exact, {}};
  if (k == 1) {
    e.source = "only complete graphs have rc = 1";
  } else if (k == n - 1) {
    e.source = "every connected graph has rc <= n-1";
  } else if (k == n - 2) {
    e.source = "connected graphs with at least n edges have rc <= n-2";
  } else if (k == 2 && n >= 3) {
    e.source = "two-color density bound, C(n-1,2)+1";
  } else if (k == 3 && n >= 4) {
    e.source = "three-color density bound, C(n-2,2)+2";
  } else if (k == 4 && n >= 5) {
    e.source = "four-color density bound, C(n-3,2)+3";
  } else {
    e.status = ThresholdStatus::LowerBoundOnly;
    e.source = "lower bound C(n-k+1,2)+(k-1) from the lollipop family";
  }
  return e;
}

/// K_{n-k+1} on 0..n-k with the path n-k, n-k+1, ..., n-1 hanging off vertex n-k.
inline Graph lollipop(int n, int k) {
  if (k < 2 || k > n - 1) throw InputError("lollipop needs 2 <= k <= n-1");
  std::vector<Edge> edges;
  const int head = n - k;
  for (Vertex u = 0; u <= head; ++u) {
    for (Vertex v = u + 1; v <= head; ++v) edges.push_back({u, v});
  }
  for (Vertex v = head; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return Graph(n, edges);
}

enum class SweepMode { Exhaustive, Sample };

inline std::string_view to_string(SweepMode m) { return m == SweepMode::Exhaustive ? "exhaustive" : "sample"; }

struct SearchFailure {
  Graph graph;
  std::string reason;
  std::optional<CaseTag> tag;
  std::optional<std::pair<Vertex, Vertex>> failing_pair;
  std::optional<RcCertificate> certificate;
  std::uint64_t index = 0;  // enumeration rank or sample number
};

struct SearchReport {
  std::string kind;  // "sweep" or "sharpness"
  int n = 0;
  int k = 0;
  SweepMode mode = SweepMode::Exhaustive;
  std::uint64_t seed = 0;
  std::uint64_t sample_size = 0;
  std::uint64_t checked = 0;
  std::uint64_t band_checked = 0;  // k = 2: instances whose exact rc was compared to 2
  std::vector<SearchFailure> failures;
  std::map<std::string, std::uint64_t> recoveries;  // recovery name -> count
  std::optional<Graph> witness;
  std::optional<RcCertificate> witness_certificate;
  bool inconclusive = false;
  double wall_seconds = 0;

  bool holds() const noexcept { return failures.empty() && !inconclusive; }
};

struct SweepOptions {
  SweepMode mode = SweepMode::Exhaustive;
  std::uint64_t seed = 1;
  std::uint64_t sample_size = 10'000;
  /// 0 means hardware concurrency.
  unsigned threads = 0;
  ColorerOptions colorer;
};

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

inline std::vector<Edge> edge_slots(int n) {
  std::vector<Edge> slots;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) slots.push_back({u, v});
  }
  return slots;
}

inline Graph from_mask(int n, const std::vector<Edge>& slots, std::uint64_t mask) {
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(n), 0);
  for (std::size_t i = 0; i < slots.size(); ++i) {
    if (mask >> i & 1) {
      rows[slots[i].u] |= std::uint64_t{1} << slots[i].v;
      rows[slots[i].v] |= std::uint64_t{1} << slots[i].u;
    }
  }
  return Graph::from_rows(n, rows);
}

/// Connected G(n,m) draw for sample number i, independent of thread layout.
inline Graph sample_graph(int n, long m_min, std::uint64_t seed, std::uint64_t i) {
  const auto slots = edge_slots(n);
  std::mt19937_64 rng(splitmix64(seed + i));
  std::uniform_int_distribution<long> pick_m(m_min, static_cast<long>(slots.size()));
  std::vector<std::size_t> order(slots.size());
  while (true) {
    const long m = pick_m(rng);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    std::uint64_t mask = 0;
    for (long j = 0; j < m; ++j) mask |= std::uint64_t{1} << order[static_cast<std::size_t>(j)];
    Graph g = from_mask(n, slots, mask);
    if (is_connected(g)) return g;
  }
}

inline unsigned worker_count(unsigned requested) {
  if (requested > 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

// Runs body(index, local_report) for index in [0, total) on striped workers
// and merges; failures come back ordered by index.
template <class Body>
void parallel_sweep(std::uint64_t total, unsigned threads, SearchReport& report, Body body) {
  const unsigned workers = static_cast<unsigned>(std::min<std::uint64_t>(worker_count(threads), std::max<std::uint64_t>(total, 1)));
  std::vector<SearchReport> partial(workers);
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  constexpr std::uint64_t kChunk = 4096;
  std::atomic<std::uint64_t> next{0};
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        while (true) {
          const std::uint64_t begin = next.fetch_add(kChunk);
          if (begin >= total) break;
          const std::uint64_t end = std::min(total, begin + kChunk);
          for (std::uint64_t i = begin; i < end; ++i) body(i, partial[w], w);
        }
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  for (auto& p : partial) {
    report.checked += p.checked;
    report.band_checked += p.band_checked;
    for (auto& [name, count] : p.recoveries) report.recoveries[name] += count;
    for (auto& f : p.failures) report.failures.push_back(std::move(f));
  }
  std::sort(report.failures.begin(), report.failures.end(),
            [](const SearchFailure& a, const SearchFailure& b) { return a.index < b.index; });
}

// Checks one instance of the k-color claim and records the outcome.
inline void check_instance(const Graph& g, int k, std::uint64_t index, const ColorerOptions& opts,
                           SearchReport& out) {
  ++out.checked;
  try {
    const ColoringResult r = color_dense(g, k, opts);
    for (const GapRecord& gap : r.recovered_gaps) ++out.recoveries[gap.recovery];
    if (!r.verified || r.colors_used > k || !is_rainbow_connected(g, r.coloring)) {
      out.failures.push_back({g, "coloring failed independent verification", r.tag, std::nullopt, std::nullopt, index});
    }
  } catch (const ProofGap& gap) {
    out.failures.push_back({g, "proof gap: " + gap.reason(), gap.tag(), gap.failing_pair(), std::nullopt, index});
  } catch (const BudgetExceeded& e) {
    out.failures.push_back({g, std::string("budget exceeded: ") + e.what(), std::nullopt, std::nullopt, std::nullopt,
                            index});
  }
  if (k == 2 && g.size() <= pairs(g.order()) - 1) {
    ++out.band_checked;
    ExactOptions eo = opts.exact;
    eo.k_max = 3;
    eo.cache = opts.cache.get();
    const RcCertificate cert = rc_exact(g, eo);
    if (cert.value != 2) {
      out.failures.push_back({g, "exact rc is " + std::to_string(cert.value) + ", expected 2", std::nullopt,
                              std::nullopt, cert, index});
    }
  }
}

/// True when no assignment of colors 1..k to the edges is rainbow connected,
/// by plain k^m enumeration.
inline bool naive_needs_more_than(const Graph& g, int k) {
  const int m = g.size();
  std::vector<Color> colors(static_cast<std::size_t>(m), 1);
  while (true) {
    if (is_rainbow_connected(g, EdgeColoring(g, colors, k))) return false;
    int i = 0;
    while (i < m && colors[static_cast<std::size_t>(i)] == k) colors[static_cast<std::size_t>(i++)] = 1;
    if (i == m) return true;
    ++colors[static_cast<std::size_t>(i)];
  }
}

}  // namespace detail

/// Largest order swept exhaustively: C(7,2) = 21 edge slots.
inline constexpr int kExhaustiveMaxOrder = 7;

inline SearchReport exhaustive_verify(int n, int k, const SweepOptions& opts = {}) {
  if (k < 2 || k > 4) throw InputError("sweeps cover k = 2, 3, 4");
  if (n < k + 1) throw InputError("sweep needs n >= k+1");
  if (n > ExactCache::kMaxOrder) throw InputError("sweeps are limited to n <= " + std::to_string(ExactCache::kMaxOrder));
  if (opts.mode == SweepMode::Exhaustive && n > kExhaustiveMaxOrder) {
    throw InputError("exhaustive sweep is limited to n <= " + std::to_string(kExhaustiveMaxOrder) +
                     "; use sample mode");
  }
  const auto start = std::chrono::steady_clock::now();
  SearchReport report;
  report.kind = "sweep";
  report.n = n;
  report.k = k;
  report.mode = opts.mode;
  report.seed = opts.seed;
  const long m_min = f_threshold(n, k).value;
  const unsigned workers = detail::worker_count(opts.threads);
  std::vector<ColorerOptions> local(workers, opts.colorer);
  for (auto& o : local) {
    if (!o.cache) o.cache = std::make_shared<ExactCache>();
  }

  if (opts.mode == SweepMode::Exhaustive) {
    const auto slots = detail::edge_slots(n);
    const std::uint64_t total = std::uint64_t{1} << slots.size();
    detail::parallel_sweep(total, workers, report, [&](std::uint64_t mask, SearchReport& out, unsigned w) {
      if (std::popcount(mask) < m_min) return;
      const Graph g = detail::from_mask(n, slots, mask);
      if (!is_connected(g)) return;
      detail::check_instance(g, k, mask, local[w], out);
    });
  } else {
    report.sample_size = opts.sample_size;
    detail::parallel_sweep(opts.sample_size, workers, report, [&](std::uint64_t i, SearchReport& out, unsigned w) {
      detail::check_instance(detail::sample_graph(n, m_min, opts.seed, i), k, i, local[w], out);
    });
  }
  report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

struct SharpnessOptions {
  /// Candidate graphs examined before giving up.
  std::uint64_t budget = 2'000'000;
  std::uint64_t seed = 1;
  ExactOptions exact;
};

/// Searches connected graphs with f(n,k)-1 edges for one with rc > k.
/// Seeds first: the lollipop minus one clique edge, trying edges at the
/// attachment vertex before the rest. Then every labeled graph with that
/// edge count (n <= 7) or seeded samples.
inline SearchReport sharpness_witness(int n, int k, const SharpnessOptions& opts = {}) {
  const ThresholdEntry entry = f_threshold(n, k);
  if (k < 2) throw InputError("sharpness needs k >= 2");
  if (n > ExactCache::kMaxOrder) throw InputError("sharpness search is limited to n <= " + std::to_string(ExactCache::kMaxOrder));
  const auto start = std::chrono::steady_clock::now();
  SearchReport report;
  report.kind = "sharpness";
  report.n = n;
  report.k = k;
  report.seed = opts.seed;
  const long m = entry.value - 1;
  ExactCache cache;
  ExactOptions eo = opts.exact;
  eo.k_max = k;
  eo.cache = &cache;

  auto accept = [&](const Graph& g) {
    ++report.checked;
    if (!is_connected(g) || g.size() != m) return false;
    const RcCertificate cert = rc_exact(g, eo);
    if (cert.found()) return false;
    // Independent re-check before reporting.
    if (!detail::naive_needs_more_than(g, k)) return false;
    report.witness = g;
    report.witness_certificate = cert;
    return true;
  };
  auto done = [&] {
    report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
  };

  const Graph lp = lollipop(n, k);
  const Vertex head = n - k;
  std::vector<Edge> seeds;
  for (Edge e : lp.edges()) {
    if (e.v <= head && (e.u == head || e.v == head)) seeds.push_back(e);
  }
  for (Edge e : lp.edges()) {
    if (e.v <= head && e.u != head && e.v != head) seeds.push_back(e);
  }
  for (Edge e : seeds) {
    const Edge drop[] = {e};
    if (accept(delete_edges(lp, drop))) return done();
  }

  const auto slots = detail::edge_slots(n);
  if (n <= kExhaustiveMaxOrder) {
    const std::uint64_t total = std::uint64_t{1} << slots.size();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
      if (std::popcount(mask) != m) continue;
      if (report.checked >= opts.budget) {
        report.inconclusive = true;
        return done();
      }
      if (accept(detail::from_mask(n, slots, mask))) return done();
    }
    return done();
  }
  std::mt19937_64 rng(detail::splitmix64(opts.seed));
  std::vector<std::size_t> order(slots.size());
  while (report.checked < opts.budget) {
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    std::uint64_t mask = 0;
    for (long j = 0; j < m; ++j) mask |= std::uint64_t{1} << order[static_cast<std::size_t>(j)];
    if (accept(detail::from_mask(n, slots, mask))) return done();
  }
  report.inconclusive = true;
  return done();
}

}  // namespace rainbow
