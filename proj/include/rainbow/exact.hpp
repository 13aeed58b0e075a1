#pragma once

// Exact rainbow connection number by canonical brute force.
//
// Round k enumerates restricted-growth strings over the edge list: color
// assignments using exactly the colors 1..k, where color c+1 first appears
// after color c. Each color class partition is visited once instead of k!
// times. Rounds ascend from the diameter lower bound.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <limits>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "rainbow/error.hpp"
#include "rainbow/graph.hpp"
#include "rainbow/verify.hpp"

namespace rainbow {

/// Stirling number of the second kind, saturating at uint64 max.
inline std::uint64_t stirling2(int m, int k) {
  if (m < 0 || k < 0) return 0;
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  std::vector<std::uint64_t> row(static_cast<std::size_t>(k) + 1, 0);
  row[0] = 1;
  for (int i = 1; i <= m; ++i) {
    for (int j = std::min(i, k); j >= 1; --j) {
      const std::uint64_t a = row[j];
      const std::uint64_t b = row[j - 1];
      std::uint64_t prod = 0;
      if (a != 0 && static_cast<std::uint64_t>(j) > kMax / a) {
        prod = kMax;
      } else {
        prod = a * static_cast<std::uint64_t>(j);
      }
      row[j] = prod > kMax - b ? kMax : prod + b;
    }
    row[0] = 0;
  }
  return row[static_cast<std::size_t>(k)];
}

/// Lexicographic stream of restricted-growth strings of a given length that
/// use every color 1..colors.
class RestrictedGrowthStrings {
 public:
  RestrictedGrowthStrings(int length, int colors) : colors_(colors), current_(static_cast<std::size_t>(length)) {
    if (length < 1 || colors < 1) throw InputError("restricted growth strings need length >= 1 and colors >= 1");
    valid_ = colors <= length;
    if (!valid_) return;
    fill_from(0, 0);
  }

  bool valid() const noexcept { return valid_; }
  std::span<const Color> current() const noexcept { return current_; }

  /// Advances to the next string; returns false once the stream is exhausted.
  bool next() {
    if (!valid_) return false;
    const int m = static_cast<int>(current_.size());
    // prefix_max[i] = max(current_[0..i-1]).
    prefix_max_.assign(static_cast<std::size_t>(m) + 1, 0);
    for (int i = 0; i < m; ++i) prefix_max_[i + 1] = std::max(prefix_max_[i], current_[i]);
    for (int i = m - 1; i >= 1; --i) {
      const Color bumped = current_[i] + 1;
      if (bumped > colors_ || bumped > prefix_max_[i] + 1) continue;
      const int top = std::max(prefix_max_[i], bumped);
      if (m - 1 - i < colors_ - top) continue;
      current_[i] = bumped;
      fill_from(i + 1, top);
      return true;
    }
    valid_ = false;
    return false;
  }

 private:
  // Smallest completion of positions [from, m) given the colors used so far.
  void fill_from(int from, int top) {
    const int m = static_cast<int>(current_.size());
    for (int i = from; i < m; ++i) {
      const int tail = m - i;
      if (i == 0) {
        current_[0] = 1;
        top = 1;
      } else if (tail <= colors_ - top) {
        current_[i] = ++top;
      } else {
        current_[i] = 1;
      }
    }
  }

  int colors_;
  std::vector<Color> current_;
  std::vector<int> prefix_max_;
  bool valid_ = false;
};

/// All restricted-growth strings of length m with exactly k colors.
inline std::vector<std::vector<Color>> enumerate_colorings(int m, int k) {
  std::vector<std::vector<Color>> out;
  RestrictedGrowthStrings rgs(m, k);
  if (!rgs.valid()) return out;
  do {
    out.emplace_back(rgs.current().begin(), rgs.current().end());
  } while (rgs.next());
  return out;
}

enum class Optimality {
  LowerBoundMet,   ///< value equals the lower bound
  ExhaustedBelow,  ///< every canonical coloring with value-1 colors failed
  AboveCap,        ///< nothing within k_max; value is k_max+1 as a lower bound
};

inline std::string_view to_string(Optimality o) {
  switch (o) {
    case Optimality::LowerBoundMet: return "lower-bound-met";
    case Optimality::ExhaustedBelow: return "exhaustion-at-value-minus-1";
    case Optimality::AboveCap: return "above-cap";
  }
  return "?";
}

struct RcCertificate {
  int value = 0;
  std::optional<EdgeColoring> witness;
  Optimality optimality = Optimality::LowerBoundMet;
  int lower_bound = 0;
  std::uint64_t colorings_examined = 0;
  std::uint64_t expansions = 0;

  bool found() const noexcept { return optimality != Optimality::AboveCap; }
};

/// Thread-safe memo of exact results for small graphs, keyed by labeled edge set.
class ExactCache {
 public:
  static constexpr int kMaxOrder = 11;  // C(11,2) = 55 edge slots fit a word

  static std::optional<std::uint64_t> key_mask(const Graph& g) {
    if (g.order() > kMaxOrder) return std::nullopt;
    std::uint64_t mask = 0;
    for (Edge e : g.edges()) mask |= std::uint64_t{1} << slot(g.order(), e);
    return mask;
  }

  std::optional<RcCertificate> find(const Graph& g, int k_max) const {
    const auto mask = key_mask(g);
    if (!mask) return std::nullopt;
    std::shared_lock lock(mutex_);
    const auto it = map_.find(Key{g.order(), k_max, *mask});
    if (it == map_.end()) return std::nullopt;
    ++hits_;
    return it->second;
  }

  void store(const Graph& g, int k_max, const RcCertificate& cert) {
    const auto mask = key_mask(g);
    if (!mask) return;
    std::unique_lock lock(mutex_);
    map_.emplace(Key{g.order(), k_max, *mask}, cert);
  }

  std::size_t size() const {
    std::shared_lock lock(mutex_);
    return map_.size();
  }
  std::uint64_t hits() const { return hits_.load(); }

 private:
  struct Key {
    int n;
    int k_max;
    std::uint64_t mask;
    friend bool operator==(const Key&, const Key&) = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept {
      return std::hash<std::uint64_t>{}(k.mask * 0x9e3779b97f4a7c15ull ^
                                        (static_cast<std::uint64_t>(k.n) << 56) ^
                                        (static_cast<std::uint64_t>(k.k_max) << 48));
    }
  };

  static int slot(int n, Edge e) { return e.u * n - e.u * (e.u + 1) / 2 + (e.v - e.u - 1); }

  mutable std::shared_mutex mutex_;
  std::unordered_map<Key, RcCertificate, KeyHash> map_;
  mutable std::atomic<std::uint64_t> hits_{0};
};

struct ExactOptions {
  /// Largest color count tried; 0 means the edge count.
  int k_max = 0;
  /// Work budget in verifier state expansions.
  std::uint64_t budget = 100'000'000;
  /// Refuse up front when the first round alone cannot fit the budget.
  bool refuse_on_estimate = true;
  VerifyOptions verify;
  ExactCache* cache = nullptr;
};

/// max(diameter, 1); for trees the edge count, since every edge is a bridge.
inline int rc_lower_bound(const Graph& g) {
  if (!is_connected(g)) throw InputError("rc lower bound requires a connected graph");
  if (g.size() == g.order() - 1) return g.size();
  return std::max(diameter(g), 1);
}

inline RcCertificate rc_exact(const Graph& g, const ExactOptions& opts = {}) {
  if (g.order() < 2 || g.size() < 1) throw InputError("exact rc needs at least one edge");
  if (!is_connected(g)) throw InputError("exact rc requires a connected graph");
  const int m = g.size();
  const int k_max = opts.k_max <= 0 ? m : std::min(opts.k_max, m);

  if (opts.cache) {
    if (auto hit = opts.cache->find(g, k_max)) return *hit;
  }

  RcCertificate cert;
  cert.lower_bound = rc_lower_bound(g);
  const int lb = cert.lower_bound;
  if (lb > k_max) {
    cert.value = lb;
    cert.optimality = Optimality::AboveCap;
    if (opts.cache) opts.cache->store(g, k_max, cert);
    return cert;
  }

  if (opts.refuse_on_estimate) {
    const std::uint64_t first_round = stirling2(m, lb);
    const std::uint64_t per = static_cast<std::uint64_t>(g.order());
    if (first_round > opts.budget / per) {
      throw BudgetExceeded("estimated enumeration exceeds the work budget", lb, m);
    }
  }

  std::uint64_t expansions = 0;
  VerifyOptions vopts = opts.verify;
  vopts.expansions = &expansions;
  for (int k = lb; k <= k_max; ++k) {
    RestrictedGrowthStrings rgs(m, k);
    if (!rgs.valid()) break;
    do {
      ++cert.colorings_examined;
      const auto assignment = rgs.current();
      EdgeColoring c(g, std::vector<Color>(assignment.begin(), assignment.end()), k);
      if (is_rainbow_connected(g, c, vopts)) {
        cert.value = k;
        cert.witness = std::move(c);
        cert.optimality = k == lb ? Optimality::LowerBoundMet : Optimality::ExhaustedBelow;
        cert.expansions = expansions;
        if (opts.cache) opts.cache->store(g, k_max, cert);
        return cert;
      }
      if (expansions > opts.budget) {
        throw BudgetExceeded("exact search exceeded the work budget at k=" + std::to_string(k), k, m);
      }
    } while (rgs.next());
  }
  cert.value = k_max + 1;
  cert.optimality = Optimality::AboveCap;
  cert.expansions = expansions;
  if (opts.cache) opts.cache->store(g, k_max, cert);
  return cert;
}

}  // namespace rainbow
