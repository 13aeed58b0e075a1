#pragma once

// Constructive rainbow colorings for dense graphs.
//
// color_rc2 / color_rc3 / color_rc4 follow inductive arguments for the edge
// thresholds C(n-1,2)+1, C(n-2,2)+2 and C(n-3,2)+3: remove a minimum-degree
// vertex w (or a pair of far-apart vertices), drop a few edges between N(w)
// and the non-neighbors of w, color the smaller graph recursively and then
// extend the coloring over the removed part with fixed color rules.
//
// Every coloring is checked by the rainbow verifier before it is returned.
// When a branch meets a structure its argument excludes, or the extension
// fails the check, the procedure throws ProofGap with the active case, the
// reduction trace and a failing vertex pair. Graphs with at most
// `fallback_cap` vertices recover from a gap by exact search.
//
// Conventions shared by every branch:
//  * ties (w, u_i, vertex pairs, connector paths) go to the smallest ids;
//  * the recursive coloring forms the base layer, explicit color rules are
//    applied on top in order and the first rule naming an edge wins;
//  * "remaining edges" means edges no earlier rule or sub-coloring covered.

#include <algorithm>
#include <array>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rainbow/error.hpp"
#include "rainbow/exact.hpp"
#include "rainbow/graph.hpp"
#include "rainbow/verify.hpp"

namespace rainbow {

enum class CaseTag {
  Base,
  PendantDelta1,
  TwoColorInduction,
  ThreeColorInduction,
  ThreeColorDisjointPair,
  ThreeColorDisconnectedRepair,
  FourCase1,
  FourCase2,
  FourCase3P1,
  FourCase3P2,
  FourCase3PBig,
  FallbackExact,
};

inline std::string_view to_string(CaseTag tag) {
  switch (tag) {
    case CaseTag::Base: return "Base";
    case CaseTag::PendantDelta1: return "PendantDelta1";
    case CaseTag::TwoColorInduction: return "TwoColorInduction";
    case CaseTag::ThreeColorInduction: return "ThreeColorInduction";
    case CaseTag::ThreeColorDisjointPair: return "ThreeColorDisjointPair";
    case CaseTag::ThreeColorDisconnectedRepair: return "ThreeColorDisconnectedRepair";
    case CaseTag::FourCase1: return "FourCase1";
    case CaseTag::FourCase2: return "FourCase2";
    case CaseTag::FourCase3P1: return "FourCase3-p1";
    case CaseTag::FourCase3P2: return "FourCase3-p2";
    case CaseTag::FourCase3PBig: return "FourCase3-pBig";
    case CaseTag::FallbackExact: return "FallbackExact";
  }
  return "?";
}

inline std::optional<CaseTag> case_tag_from_string(std::string_view s) {
  for (int i = 0; i <= static_cast<int>(CaseTag::FallbackExact); ++i) {
    if (to_string(static_cast<CaseTag>(i)) == s) return static_cast<CaseTag>(i);
  }
  return std::nullopt;
}

/// u is a neighbor of w adjacent to v, a non-neighbor of w.
struct MatchedPair {
  Vertex u = 0;
  Vertex v = 0;
  friend bool operator==(const MatchedPair&, const MatchedPair&) = default;
};

/// One level of a reduction, in the labels of the graph at that level.
struct ReductionStep {
  int order = 0;
  int depth = 0;
  CaseTag tag = CaseTag::Base;
  std::string branch;
  Vertex w = -1;
  std::optional<Vertex> partner;  // second removed vertex for pair cases
  int t = 0;                      // deg(w) = order - 2 - t
  std::vector<Vertex> complement_list;
  std::vector<MatchedPair> matched;
  std::vector<Edge> deleted;
  std::vector<Vertex> child_to_parent;  // labeling of the recursive subgraph
};

struct GapRecord {
  CaseTag tag = CaseTag::Base;
  std::string reason;
  int order = 0;
  std::optional<std::pair<Vertex, Vertex>> failing_pair;
  /// "exact-fallback" or the name of the repair that replaced the failed branch.
  std::string recovery;
};

struct ColoringResult {
  EdgeColoring coloring;
  int colors_used = 0;
  std::vector<ReductionStep> trace;
  bool verified = false;
  CaseTag tag = CaseTag::Base;
  std::vector<GapRecord> recovered_gaps;
};

/// A case-analysis procedure could not produce a valid coloring.
class ProofGap : public std::runtime_error {
 public:
  ProofGap(CaseTag tag, std::string reason, Graph graph, std::vector<ReductionStep> trace,
           std::optional<std::pair<Vertex, Vertex>> failing_pair = std::nullopt)
      : std::runtime_error(std::string(to_string(tag)) + ": " + reason + " (n=" + std::to_string(graph.order()) +
                           ")"),
        tag_(tag),
        reason_(std::move(reason)),
        graph_(std::move(graph)),
        trace_(std::move(trace)),
        failing_pair_(failing_pair) {}

  CaseTag tag() const noexcept { return tag_; }
  const std::string& reason() const noexcept { return reason_; }
  /// The graph of the level where the gap occurred.
  const Graph& graph() const noexcept { return graph_; }
  const std::vector<ReductionStep>& trace() const noexcept { return trace_; }
  std::optional<std::pair<Vertex, Vertex>> failing_pair() const noexcept { return failing_pair_; }

 private:
  CaseTag tag_;
  std::string reason_;
  Graph graph_;
  std::vector<ReductionStep> trace_;
  std::optional<std::pair<Vertex, Vertex>> failing_pair_;
};

struct ColorerOptions {
  /// Graphs up to this order are colored by exact search.
  int base_cap = 6;
  /// Graphs up to this order retry by exact search after a ProofGap.
  int fallback_cap = 6;
  /// Replace branches that fail as written by the repaired constructions.
  /// When false every such failure surfaces as ProofGap.
  bool repairs = true;
  ExactOptions exact;
  std::shared_ptr<ExactCache> cache;
};

/// Edge count from which the k-color procedure applies: C(n-k+1,2) + k-1.
inline long density_threshold(int k, int n) { return pairs(n - k + 1) + (k - 1); }

/// Min-degree reduction: w, its non-neighbors v_1 < ... < v_{t+1}, for each
/// the smallest common neighbor u_i, and all matched edges but the last `keep`.
inline ReductionStep reduce_min_degree(const Graph& g, int keep) {
  ReductionStep step;
  step.order = g.order();
  const auto [w, dw] = min_degree_vertex(g);
  step.w = w;
  step.t = g.order() - 2 - dw;
  const VertexSet nw = g.neighbors(w);
  step.complement_list = complement_neighborhood(g, w).members();
  for (Vertex v : step.complement_list) {
    const VertexSet common = g.neighbors(v) & nw;
    if (common.empty()) {
      throw StructuralError("non-neighbor " + std::to_string(v) + " of w=" + std::to_string(w) +
                            " has no common neighbor with w");
    }
    step.matched.push_back({common.front(), v});
  }
  const int drop = std::max(0, static_cast<int>(step.matched.size()) - keep);
  for (int i = 0; i < drop; ++i) step.deleted.push_back(normalized({step.matched[i].u, step.matched[i].v}));
  return step;
}

namespace detail {

// Builds a coloring of one graph from sub-colorings and explicit rules.
class Painter {
 public:
  explicit Painter(const Graph& g)
      : g_(g), colors_(static_cast<std::size_t>(g.size()), 0), fixed_(static_cast<std::size_t>(g.size()), false) {}

  void adopt(const Graph& sub, std::span<const Vertex> to_parent, const EdgeColoring& c,
             std::span<const Color> perm) {
    for (std::size_t i = 0; i < sub.edges().size(); ++i) {
      const Edge e = sub.edges()[i];
      const auto idx = static_cast<std::size_t>(g_.edge_index(to_parent[e.u], to_parent[e.v]));
      if (!fixed_[idx]) colors_[idx] = perm[static_cast<std::size_t>(c[i])];
    }
  }

  void assign(Vertex u, Vertex v, Color c) {
    const int idx = g_.edge_index(u, v);
    if (idx < 0) return;
    if (fixed_[static_cast<std::size_t>(idx)]) return;
    colors_[static_cast<std::size_t>(idx)] = c;
    fixed_[static_cast<std::size_t>(idx)] = true;
  }
  void assign(Edge e, Color c) { assign(e.u, e.v, c); }

  // Keeps the current color of an edge against later rules.
  void pin(Vertex u, Vertex v) {
    const int idx = g_.edge_index(u, v);
    if (idx >= 0) fixed_[static_cast<std::size_t>(idx)] = true;
  }

  void assign_at(Vertex v, Color c) {
    for (Vertex x : g_.neighbors(v)) assign(v, x, c);
  }

  void fill_remaining(Color c) {
    for (std::size_t i = 0; i < colors_.size(); ++i) {
      if (colors_[i] == 0) {
        colors_[i] = c;
        fixed_[i] = true;
      }
    }
  }

  bool complete() const {
    return std::none_of(colors_.begin(), colors_.end(), [](Color c) { return c == 0; });
  }

  EdgeColoring finish(int palette) const { return EdgeColoring(g_, colors_, palette); }

 private:
  const Graph& g_;
  std::vector<Color> colors_;
  std::vector<bool> fixed_;
};

// perm[c] for c in 1..from: the listed colors go to 1, 2, ... in order of
// first appearance, the rest keep their relative order on the next targets.
inline std::vector<Color> lead_with(std::initializer_list<Color> leaders, int from, int to) {
  std::vector<Color> perm(static_cast<std::size_t>(std::max(from, to)) + 1, 0);
  std::vector<bool> taken(perm.size(), false);
  Color next = 1;
  for (Color c : leaders) {
    if (perm[c] != 0) continue;
    perm[c] = next;
    taken[next] = true;
    ++next;
  }
  Color target = 1;
  for (Color c = 1; c <= from; ++c) {
    if (perm[c] != 0) continue;
    while (taken[target]) ++target;
    perm[c] = target;
    taken[target] = true;
  }
  return perm;
}

inline std::vector<Color> identity_perm(int palette) {
  std::vector<Color> perm(static_cast<std::size_t>(palette) + 1);
  for (int c = 0; c <= palette; ++c) perm[c] = c;
  return perm;
}

inline std::vector<Vertex> compose(std::span<const Vertex> inner, std::span<const Vertex> outer) {
  std::vector<Vertex> out(inner.size());
  for (std::size_t i = 0; i < inner.size(); ++i) out[i] = outer[inner[i]];
  return out;
}

// A recursively colored subgraph of the current level.
struct Piece {
  Graph graph;
  std::vector<Vertex> to_parent;
  std::vector<int> to_child;
  ColoringResult result;

  Color color(Vertex u, Vertex v) const {
    return result.coloring.color_of(graph, to_child.at(u), to_child.at(v));
  }
};

class Colorer {
 public:
  explicit Colorer(const ColorerOptions& opts) : opts_(opts) {
    exact_ = opts_.exact;
    exact_.cache = opts_.cache.get();
  }

  static void check_precondition(int k, const Graph& g) {
    const int n = g.order();
    if (n < k + 1) {
      throw PreconditionNotMet("the " + std::to_string(k) + "-color procedure needs n >= " + std::to_string(k + 1));
    }
    if (!is_connected(g)) throw PreconditionNotMet("graph is disconnected");
    const long need = density_threshold(k, n);
    if (g.size() < need) {
      throw PreconditionNotMet("m=" + std::to_string(g.size()) + " below the " + std::to_string(k) +
                               "-color threshold " + std::to_string(need) + " for n=" + std::to_string(n));
    }
  }

  ColoringResult run(int k, const Graph& g) {
    check_precondition(k, g);
    return guarded(k, g);
  }

  ColoringResult exact(int k, const Graph& g, CaseTag tag) {
    ExactOptions eo = exact_;
    eo.k_max = k;
    const RcCertificate cert = rc_exact(g, eo);
    if (!cert.found()) {
      throw ProofGap(tag, "exact search found no coloring with " + std::to_string(k) + " colors", g, active_);
    }
    ColoringResult r;
    const auto colors = cert.witness->colors();
    r.coloring = EdgeColoring(g, std::vector<Color>(colors.begin(), colors.end()), k);
    r.colors_used = r.coloring.colors_used();
    r.tag = tag;
    ReductionStep step;
    step.order = g.order();
    step.depth = static_cast<int>(active_.size());
    step.tag = tag;
    step.branch = "exact rc=" + std::to_string(cert.value);
    r.trace.push_back(std::move(step));
    r.verified = is_rainbow_connected(g, r.coloring);
    if (!r.verified) throw ProofGap(tag, "exact witness failed verification", g, active_);
    return r;
  }

 private:
  // RAII frame on the active reduction stack, so gaps report their path.
  class Frame {
   public:
    Frame(Colorer& c, ReductionStep& step) : c_(c) {
      step.depth = static_cast<int>(c_.active_.size());
      c_.active_.push_back(step);
      index_ = c_.active_.size() - 1;
    }
    ~Frame() { c_.active_.resize(index_); }
    void update(const ReductionStep& step) { c_.active_[index_] = step; }
    Frame(const Frame&) = delete;
    Frame& operator=(const Frame&) = delete;

   private:
    Colorer& c_;
    std::size_t index_ = 0;
  };

  int base_for(int k) const { return std::max(opts_.base_cap, k + 2); }

  [[noreturn]] void gap(CaseTag tag, const std::string& reason, const Graph& g,
                        std::optional<std::pair<Vertex, Vertex>> pair = std::nullopt) const {
    throw ProofGap(tag, reason, g, active_, pair);
  }

  ColoringResult guarded(int k, const Graph& g) {
    try {
      return body(k, g);
    } catch (const ProofGap& gap) {
      if (g.order() > opts_.fallback_cap) throw;
      ColoringResult r = exact(k, g, CaseTag::FallbackExact);
      r.recovered_gaps.push_back({gap.tag(), gap.reason(), gap.graph().order(), gap.failing_pair(), "exact-fallback"});
      return r;
    } catch (const StructuralError& err) {
      if (g.order() > opts_.fallback_cap) gap(CaseTag::Base, std::string("structural: ") + err.what(), g);
      ColoringResult r = exact(k, g, CaseTag::FallbackExact);
      r.recovered_gaps.push_back({CaseTag::Base, err.what(), g.order(), std::nullopt, "exact-fallback"});
      return r;
    }
  }

  // Recursive call whose precondition the enclosing argument promises.
  Piece sub(int k, const Graph& parent, Relabeled rel, CaseTag tag, const std::string& what) {
    Piece p;
    p.graph = std::move(rel.graph);
    p.to_parent = std::move(rel.to_parent);
    p.to_child.assign(static_cast<std::size_t>(parent.order()), -1);
    for (std::size_t i = 0; i < p.to_parent.size(); ++i) p.to_child[p.to_parent[i]] = static_cast<int>(i);
    try {
      check_precondition(k, p.graph);
    } catch (const PreconditionNotMet& e) {
      gap(tag, what + ": " + e.what(), parent);
    }
    p.result = guarded(k, p.graph);
    return p;
  }

  // Failing pair of a candidate coloring, nullopt when it is rainbow connected.
  static std::optional<std::pair<Vertex, Vertex>> defect(int k, const Graph& g, const Painter& painter) {
    if (!painter.complete()) return std::pair{-1, -1};
    return first_unconnected_pair(g, painter.finish(k));
  }

  ColoringResult finish(int k, const Graph& g, const Painter& painter, ReductionStep step,
                        std::initializer_list<const Piece*> pieces, std::optional<GapRecord> repaired = std::nullopt) {
    if (!painter.complete()) gap(step.tag, "extension left edges uncolored", g);
    ColoringResult r;
    r.coloring = painter.finish(k);
    if (const auto bad = first_unconnected_pair(g, r.coloring)) {
      gap(step.tag, "verification-failed", g, bad);
    }
    r.verified = true;
    r.colors_used = r.coloring.colors_used();
    r.tag = step.tag;
    r.trace.push_back(std::move(step));
    if (repaired) r.recovered_gaps.push_back(std::move(*repaired));
    for (const Piece* p : pieces) {
      r.trace.insert(r.trace.end(), p->result.trace.begin(), p->result.trace.end());
      r.recovered_gaps.insert(r.recovered_gaps.end(), p->result.recovered_gaps.begin(),
                              p->result.recovered_gaps.end());
    }
    return r;
  }

  // Same coloring on a larger palette.
  static ColoringResult widen(ColoringResult r, const Graph& g, int k) {
    const auto colors = r.coloring.colors();
    r.coloring = EdgeColoring(g, std::vector<Color>(colors.begin(), colors.end()), k);
    return r;
  }

  ColoringResult body(int k, const Graph& g) {
    if (g.is_complete()) {
      ColoringResult r;
      r.coloring = EdgeColoring(g, std::vector<Color>(static_cast<std::size_t>(g.size()), 1), k);
      r.colors_used = g.size() > 0 ? 1 : 0;
      r.verified = is_rainbow_connected(g, r.coloring);
      ReductionStep step;
      step.order = g.order();
      step.depth = static_cast<int>(active_.size());
      step.branch = "complete";
      r.trace.push_back(std::move(step));
      return r;
    }
    if (g.order() <= base_for(k)) return exact(k, g, CaseTag::Base);
    switch (k) {
      case 2: return two(g);
      case 3: return three(g);
      case 4: return four(g);
      default: throw InputError("no procedure for " + std::to_string(k) + " colors");
    }
  }

  // Removes w and the listed edges; the result keeps the labels of G - w.
  static Relabeled without(const Graph& g, VertexSet drop, std::span<const Edge> edges) {
    Relabeled h = delete_vertices(g, drop);
    std::vector<int> to_child(static_cast<std::size_t>(g.order()), -1);
    for (std::size_t i = 0; i < h.to_parent.size(); ++i) to_child[h.to_parent[i]] = static_cast<int>(i);
    std::vector<Edge> mapped;
    for (Edge e : edges) mapped.push_back({to_child[e.u], to_child[e.v]});
    h.graph = delete_edges(h.graph, mapped);
    return h;
  }

  static Relabeled restrict(const Relabeled& h, VertexSet comp_in_h) {
    Relabeled part = induced(h.graph, comp_in_h);
    part.to_parent = compose(part.to_parent, h.to_parent);
    return part;
  }

  static VertexSet in_parent(const Relabeled& h, VertexSet comp_in_h) {
    VertexSet out;
    for (Vertex v : comp_in_h) out.insert(h.to_parent[v]);
    return out;
  }

  // --- two colors ------------------------------------------------------------

  ColoringResult two(const Graph& g) {
    const int n = g.order();
    ReductionStep step;
    step.tag = CaseTag::TwoColorInduction;
    step.order = n;
    Frame frame(*this, step);
    ReductionStep red = reduce_min_degree(g, 1);
    red.tag = step.tag;
    red.depth = step.depth;
    step = red;
    frame.update(step);
    if (step.t < 0 || step.t > n - 3) gap(step.tag, "t=" + std::to_string(step.t) + " outside 0..n-3", g);

    Relabeled h = without(g, VertexSet::single(step.w), step.deleted);
    step.child_to_parent = h.to_parent;
    const Piece sub2 = sub(2, g, std::move(h), step.tag, "H'");

    const MatchedPair keep = step.matched.back();
    Painter paint(g);
    const auto perm = lead_with({sub2.color(keep.u, keep.v)}, 2, 2);
    paint.adopt(sub2.graph, sub2.to_parent, sub2.result.coloring, perm);
    for (Edge e : step.deleted) paint.assign(e, 1);
    paint.assign_at(step.w, 2);
    return finish(2, g, paint, std::move(step), {&sub2});
  }

  // --- three colors ----------------------------------------------------------

  ColoringResult three(const Graph& g) {
    const int n = g.order();
    if (g.size() >= density_threshold(2, n)) {
      ColoringResult r = widen(guarded(2, g), g, 3);
      return r;
    }
    const auto [w, dw] = min_degree_vertex(g);
    if (dw == 1) return three_pendant(g, w);

    // Non-adjacent pair with disjoint neighborhoods.
    for (Vertex a = 0; a < n; ++a) {
      for (Vertex b : complement_neighborhood(g, a)) {
        if (b <= a) continue;
        if ((g.neighbors(a) & g.neighbors(b)).empty()) return three_pair(g, a, b);
      }
    }
    return three_reduce(g);
  }

  ColoringResult three_pendant(const Graph& g, Vertex w) {
    ReductionStep step;
    step.tag = CaseTag::PendantDelta1;
    step.order = g.order();
    step.w = w;
    step.t = g.order() - 3;
    Frame frame(*this, step);
    Relabeled h = delete_vertex(g, w);
    step.child_to_parent = h.to_parent;
    frame.update(step);
    const Piece sub2 = sub(2, g, std::move(h), step.tag, "G-w");
    Painter paint(g);
    paint.adopt(sub2.graph, sub2.to_parent, sub2.result.coloring, identity_perm(2));
    paint.assign_at(w, 3);
    return finish(3, g, paint, std::move(step), {&sub2});
  }

  ColoringResult three_pair(const Graph& g, Vertex w1, Vertex w2) {
    ReductionStep step;
    step.tag = CaseTag::ThreeColorDisjointPair;
    step.order = g.order();
    step.w = w1;
    step.partner = w2;
    Frame frame(*this, step);
    Relabeled h = delete_vertices(g, VertexSet{w1, w2});
    step.child_to_parent = h.to_parent;
    frame.update(step);
    const Piece sub2 = sub(2, g, std::move(h), step.tag, "G-{w1,w2}");

    std::optional<Edge> link;
    for (Vertex u1 : g.neighbors(w1)) {
      const VertexSet hits = g.neighbors(u1) & g.neighbors(w2);
      if (!hits.empty()) {
        link = Edge{u1, hits.front()};
        break;
      }
    }
    if (!link) gap(step.tag, "no path w1-u1-u2-w2", g, std::pair{w1, w2});
    step.matched = {{link->u, w1}, {link->v, w2}};

    Painter paint(g);
    paint.adopt(sub2.graph, sub2.to_parent, sub2.result.coloring,
                lead_with({sub2.color(link->u, link->v)}, 2, 2));
    paint.assign(w1, link->u, 2);
    paint.assign(w2, link->v, 3);
    paint.assign_at(w1, 3);
    paint.assign_at(w2, 3);
    return finish(3, g, paint, std::move(step), {&sub2});
  }

  ColoringResult three_reduce(const Graph& g) {
    const int n = g.order();
    ReductionStep step;
    step.tag = CaseTag::ThreeColorInduction;
    step.order = n;
    Frame frame(*this, step);
    ReductionStep red = reduce_min_degree(g, 2);
    red.tag = step.tag;
    red.depth = step.depth;
    step = red;
    frame.update(step);
    if (step.t < 1 || step.t > n - 4) gap(step.tag, "t=" + std::to_string(step.t) + " outside 1..n-4", g);

    Relabeled h = without(g, VertexSet::single(step.w), step.deleted);
    step.child_to_parent = h.to_parent;
    frame.update(step);
    if (is_connected(h.graph)) {
      const Piece sub3 = sub(3, g, std::move(h), step.tag, "H'");
      const MatchedPair a = step.matched[step.matched.size() - 2];
      const MatchedPair b = step.matched.back();
      Painter paint(g);
      paint.adopt(sub3.graph, sub3.to_parent, sub3.result.coloring,
                  lead_with({sub3.color(a.u, a.v), sub3.color(b.u, b.v)}, 3, 3));
      for (Edge e : step.deleted) paint.assign(e, 1);
      paint.assign_at(step.w, 3);
      return finish(3, g, paint, std::move(step), {&sub3});
    }

    // H' splits into an isolated neighbor v of w and one big component.
    step.tag = CaseTag::ThreeColorDisconnectedRepair;
    frame.update(step);
    const auto comps = components(h.graph);
    if (comps.size() != 2 || (comps[0].size() != 1 && comps[1].size() != 1)) {
      gap(step.tag, "claim-3-violated: H' has " + std::to_string(comps.size()) + " components", g);
    }
    const VertexSet lone = comps[0].size() == 1 ? comps[0] : comps[1];
    const VertexSet big = comps[0].size() == 1 ? comps[1] : comps[0];
    const Vertex v = h.to_parent[lone.front()];
    if (!g.adjacent(step.w, v)) gap(step.tag, "claim-3-violated: isolated vertex is not a neighbor of w", g);
    step.branch = "isolated v=" + std::to_string(v);
    const Piece sub2 = sub(2, g, restrict(h, big), step.tag, "H_2");

    Painter paint(g);
    paint.adopt(sub2.graph, sub2.to_parent, sub2.result.coloring, identity_perm(2));
    for (Vertex x : g.neighbors(v)) {
      if (x != step.w) paint.assign(v, x, 3);
    }
    paint.assign(step.w, v, 1);
    paint.assign_at(step.w, 3);
    for (Edge e : step.deleted) paint.assign(e, 2);
    return finish(3, g, paint, std::move(step), {&sub2});
  }

  // --- four colors -----------------------------------------------------------

  ColoringResult four(const Graph& g) {
    const int n = g.order();
    if (g.size() >= density_threshold(3, n)) return widen(guarded(3, g), g, 4);
    const auto [w, dw] = min_degree_vertex(g);
    if (dw == 1) return four_pendant(g, w);

    // Case 1: a non-adjacent pair with a common neighbor and degree sum <= n-3.
    bool all_common = true;
    bool all_heavy = true;
    std::optional<std::pair<Vertex, Vertex>> light, apart;
    for (Vertex a = 0; a < n; ++a) {
      for (Vertex b : complement_neighborhood(g, a)) {
        if (b <= a) continue;
        const bool common = !(g.neighbors(a) & g.neighbors(b)).empty();
        const int sum = g.degree(a) + g.degree(b);
        all_common = all_common && common;
        all_heavy = all_heavy && sum >= n - 2;
        if (!light && common && sum <= n - 3) light = std::pair{a, b};
        if (!apart && !common && sum <= n - 3) apart = std::pair{a, b};
      }
    }
    if (light) return four_case1(g, light->first, light->second, false);
    if (all_common) return four_case2(g, CaseTag::FourCase2, "");
    if (all_heavy) return four_case3(g);
    // Left over: a light pair without common neighbor. The Case 1 edge count
    // never uses the common neighbor, so its construction is reused.
    if (!opts_.repairs) gap(CaseTag::FourCase1, "case-analysis-incomplete", g, apart);
    return four_case1(g, apart->first, apart->second, true);
  }

  ColoringResult four_pendant(const Graph& g, Vertex w) {
    ReductionStep step;
    step.tag = CaseTag::PendantDelta1;
    step.order = g.order();
    step.w = w;
    step.t = g.order() - 3;
    Frame frame(*this, step);
    Relabeled h = delete_vertex(g, w);
    step.child_to_parent = h.to_parent;
    frame.update(step);
    const Piece sub3 = sub(3, g, std::move(h), step.tag, "G-w");
    Painter paint(g);
    paint.adopt(sub3.graph, sub3.to_parent, sub3.result.coloring, identity_perm(3));
    paint.assign_at(w, 4);
    return finish(4, g, paint, std::move(step), {&sub3});
  }

  ColoringResult four_case1(const Graph& g, Vertex w1, Vertex w2, bool apart) {
    const int n = g.order();
    ReductionStep step;
    step.tag = CaseTag::FourCase1;
    step.order = n;
    step.w = w1;
    step.partner = w2;
    if (apart) step.branch = "pair without common neighbor";
    Frame frame(*this, step);
    Relabeled h = delete_vertices(g, VertexSet{w1, w2});
    step.child_to_parent = h.to_parent;
    frame.update(step);
    const std::pair pair{w1, w2};
    if (!is_connected(h.graph)) {
      if (!opts_.repairs || apart) gap(step.tag, "G-{w1,w2} is disconnected", g, pair);
      return four_case1_bridge(g, std::move(step), frame, h);
    }
    const Piece sub3 = sub(3, g, std::move(h), step.tag, "G-{w1,w2}");

    // Connectors inside H from x in N(w1) to z in N(w2): a single edge x-z,
    // or a length-2 path x-y-z.
    const VertexSet removed{w1, w2};
    std::optional<std::array<Vertex, 3>> rainbow, any;
    std::optional<Edge> touching;
    for (Vertex x : g.neighbors(w1)) {
      if (!touching) {
        const VertexSet zs = g.neighbors(x) & g.neighbors(w2);
        if (!zs.empty()) touching = Edge{x, zs.front()};
      }
      for (Vertex y : g.neighbors(x) - removed) {
        for (Vertex z : (g.neighbors(y) & g.neighbors(w2)) - removed - VertexSet::single(x)) {
          if (!any) any = std::array{x, y, z};
          if (!rainbow && sub3.color(x, y) != sub3.color(y, z)) rainbow = std::array{x, y, z};
        }
      }
    }
    auto path_name = [](std::initializer_list<Vertex> vs) {
      std::string out;
      for (Vertex v : vs) out += (out.empty() ? "" : "-") + std::to_string(v);
      return out;
    };
    // w1x gets `lead`, every other edge at w1 or w2 gets color 4.
    auto attach = [&](Painter& paint, Vertex x, Color lead) {
      paint.assign(w1, x, lead);
      paint.assign_at(w1, 4);
      paint.assign_at(w2, 4);
    };

    if (apart) {
      GapRecord rec{step.tag, "case-analysis-incomplete", n, pair, "repair:case1-pair-without-common-neighbor"};
      Painter paint(g);
      if (touching) {
        const Color c = sub3.color(touching->u, touching->v);
        step.branch += "; edge connector " + path_name({touching->u, touching->v});
        paint.adopt(sub3.graph, sub3.to_parent, sub3.result.coloring, identity_perm(3));
        attach(paint, touching->u, c == 1 ? 2 : 1);
      } else if (rainbow) {
        const auto [x, y, z] = *rainbow;
        step.branch += "; rainbow connector " + path_name({x, y, z});
        paint.adopt(sub3.graph, sub3.to_parent, sub3.result.coloring,
                    lead_with({sub3.color(x, y), sub3.color(y, z)}, 3, 3));
        attach(paint, x, 3);
      } else {
        gap(step.tag, "no rainbow connector between N(w1) and N(w2)", g, pair);
      }
      return finish(4, g, paint, std::move(step), {&sub3}, std::move(rec));
    }

    Painter paint(g);
    std::optional<std::pair<Vertex, Vertex>> bad;
    std::string failure;
    if (rainbow) {
      const auto [x, y, z] = *rainbow;
      step.branch = "rainbow connector " + path_name({x, y, z});
      paint.adopt(sub3.graph, sub3.to_parent, sub3.result.coloring,
                  lead_with({sub3.color(x, y), sub3.color(y, z)}, 3, 3));
      paint.assign(w1, x, 3);
      paint.assign(w2, z, 4);
      attach(paint, x, 3);
    } else if (any) {
      const auto [x, y, z] = *any;
      step.branch = "monochrome connector " + path_name({x, y, z});
      paint.assign(y, z, 4);
      paint.adopt(sub3.graph, sub3.to_parent, sub3.result.coloring, lead_with({sub3.color(x, y)}, 3, 3));
      paint.assign(w1, x, 2);
      paint.assign(w2, z, 3);
      attach(paint, x, 2);
    } else {
      failure = "no length-2 path between N(w1) and N(w2)";
      bad = pair;
    }
    if (failure.empty()) {
      bad = defect(4, g, paint);
      if (!bad || !opts_.repairs) return finish(4, g, paint, std::move(step), {&sub3});
      failure = "verification-failed";
    }
    if (!opts_.repairs) gap(step.tag, failure, g, bad);

    // Route w1 and w2 through a common neighbor instead of a connector.
    const Vertex x = (g.neighbors(w1) & g.neighbors(w2)).front();
    step.branch = "common neighbor " + std::to_string(x);
    Painter fixed(g);
    fixed.adopt(sub3.graph, sub3.to_parent, sub3.result.coloring, identity_perm(3));
    attach(fixed, x, 1);
    return finish(4, g, fixed, std::move(step), {&sub3},
                  GapRecord{CaseTag::FourCase1, failure, n, bad, "repair:case1-common-neighbor"});
  }

  // G-{w1,w2} = {x} + H_2 where x is adjacent to exactly w1 and w2.
  ColoringResult four_case1_bridge(const Graph& g, ReductionStep step, Frame& frame, const Relabeled& h) {
    const Vertex w1 = step.w;
    const Vertex w2 = *step.partner;
    const auto comps = components(h.graph);
    if (comps.size() != 2 || (comps[0].size() != 1 && comps[1].size() != 1)) {
      gap(step.tag, "G-{w1,w2} is disconnected", g, std::pair{w1, w2});
    }
    const VertexSet lone = comps[0].size() == 1 ? comps[0] : comps[1];
    const VertexSet big = comps[0].size() == 1 ? comps[1] : comps[0];
    const Vertex x = h.to_parent[lone.front()];
    step.branch = "bridge vertex " + std::to_string(x);
    frame.update(step);
    const Piece sub2 = sub(2, g, restrict(h, big), step.tag, "H_2");
    Painter paint(g);
    paint.adopt(sub2.graph, sub2.to_parent, sub2.result.coloring, identity_perm(2));
    paint.assign(w1, x, 3);
    paint.assign(w2, x, 4);
    paint.assign_at(w1, 4);
    paint.assign_at(w2, 3);
    return finish(4, g, paint, std::move(step), {&sub2},
                  GapRecord{step.tag, "G-{w1,w2} is disconnected", g.order(), std::pair{w1, w2},
                            "repair:case1-bridge-vertex"});
  }

  ColoringResult four_case2(const Graph& g, CaseTag tag, const std::string& note) {
    const int n = g.order();
    ReductionStep step;
    step.tag = tag;
    step.order = n;
    Frame frame(*this, step);
    ReductionStep red = reduce_min_degree(g, 3);
    red.tag = tag;
    red.depth = step.depth;
    red.branch = note;
    step = red;
    frame.update(step);
    if (step.t < 2 || step.t > n - 4) gap(tag, "t=" + std::to_string(step.t) + " outside 2..n-4", g);
    const Vertex w = step.w;

    Relabeled h = without(g, VertexSet::single(w), step.deleted);
    step.child_to_parent = h.to_parent;
    frame.update(step);
    auto joined = [&](std::string_view what) { return note.empty() ? std::string(what) : note + "; " + std::string(what); };

    if (is_connected(h.graph)) {
      step.branch = joined("H' connected");
      const Piece sub4 = sub(4, g, std::move(h), tag, "H'");
      const auto& mt = step.matched;
      const std::size_t s = mt.size();
      Painter paint(g);
      paint.adopt(sub4.graph, sub4.to_parent, sub4.result.coloring,
                  lead_with({sub4.color(mt[s - 3].u, mt[s - 3].v), sub4.color(mt[s - 2].u, mt[s - 2].v),
                             sub4.color(mt[s - 1].u, mt[s - 1].v)},
                            4, 4));
      for (Edge e : step.deleted) paint.assign(e, 1);
      paint.assign_at(w, 4);
      return finish(4, g, paint, std::move(step), {&sub4});
    }

    auto comps = components(h.graph);
    std::stable_sort(comps.begin(), comps.end(), [](VertexSet a, VertexSet b) { return a.size() < b.size(); });
    const VertexSet nw = g.neighbors(w);
    const VertexSet n2 = k_step_neighborhood(g, VertexSet::single(w), 2);

    if (comps.size() == 3 && comps[0].size() == 1 && comps[1].size() == 1) {
      const Vertex a1 = std::min(h.to_parent[comps[0].front()], h.to_parent[comps[1].front()]);
      const Vertex a2 = std::max(h.to_parent[comps[0].front()], h.to_parent[comps[1].front()]);
      if (!nw.contains(a1) || !nw.contains(a2)) gap(tag, "isolated vertices of H' are not neighbors of w", g);
      step.branch = joined("H' has three components");
      frame.update(step);
      const Piece sub2 = sub(2, g, restrict(h, comps[2]), tag, "H_3");
      Painter paint(g);
      paint.adopt(sub2.graph, sub2.to_parent, sub2.result.coloring, identity_perm(2));
      paint.assign(w, a1, 1);
      paint.assign(w, a2, 2);
      paint.assign_at(w, 4);
      paint.assign_at(a1, 3);
      paint.assign_at(a2, 3);
      for (Edge e : step.deleted) paint.assign(e, 1);
      return finish(4, g, paint, std::move(step), {&sub2});
    }
    if (comps.size() == 2 && comps[0].size() == 1) {
      const Vertex a1 = h.to_parent[comps[0].front()];
      if (!nw.contains(a1)) gap(tag, "isolated vertex of H' is not a neighbor of w", g);
      step.branch = joined("H' has an isolated vertex");
      frame.update(step);
      const Piece sub3 = sub(3, g, restrict(h, comps[1]), tag, "H_2");
      Painter paint(g);
      paint.adopt(sub3.graph, sub3.to_parent, sub3.result.coloring, identity_perm(3));
      paint.assign(w, a1, 1);
      paint.assign_at(w, 4);
      paint.assign_at(a1, 4);
      for (Edge e : step.deleted) paint.assign(e, 2);
      return finish(4, g, paint, std::move(step), {&sub3});
    }
    if (comps.size() == 2) {
      step.branch = joined("H' has two large components");
      frame.update(step);
      const VertexSet h1 = in_parent(h, comps[0]);
      const VertexSet h2 = in_parent(h, comps[1]);
      const Piece p1 = sub(2, g, restrict(h, comps[0]), tag, "H_1");
      const Piece p2 = sub(2, g, restrict(h, comps[1]), tag, "H_2");
      Painter paint(g);
      paint.adopt(p1.graph, p1.to_parent, p1.result.coloring, identity_perm(2));
      paint.adopt(p2.graph, p2.to_parent, p2.result.coloring, identity_perm(2));
      for (Vertex v : h1 & nw) paint.assign(w, v, 4);
      for (Vertex v : h2 & nw) paint.assign(w, v, 3);
      for (Vertex u : h2 & nw) {
        for (Vertex v : h1 & n2) paint.assign(u, v, 4);
      }
      for (Vertex u : h1 & nw) {
        for (Vertex v : h2 & n2) paint.assign(u, v, 3);
      }
      paint.fill_remaining(1);
      return finish(4, g, paint, std::move(step), {&p1, &p2});
    }
    gap(tag, "H' has " + std::to_string(comps.size()) + " components of unexpected shape", g);
  }

  ColoringResult four_case3(const Graph& g) {
    const auto [w, dw] = min_degree_vertex(g);
    const auto layers = bfs_layers(g, VertexSet::single(w));
    if (layers.size() <= 3) return four_case2(g, CaseTag::FourCase2, "N^3(w) empty");

    const int n = g.order();
    const VertexSet nw = layers[1];
    const VertexSet n2 = layers[2];
    const VertexSet n3 = layers[3];
    const VertexSet far = n2 | n3;
    ReductionStep step;
    step.order = n;
    step.w = w;
    step.t = n - 2 - dw;
    step.tag = CaseTag::FourCase3PBig;
    step.complement_list = n2.members();
    for (Vertex v : n3) step.complement_list.push_back(v);
    Frame frame(*this, step);
    if (layers.size() > 4) gap(step.tag, "N^4(w) is nonempty", g);
    for (Vertex u : n3) {
      if (g.neighbors(u) != far - VertexSet::single(u)) {
        gap(step.tag, "vertex " + std::to_string(u) + " of N^3(w) is not adjacent to all of N^2 and N^3", g);
      }
    }
    const int p = n2.size();
    if (p == 1) return four_p1(g, step, frame, nw, n2, n3);
    if (p == 2) return four_p2(g, step, frame, nw, n2, n3);
    return four_pbig(g, step, frame, nw, n2, n3);
  }

  ColoringResult four_p1(const Graph& g, ReductionStep& step, Frame& frame, VertexSet nw, VertexSet n2,
                         VertexSet n3) {
    step.tag = CaseTag::FourCase3P1;
    frame.update(step);
    const Vertex w = step.w;
    const Vertex v1 = n2.front();
    const std::vector<Vertex> u = nw.members();
    Painter paint(g);
    // Neighbors of w are taken in increasing id order as u_1, u_2, ...
    for (std::size_t idx = 0; idx < u.size(); ++idx) {
      const int i = static_cast<int>(idx) + 1;
      paint.assign(u[idx], w, i <= 9 ? (i - 1) / 3 + 1 : 4);
      const int r = i % 3;
      paint.assign(v1, u[idx], i <= 9 ? (r == 0 ? 3 : r) : 3);
    }
    const VertexSet block = n2 | n3;
    for (Vertex a : block) {
      for (Vertex b : g.neighbors(a) & block) {
        if (a < b) paint.assign(a, b, 4);
      }
    }
    paint.fill_remaining(1);
    const auto bad = defect(4, g, paint);
    if (!bad || !opts_.repairs) return finish(4, g, paint, std::move(step), {});

    // Neighbors of w missing v_1 are adjacent to w and to all of N(w) by the
    // degree-sum condition; index only N(w) & N(v_1) by the table.
    const VertexSet hit = nw & g.neighbors(v1);
    const VertexSet miss = nw - hit;
    step.branch = "table over N(w) & N(v_1)";
    Painter fixed(g);
    std::vector<Color> via(static_cast<std::size_t>(g.order()), 0);
    int i = 0;
    for (Vertex a : hit) {
      ++i;
      const int r = i % 3;
      fixed.assign(a, w, i <= 9 ? (i - 1) / 3 + 1 : 4);
      via[a] = i <= 9 ? (r == 0 ? 3 : r) : 3;
      fixed.assign(v1, a, via[a]);
    }
    for (Vertex z : miss) {
      fixed.assign(w, z, 3);
      for (Vertex a : hit) fixed.assign(z, a, via[a] % 3 + 1);
    }
    for (Vertex a : block) {
      for (Vertex b : g.neighbors(a) & block) {
        if (a < b) fixed.assign(a, b, 4);
      }
    }
    fixed.fill_remaining(1);
    return finish(4, g, fixed, std::move(step), {},
                  GapRecord{step.tag, "verification-failed", g.order(), bad, "repair:p1-table-over-common"});
  }

  ColoringResult four_p2(const Graph& g, ReductionStep& step, Frame& frame, VertexSet nw, VertexSet n2,
                         VertexSet n3) {
    step.tag = CaseTag::FourCase3P2;
    const Vertex w = step.w;
    const VertexSet left = VertexSet::single(w) | nw | n2;
    const VertexSet right = n2 | n3;
    const std::vector<Vertex> v = n2.members();
    auto paint_right = [&](Painter& paint) {
      for (Vertex a : right) {
        for (Vertex b : g.neighbors(a) & right) {
          if (a < b) paint.assign(a, b, 1);
        }
      }
    };
    if (left.size() >= 6) {
      step.branch = "|H_1|>=6";
      frame.update(step);
      const Piece sub3 = sub(3, g, induced(g, left), step.tag, "H_1");
      step.child_to_parent = sub3.to_parent;
      Painter paint(g);
      paint_right(paint);
      const std::vector<Color> shift{0, 2, 3, 4};
      paint.adopt(sub3.graph, sub3.to_parent, sub3.result.coloring, shift);
      return finish(4, g, paint, std::move(step), {&sub3});
    }
    step.branch = "|H_1|=5";
    frame.update(step);
    std::optional<std::pair<Vertex, Vertex>> us;
    for (Vertex a : g.neighbors(v[0]) & nw) {
      const VertexSet b = (g.neighbors(v[1]) & nw) - VertexSet::single(a);
      if (!b.empty()) {
        us = std::pair{a, b.front()};
        break;
      }
    }
    if (!us) {
      // One neighbor a of w sees both v_1 and v_2; the other, z, sees neither.
      const VertexSet both = nw & g.neighbors(v[0]) & g.neighbors(v[1]);
      if (!opts_.repairs || both.empty() || nw.size() != 2) {
        gap(step.tag, "no distinct u_1, u_2 in N(w) matching v_1, v_2", g);
      }
      const Vertex a = both.front();
      const Vertex z = (nw - VertexSet::single(a)).front();
      step.branch = "|H_1|=5, shared neighbor " + std::to_string(a);
      step.matched = {{a, v[0]}, {a, v[1]}};
      Painter paint(g);
      paint.assign(w, a, 4);
      paint.assign(a, v[0], 2);
      paint.assign(a, v[1], 3);
      paint.assign(z, a, 4);
      paint_right(paint);
      paint.fill_remaining(1);
      return finish(4, g, paint, std::move(step), {},
                    GapRecord{step.tag, "no distinct u_1, u_2 in N(w) matching v_1, v_2", g.order(), std::nullopt,
                              "repair:p2-shared-neighbor"});
    }
    const auto [u1, u2] = *us;
    step.matched = {{u1, v[0]}, {u2, v[1]}};
    Painter paint(g);
    paint.assign(w, u1, 4);
    paint.assign(w, u2, 3);
    paint.assign(u1, v[0], 2);
    paint.assign(u2, v[1], 1);
    paint_right(paint);
    paint.fill_remaining(1);
    return finish(4, g, paint, std::move(step), {});
  }

  ColoringResult four_pbig(const Graph& g, ReductionStep& step, Frame& frame, VertexSet nw, VertexSet n2,
                           VertexSet n3) {
    step.tag = CaseTag::FourCase3PBig;
    const Vertex w = step.w;
    const std::vector<Vertex> v = n2.members();
    const Vertex v1 = v[0];
    for (Vertex x : v) step.matched.push_back({(g.neighbors(x) & nw).front(), x});
    for (std::size_t i = 3; i < step.matched.size(); ++i) {
      step.deleted.push_back(normalized({step.matched[i].u, step.matched[i].v}));
    }
    std::vector<Edge> far_links;
    for (Vertex x : n3) far_links.push_back(normalized({v1, x}));
    step.deleted.insert(step.deleted.end(), far_links.begin(), far_links.end());
    frame.update(step);

    Relabeled h = without(g, VertexSet::single(w), step.deleted);
    step.child_to_parent = h.to_parent;
    if (is_connected(h.graph)) {
      step.branch = "H connected";
      frame.update(step);
      const Piece sub4 = sub(4, g, std::move(h), step.tag, "H");
      const auto& mt = step.matched;
      Painter paint(g);
      paint.adopt(sub4.graph, sub4.to_parent, sub4.result.coloring,
                  lead_with({sub4.color(mt[0].u, mt[0].v), sub4.color(mt[1].u, mt[1].v),
                             sub4.color(mt[2].u, mt[2].v)},
                            4, 4));
      paint.assign_at(w, 4);
      for (Edge e : far_links) paint.assign(e, 2);
      for (std::size_t i = 0; i < 3; ++i) paint.pin(mt[i].u, mt[i].v);
      for (std::size_t i = 3; i < mt.size(); ++i) paint.assign(mt[i].u, mt[i].v, 3);
      return finish(4, g, paint, std::move(step), {&sub4});
    }

    auto comps = components(h.graph);
    std::stable_sort(comps.begin(), comps.end(), [](VertexSet a, VertexSet b) { return a.size() < b.size(); });
    if (comps.size() == 3 && comps[0].size() == 1 && comps[1].size() == 1) {
      const Vertex a1 = std::min(h.to_parent[comps[0].front()], h.to_parent[comps[1].front()]);
      const Vertex a2 = std::max(h.to_parent[comps[0].front()], h.to_parent[comps[1].front()]);
      if (!nw.contains(a1) || !nw.contains(a2)) gap(step.tag, "isolated vertices of H are not neighbors of w", g);
      step.branch = "H has three components";
      frame.update(step);
      const Piece sub2 = sub(2, g, restrict(h, comps[2]), step.tag, "H_1");
      Painter paint(g);
      paint.adopt(sub2.graph, sub2.to_parent, sub2.result.coloring, identity_perm(2));
      for (Vertex u : nw) paint.assign(u, v1, 1);
      paint.assign(w, a1, 3);
      paint.assign(w, a2, 3);
      paint.assign_at(w, 4);
      for (Edge e : far_links) paint.assign(e, 2);
      paint.assign_at(a1, 3);
      paint.assign_at(a2, 4);
      paint.fill_remaining(1);
      return finish(4, g, paint, std::move(step), {&sub2});
    }
    if (comps.size() == 2 && comps[0].size() == 1) {
      const Vertex a1 = h.to_parent[comps[0].front()];
      if (!nw.contains(a1)) gap(step.tag, "isolated vertex of H is not a neighbor of w", g);
      step.branch = "H has an isolated vertex";
      frame.update(step);
      const Piece sub3 = sub(3, g, restrict(h, comps[1]), step.tag, "H_2");
      Painter paint(g);
      paint.adopt(sub3.graph, sub3.to_parent, sub3.result.coloring, identity_perm(3));
      for (Vertex u : nw - VertexSet::single(a1)) paint.assign(u, v1, 1);
      paint.assign(w, a1, 3);
      paint.assign_at(w, 4);
      for (Edge e : far_links) paint.assign(e, 2);
      paint.assign_at(a1, 2);
      paint.fill_remaining(1);
      return finish(4, g, paint, std::move(step), {&sub3});
    }
    if (comps.size() == 2) {
      VertexSet c0 = in_parent(h, comps[0]);
      VertexSet c1 = in_parent(h, comps[1]);
      std::size_t i2 = 1;
      if (!n3.is_subset_of(c1)) {
        if (!n3.is_subset_of(c0)) gap(step.tag, "N^3(w) is split across components of H", g);
        std::swap(c0, c1);
        i2 = 0;
      }
      step.branch = "H has two large components";
      frame.update(step);
      const Piece p1 = sub(2, g, restrict(h, comps[1 - i2]), step.tag, "H_1");
      const Piece p2 = sub(2, g, restrict(h, comps[i2]), step.tag, "H_2");
      Painter paint(g);
      paint.adopt(p1.graph, p1.to_parent, p1.result.coloring, identity_perm(2));
      paint.adopt(p2.graph, p2.to_parent, p2.result.coloring, identity_perm(2));
      for (Vertex x : c0 & nw) paint.assign(w, x, 3);
      for (Vertex x : c1 & nw) paint.assign(w, x, 4);
      for (Edge e : far_links) paint.assign(e, 4);
      paint.fill_remaining(3);
      return finish(4, g, paint, std::move(step), {&p1, &p2});
    }
    gap(step.tag, "H has " + std::to_string(comps.size()) + " components of unexpected shape", g);
  }

  ColorerOptions opts_;
  ExactOptions exact_;
  std::vector<ReductionStep> active_;
};

}  // namespace detail

inline ColoringResult color_rc2(const Graph& g, const ColorerOptions& opts = {}) {
  return detail::Colorer(opts).run(2, g);
}

inline ColoringResult color_rc3(const Graph& g, const ColorerOptions& opts = {}) {
  return detail::Colorer(opts).run(3, g);
}

inline ColoringResult color_rc4(const Graph& g, const ColorerOptions& opts = {}) {
  return detail::Colorer(opts).run(4, g);
}

/// Dispatches to color_rc2/3/4.
inline ColoringResult color_dense(const Graph& g, int k, const ColorerOptions& opts = {}) {
  if (k < 2 || k > 4) throw InputError("dense colorer supports 2, 3 or 4 colors");
  return detail::Colorer(opts).run(k, g);
}

/// Exact coloring with at most k colors for graphs at or below the base cap.
inline ColoringResult fallback_exact(const Graph& g, int k, const ColorerOptions& opts = {}) {
  if (g.order() > std::max(opts.base_cap, opts.fallback_cap)) {
    throw PreconditionNotMet("exact fallback is limited to n <= " +
                             std::to_string(std::max(opts.base_cap, opts.fallback_cap)));
  }
  if (!is_connected(g) || g.size() == 0) throw PreconditionNotMet("exact fallback needs a connected graph with edges");
  return detail::Colorer(opts).exact(k, g, CaseTag::Base);
}

}  // namespace rainbow
