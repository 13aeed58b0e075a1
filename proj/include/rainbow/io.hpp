#pragma once

// Text formats and generators.
//
// Edge list: a header "n m", then m lines "u v" or "u v c". Vertex ids are
// 0-based, colors 1-based. Blank lines and lines starting with '#' are
// skipped. A document is colored when its first edge line has a color; then
// every line must have one.
//
// Reports are JSON (schema_version 1). DOT output is for viewing only.

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "rainbow/dense.hpp"
#include "rainbow/error.hpp"
#include "rainbow/exact.hpp"
#include "rainbow/graph.hpp"
#include "rainbow/thresholds.hpp"
#include "rainbow/verify.hpp"

namespace rainbow {

using json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

struct EdgeListDocument {
  Graph graph;
  std::optional<EdgeColoring> coloring;
};

namespace detail {

inline std::vector<std::string> tokens(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

inline long parse_int(const std::string& t, int line, std::string_view what) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(t, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != t.size() || t.empty()) throw InputError("expected integer " + std::string(what) + ", got '" + t + "'", line);
  return v;
}

}  // namespace detail

inline EdgeListDocument parse_edge_list(std::string_view text) {
  std::vector<std::pair<int, std::string>> lines;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    ++number;
    std::string line(text.substr(pos, end - pos));
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first != std::string::npos && line[first] != '#') lines.emplace_back(number, line);
    pos = end + 1;
  }
  if (lines.empty()) throw InputError("empty document: missing header 'n m'", 1);

  const auto head = detail::tokens(lines[0].second);
  if (head.size() != 2) throw InputError("header must be 'n m'", lines[0].first);
  const long n = detail::parse_int(head[0], lines[0].first, "vertex count");
  const long m = detail::parse_int(head[1], lines[0].first, "edge count");
  if (n < 0 || n > Graph::kMaxOrder) {
    throw InputError("vertex count " + std::to_string(n) + " outside 0.." + std::to_string(Graph::kMaxOrder),
                     lines[0].first);
  }
  if (m < 0 || m > pairs(n)) throw InputError("edge count " + std::to_string(m) + " impossible for n=" + std::to_string(n), lines[0].first);
  if (static_cast<long>(lines.size()) - 1 != m) {
    const int at = lines.size() > static_cast<std::size_t>(m) + 1 ? lines[static_cast<std::size_t>(m) + 1].first
                                                                  : lines.back().first;
    throw InputError("header announces " + std::to_string(m) + " edges, found " + std::to_string(lines.size() - 1), at);
  }

  std::vector<Edge> edges;
  std::vector<Color> colors;
  std::vector<std::uint64_t> seen(static_cast<std::size_t>(n), 0);
  std::optional<bool> colored;
  int palette = 1;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const int at = lines[i].first;
    const auto t = detail::tokens(lines[i].second);
    if (t.size() != 2 && t.size() != 3) throw InputError("edge line must be 'u v' or 'u v c'", at);
    const bool has_color = t.size() == 3;
    if (!colored) colored = has_color;
    if (*colored != has_color) throw InputError("partial coloring: every edge line needs a color or none does", at);
    const long u = detail::parse_int(t[0], at, "vertex id");
    const long v = detail::parse_int(t[1], at, "vertex id");
    if (u < 0 || u >= n || v < 0 || v >= n) throw InputError("vertex id outside 0.." + std::to_string(n - 1), at);
    if (u == v) throw InputError("self-loop at vertex " + std::to_string(u), at);
    if (seen[static_cast<std::size_t>(u)] >> v & 1) {
      throw InputError("duplicate edge " + std::to_string(u) + " " + std::to_string(v), at);
    }
    seen[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
    seen[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
    if (has_color) {
      const long c = detail::parse_int(t[2], at, "color");
      if (c < 1 || c > EdgeColoring::kMaxColors) {
        throw InputError("color outside 1.." + std::to_string(EdgeColoring::kMaxColors), at);
      }
      colors.push_back(static_cast<Color>(c));
      palette = std::max(palette, static_cast<int>(c));
    }
  }

  EdgeListDocument doc;
  doc.graph = Graph(static_cast<int>(n), edges);
  if (colored.value_or(false)) {
    // Colors follow input order; the graph stores edges sorted.
    std::vector<Color> sorted(colors.size());
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const Edge e = normalized(edges[i]);
      sorted[static_cast<std::size_t>(doc.graph.edge_index(e.u, e.v))] = colors[i];
    }
    doc.coloring = EdgeColoring(doc.graph, std::move(sorted), palette);
  }
  return doc;
}

inline std::string emit_edge_list(const Graph& g, const EdgeColoring* c = nullptr) {
  if (c && !c->binds(g)) throw InputError("coloring does not belong to this graph");
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    out << g.edges()[i].u << ' ' << g.edges()[i].v;
    if (c) out << ' ' << (*c)[i];
    out << '\n';
  }
  return out.str();
}

/// Colors 1..12 map to fixed names; larger ids wrap around.
inline constexpr std::array<std::string_view, 12> kDotPalette = {
    "red", "blue", "forestgreen", "orange", "purple", "brown",
    "deeppink", "cyan3", "gold3", "gray40", "olivedrab", "navy"};

inline std::string emit_dot(const Graph& g, const EdgeColoring* c = nullptr) {
  if (c && !c->binds(g)) throw InputError("coloring does not belong to this graph");
  std::ostringstream out;
  out << "graph G {\n";
  for (Vertex v = 0; v < g.order(); ++v) out << "  " << v << ";\n";
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    out << "  " << g.edges()[i].u << " -- " << g.edges()[i].v;
    if (c) {
      const Color col = (*c)[i];
      out << " [color=\"" << kDotPalette[static_cast<std::size_t>(col - 1) % kDotPalette.size()] << "\", label=\""
          << col << "\"]";
    }
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

// --- JSON ----------------------------------------------------------------------

inline json to_json(const Graph& g) {
  json edges = json::array();
  for (Edge e : g.edges()) edges.push_back({e.u, e.v});
  return {{"n", g.order()}, {"m", g.size()}, {"edges", edges}};
}

inline Graph graph_from_json(const json& j) {
  try {
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) edges.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
    return Graph(j.at("n").get<int>(), edges);
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed graph JSON: ") + e.what());
  }
}

inline json to_json(const EdgeColoring& c) {
  return {{"palette", c.palette()}, {"colors", std::vector<Color>(c.colors().begin(), c.colors().end())}};
}

inline EdgeColoring coloring_from_json(const json& j, const Graph& g) {
  try {
    return EdgeColoring(g, j.at("colors").get<std::vector<Color>>(), j.at("palette").get<int>());
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed coloring JSON: ") + e.what());
  }
}

inline json to_json(const RcCertificate& c) {
  json j = {{"value", c.value},
            {"optimality", std::string(to_string(c.optimality))},
            {"lower_bound", c.lower_bound},
            {"colorings_examined", c.colorings_examined},
            {"expansions", c.expansions},
            {"witness", nullptr}};
  if (c.witness) j["witness"] = to_json(*c.witness);
  return j;
}

inline Optimality optimality_from_string(std::string_view s) {
  for (Optimality o : {Optimality::LowerBoundMet, Optimality::ExhaustedBelow, Optimality::AboveCap}) {
    if (to_string(o) == s) return o;
  }
  throw InputError("unknown optimality '" + std::string(s) + "'");
}

inline RcCertificate certificate_from_json(const json& j, const Graph& g) {
  try {
    RcCertificate c;
    c.value = j.at("value").get<int>();
    c.optimality = optimality_from_string(j.at("optimality").get<std::string>());
    c.lower_bound = j.at("lower_bound").get<int>();
    c.colorings_examined = j.at("colorings_examined").get<std::uint64_t>();
    c.expansions = j.at("expansions").get<std::uint64_t>();
    if (!j.at("witness").is_null()) c.witness = coloring_from_json(j.at("witness"), g);
    return c;
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed certificate JSON: ") + e.what());
  }
}

inline json pair_json(const std::optional<std::pair<Vertex, Vertex>>& p) {
  return p ? json::array({p->first, p->second}) : json(nullptr);
}

inline std::optional<std::pair<Vertex, Vertex>> pair_from_json(const json& j) {
  if (j.is_null()) return std::nullopt;
  return std::pair{j.at(0).get<Vertex>(), j.at(1).get<Vertex>()};
}

inline CaseTag case_tag_from_json(const json& j) {
  const auto s = j.get<std::string>();
  const auto tag = case_tag_from_string(s);
  if (!tag) throw InputError("unknown case tag '" + s + "'");
  return *tag;
}

inline json to_json(const ReductionStep& s) {
  json matched = json::array();
  for (const MatchedPair& p : s.matched) matched.push_back({p.u, p.v});
  json deleted = json::array();
  for (Edge e : s.deleted) deleted.push_back({e.u, e.v});
  return {{"case", std::string(to_string(s.tag))},
          {"branch", s.branch},
          {"order", s.order},
          {"depth", s.depth},
          {"w", s.w},
          {"partner", s.partner ? json(*s.partner) : json(nullptr)},
          {"t", s.t},
          {"complement_list", s.complement_list},
          {"matched", matched},
          {"deleted", deleted},
          {"child_to_parent", s.child_to_parent}};
}

inline ReductionStep step_from_json(const json& j) {
  ReductionStep s;
  s.tag = case_tag_from_json(j.at("case"));
  s.branch = j.at("branch").get<std::string>();
  s.order = j.at("order").get<int>();
  s.depth = j.at("depth").get<int>();
  s.w = j.at("w").get<Vertex>();
  if (!j.at("partner").is_null()) s.partner = j.at("partner").get<Vertex>();
  s.t = j.at("t").get<int>();
  s.complement_list = j.at("complement_list").get<std::vector<Vertex>>();
  for (const auto& p : j.at("matched")) s.matched.push_back({p.at(0).get<Vertex>(), p.at(1).get<Vertex>()});
  for (const auto& e : j.at("deleted")) s.deleted.push_back({e.at(0).get<Vertex>(), e.at(1).get<Vertex>()});
  s.child_to_parent = j.at("child_to_parent").get<std::vector<Vertex>>();
  return s;
}

inline json to_json(const GapRecord& g) {
  return {{"case", std::string(to_string(g.tag))},
          {"reason", g.reason},
          {"order", g.order},
          {"failing_pair", pair_json(g.failing_pair)},
          {"recovery", g.recovery}};
}

inline GapRecord gap_record_from_json(const json& j) {
  return {case_tag_from_json(j.at("case")), j.at("reason").get<std::string>(), j.at("order").get<int>(),
          pair_from_json(j.at("failing_pair")), j.at("recovery").get<std::string>()};
}

inline json trace_json(const std::vector<ReductionStep>& trace) {
  json out = json::array();
  for (const ReductionStep& s : trace) out.push_back(to_json(s));
  return out;
}

inline std::vector<ReductionStep> trace_from_json(const json& j) {
  std::vector<ReductionStep> out;
  for (const auto& s : j) out.push_back(step_from_json(s));
  return out;
}

inline json to_json(const ColoringResult& r) {
  json gaps = json::array();
  for (const GapRecord& g : r.recovered_gaps) gaps.push_back(to_json(g));
  return {{"coloring", to_json(r.coloring)},
          {"colors_used", r.colors_used},
          {"verified", r.verified},
          {"case", std::string(to_string(r.tag))},
          {"recovered_gaps", gaps}};
}

inline ColoringResult coloring_result_from_json(const json& j, const Graph& g, const json& trace) {
  ColoringResult r;
  r.coloring = coloring_from_json(j.at("coloring"), g);
  r.colors_used = j.at("colors_used").get<int>();
  r.verified = j.at("verified").get<bool>();
  r.tag = case_tag_from_json(j.at("case"));
  for (const auto& gap : j.at("recovered_gaps")) r.recovered_gaps.push_back(gap_record_from_json(gap));
  r.trace = trace_from_json(trace);
  return r;
}

inline json to_json(const ProofGap& gap) {
  return {{"case", std::string(to_string(gap.tag()))},
          {"reason", gap.reason()},
          {"failing_pair", pair_json(gap.failing_pair())},
          {"graph", to_json(gap.graph())}};
}

inline json to_json(const ThresholdEntry& e) {
  return {{"n", e.n}, {"k", e.k}, {"value", e.value}, {"status", std::string(to_string(e.status))}, {"source", e.source}};
}

inline ThresholdEntry threshold_from_json(const json& j) {
  ThresholdEntry e;
  e.n = j.at("n").get<int>();
  e.k = j.at("k").get<int>();
  e.value = j.at("value").get<long>();
  const auto status = j.at("status").get<std::string>();
  if (status != "exact" && status != "lower-bound-only") throw InputError("unknown threshold status '" + status + "'");
  e.status = status == "exact" ? ThresholdStatus::Exact : ThresholdStatus::LowerBoundOnly;
  e.source = j.at("source").get<std::string>();
  return e;
}

inline json to_json(const SearchFailure& f) {
  return {{"graph", to_json(f.graph)},
          {"reason", f.reason},
          {"case", f.tag ? json(std::string(to_string(*f.tag))) : json(nullptr)},
          {"failing_pair", pair_json(f.failing_pair)},
          {"certificate", f.certificate ? to_json(*f.certificate) : json(nullptr)},
          {"index", f.index}};
}

inline SearchFailure failure_from_json(const json& j) {
  SearchFailure f;
  f.graph = graph_from_json(j.at("graph"));
  f.reason = j.at("reason").get<std::string>();
  if (!j.at("case").is_null()) f.tag = case_tag_from_json(j.at("case"));
  f.failing_pair = pair_from_json(j.at("failing_pair"));
  if (!j.at("certificate").is_null()) f.certificate = certificate_from_json(j.at("certificate"), f.graph);
  f.index = j.at("index").get<std::uint64_t>();
  return f;
}

inline json to_json(const SearchReport& r) {
  json failures = json::array();
  for (const SearchFailure& f : r.failures) failures.push_back(to_json(f));
  json j = {{"kind", r.kind},
            {"n", r.n},
            {"k", r.k},
            {"mode", std::string(to_string(r.mode))},
            {"seed", r.seed},
            {"sample_size", r.sample_size},
            {"checked", r.checked},
            {"band_checked", r.band_checked},
            {"failures", failures},
            {"recoveries", r.recoveries},
            {"witness", nullptr},
            {"witness_certificate", nullptr},
            {"inconclusive", r.inconclusive},
            {"holds", r.holds()},
            {"wall_seconds", r.wall_seconds}};
  if (r.witness) j["witness"] = to_json(*r.witness);
  if (r.witness_certificate) j["witness_certificate"] = to_json(*r.witness_certificate);
  return j;
}

inline SearchReport search_report_from_json(const json& j) {
  try {
    SearchReport r;
    r.kind = j.at("kind").get<std::string>();
    r.n = j.at("n").get<int>();
    r.k = j.at("k").get<int>();
    const auto mode = j.at("mode").get<std::string>();
    if (mode != "exhaustive" && mode != "sample") throw InputError("unknown sweep mode '" + mode + "'");
    r.mode = mode == "exhaustive" ? SweepMode::Exhaustive : SweepMode::Sample;
    r.seed = j.at("seed").get<std::uint64_t>();
    r.sample_size = j.at("sample_size").get<std::uint64_t>();
    r.checked = j.at("checked").get<std::uint64_t>();
    r.band_checked = j.at("band_checked").get<std::uint64_t>();
    for (const auto& f : j.at("failures")) r.failures.push_back(failure_from_json(f));
    r.recoveries = j.at("recoveries").get<std::map<std::string, std::uint64_t>>();
    if (!j.at("witness").is_null()) {
      r.witness = graph_from_json(j.at("witness"));
      if (!j.at("witness_certificate").is_null()) {
        r.witness_certificate = certificate_from_json(j.at("witness_certificate"), *r.witness);
      }
    }
    r.inconclusive = j.at("inconclusive").get<bool>();
    r.wall_seconds = j.at("wall_seconds").get<double>();
    return r;
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed report JSON: ") + e.what());
  }
}

/// Envelope printed by every CLI command.
struct ReportDocument {
  int schema_version = kSchemaVersion;
  std::string command;
  std::optional<Graph> input;
  json result;
  json trace = json::array();
  double timing_seconds = 0;
  std::optional<std::uint64_t> seed;

  friend bool operator==(const ReportDocument&, const ReportDocument&) = default;
};

inline json to_json(const ReportDocument& d) {
  json j = {{"schema_version", d.schema_version},
            {"command", d.command},
            {"input", nullptr},
            {"result", d.result},
            {"trace", d.trace},
            {"timing_seconds", d.timing_seconds},
            {"seed", d.seed ? json(*d.seed) : json(nullptr)}};
  if (d.input) j["input"] = to_json(*d.input);
  return j;
}

inline ReportDocument report_from_json(const json& j) {
  try {
    ReportDocument d;
    d.schema_version = j.at("schema_version").get<int>();
    if (d.schema_version != kSchemaVersion) {
      throw InputError("unsupported schema_version " + std::to_string(d.schema_version));
    }
    d.command = j.at("command").get<std::string>();
    if (!j.at("input").is_null()) d.input = graph_from_json(j.at("input"));
    d.result = j.at("result");
    d.trace = j.at("trace");
    d.timing_seconds = j.at("timing_seconds").get<double>();
    if (!j.at("seed").is_null()) d.seed = j.at("seed").get<std::uint64_t>();
    return d;
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed report JSON: ") + e.what());
  }
}

inline std::string emit_json(const ReportDocument& d) { return to_json(d).dump(2) + "\n"; }

// --- generators ------------------------------------------------------------------

enum class GraphKind { Complete, Path, Cycle, Star, Lollipop, Random };

inline GraphKind graph_kind_from_string(std::string_view s) {
  if (s == "complete") return GraphKind::Complete;
  if (s == "path") return GraphKind::Path;
  if (s == "cycle") return GraphKind::Cycle;
  if (s == "star") return GraphKind::Star;
  if (s == "lollipop") return GraphKind::Lollipop;
  if (s == "random") return GraphKind::Random;
  throw InputError("unknown graph kind '" + std::string(s) + "'");
}

/// complete n | path n | cycle n | star n (center 0) | lollipop n k | random n m.
/// Random graphs are connected: a random recursive tree plus uniform extra edges.
inline Graph generate(GraphKind kind, const std::vector<long>& params, std::uint64_t seed = 1) {
  const std::size_t want = kind == GraphKind::Lollipop || kind == GraphKind::Random ? 2 : 1;
  if (params.size() != want) throw InputError("expected " + std::to_string(want) + " parameter(s)");
  const long n = params[0];
  if (n < 1 || n > Graph::kMaxOrder) throw InputError("order must lie in 1.." + std::to_string(Graph::kMaxOrder));
  const int order = static_cast<int>(n);
  std::vector<Edge> edges;
  switch (kind) {
    case GraphKind::Complete:
      for (Vertex u = 0; u < order; ++u) {
        for (Vertex v = u + 1; v < order; ++v) edges.push_back({u, v});
      }
      break;
    case GraphKind::Path:
      for (Vertex v = 0; v + 1 < order; ++v) edges.push_back({v, v + 1});
      break;
    case GraphKind::Cycle:
      if (order < 3) throw InputError("cycle needs n >= 3");
      for (Vertex v = 0; v < order; ++v) edges.push_back({v, (v + 1) % order});
      break;
    case GraphKind::Star:
      for (Vertex v = 1; v < order; ++v) edges.push_back({0, v});
      break;
    case GraphKind::Lollipop:
      return lollipop(order, static_cast<int>(params[1]));
    case GraphKind::Random: {
      const long m = params[1];
      if (m < n - 1 || m > pairs(n)) {
        throw InputError("random graph needs n-1 <= m <= C(n,2), got m=" + std::to_string(m));
      }
      std::mt19937_64 rng(detail::splitmix64(seed));
      std::vector<std::uint64_t> rows(static_cast<std::size_t>(order), 0);
      auto link = [&](Vertex u, Vertex v) {
        rows[u] |= std::uint64_t{1} << v;
        rows[v] |= std::uint64_t{1} << u;
      };
      for (Vertex v = 1; v < order; ++v) {
        link(v, static_cast<Vertex>(std::uniform_int_distribution<int>(0, v - 1)(rng)));
      }
      std::vector<Edge> rest;
      for (Vertex u = 0; u < order; ++u) {
        for (Vertex v = u + 1; v < order; ++v) {
          if (!(rows[u] >> v & 1)) rest.push_back({u, v});
        }
      }
      std::shuffle(rest.begin(), rest.end(), rng);
      for (long i = 0; i < m - (n - 1); ++i) link(rest[static_cast<std::size_t>(i)].u, rest[static_cast<std::size_t>(i)].v);
      return Graph::from_rows(order, rows);
    }
  }
  return Graph(order, edges);
}

}  // namespace rainbow
