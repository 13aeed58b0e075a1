// rainbow: command-line front end.
//
// Exit codes: 0 success or claim holds, 1 claim fails / witness absent /
// budget exhausted, 2 input error, 3 proof gap.

#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rainbow/rainbow.hpp"

namespace {

using namespace rainbow;

constexpr int kOk = 0;
constexpr int kClaimFails = 1;
constexpr int kInputError = 2;
constexpr int kProofGap = 3;

std::string slurp(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

double since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

int print(const ReportDocument& doc, int code) {
  std::cout << emit_json(doc);
  return code;
}

int cmd_verify(const std::string& file) {
  const auto start = std::chrono::steady_clock::now();
  const EdgeListDocument in = parse_edge_list(slurp(file));
  if (!in.coloring) throw InputError("verify needs a colored edge list ('u v c' lines)");
  const auto bad = first_unconnected_pair(in.graph, *in.coloring);
  ReportDocument doc;
  doc.command = "verify";
  doc.input = in.graph;
  doc.result = {{"rainbow_connected", !bad},
                {"colors_used", in.coloring->colors_used()},
                {"failing_pair", pair_json(bad)}};
  doc.timing_seconds = since(start);
  return print(doc, bad ? kClaimFails : kOk);
}

int cmd_exact(const std::string& file, int kmax, std::uint64_t budget) {
  const auto start = std::chrono::steady_clock::now();
  const EdgeListDocument in = parse_edge_list(slurp(file));
  ExactOptions opts;
  opts.k_max = kmax;
  opts.budget = budget;
  ReportDocument doc;
  doc.command = "exact";
  doc.input = in.graph;
  try {
    const RcCertificate cert = rc_exact(in.graph, opts);
    doc.result = to_json(cert);
    doc.timing_seconds = since(start);
    return print(doc, cert.found() ? kOk : kClaimFails);
  } catch (const BudgetExceeded& e) {
    doc.result = {{"budget_exceeded", true},
                  {"message", e.what()},
                  {"lower_bound", e.lower_bound()},
                  {"upper_bound", e.upper_bound()}};
    doc.timing_seconds = since(start);
    return print(doc, kClaimFails);
  }
}

int cmd_color(const std::string& file, int colors, bool dot, int base_cap, bool literal) {
  const auto start = std::chrono::steady_clock::now();
  const EdgeListDocument in = parse_edge_list(slurp(file));
  ColorerOptions opts;
  opts.base_cap = base_cap;
  opts.fallback_cap = base_cap;
  opts.repairs = !literal;
  opts.cache = std::make_shared<ExactCache>();
  ReportDocument doc;
  doc.command = "color";
  doc.input = in.graph;
  try {
    const ColoringResult r = color_dense(in.graph, colors, opts);
    if (dot) {
      std::cout << emit_dot(in.graph, &r.coloring);
      return kOk;
    }
    doc.result = to_json(r);
    doc.trace = trace_json(r.trace);
    doc.timing_seconds = since(start);
    return print(doc, kOk);
  } catch (const ProofGap& gap) {
    doc.result = {{"proof_gap", to_json(gap)}};
    doc.trace = trace_json(gap.trace());
    doc.timing_seconds = since(start);
    return print(doc, kProofGap);
  }
}

int cmd_threshold(int n, int k) {
  ReportDocument doc;
  doc.command = "threshold";
  doc.result = to_json(f_threshold(n, k));
  return print(doc, kOk);
}

int cmd_sharpness(int n, int k, std::uint64_t budget, std::uint64_t seed) {
  SharpnessOptions opts;
  opts.budget = budget;
  opts.seed = seed;
  const SearchReport r = sharpness_witness(n, k, opts);
  ReportDocument doc;
  doc.command = "sharpness";
  doc.result = to_json(r);
  doc.timing_seconds = r.wall_seconds;
  doc.seed = seed;
  return print(doc, r.witness ? kOk : kClaimFails);
}

int cmd_sweep(int n, int k, const std::string& mode, std::uint64_t seed, std::uint64_t count, unsigned threads,
              bool literal) {
  SweepOptions opts;
  if (mode != "exhaustive" && mode != "sample") throw InputError("--mode must be exhaustive or sample");
  opts.mode = mode == "exhaustive" ? SweepMode::Exhaustive : SweepMode::Sample;
  opts.seed = seed;
  opts.sample_size = count;
  opts.threads = threads;
  opts.colorer.repairs = !literal;
  const SearchReport r = exhaustive_verify(n, k, opts);
  ReportDocument doc;
  doc.command = "sweep";
  doc.result = to_json(r);
  doc.timing_seconds = r.wall_seconds;
  if (opts.mode == SweepMode::Sample) doc.seed = seed;
  return print(doc, r.holds() ? kOk : kClaimFails);
}

int cmd_gen(const std::string& kind, const std::vector<long>& params, std::uint64_t seed, bool dot) {
  const Graph g = generate(graph_kind_from_string(kind), params, seed);
  std::cout << (dot ? emit_dot(g) : emit_edge_list(g));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rainbow connection toolkit: exact rc, dense-graph colorings, threshold sweeps"};
  app.require_subcommand(1);

  std::string file;
  int kmax = 0;
  std::uint64_t budget = 100'000'000;
  int colors = 0;
  bool dot = false;
  bool literal = false;
  int base_cap = 6;
  int n = 0;
  int k = 0;
  std::uint64_t seed = 1;
  std::uint64_t count = 10'000;
  unsigned threads = 0;
  std::string mode = "exhaustive";
  std::string kind;
  std::vector<long> params;

  auto* verify = app.add_subcommand("verify", "Check whether a colored edge list is rainbow connected");
  verify->add_option("file", file, "Colored edge list, '-' for stdin")->required();

  auto* exact = app.add_subcommand("exact", "Exact rainbow connection number with certificate");
  exact->add_option("file", file, "Edge list, '-' for stdin")->required();
  exact->add_option("--kmax", kmax, "Largest color count tried (0: edge count)");
  exact->add_option("--budget", budget, "Work budget in search state expansions");

  auto* color = app.add_subcommand("color", "Dense-graph coloring with 2, 3 or 4 colors");
  color->add_option("file", file, "Edge list, '-' for stdin")->required();
  color->add_option("--colors", colors, "Color count")->required()->check(CLI::IsMember({2, 3, 4}));
  color->add_flag("--dot", dot, "Print the colored graph as DOT");
  color->add_option("--base-cap", base_cap, "Orders solved and recovered by exact search");
  color->add_flag("--literal", literal, "Disable repaired branches; failures surface as proof gaps");

  auto* threshold = app.add_subcommand("threshold", "Edge threshold f(n,k)");
  threshold->add_option("n", n)->required();
  threshold->add_option("k", k)->required();

  auto* sharp = app.add_subcommand("sharpness", "Search a graph with f(n,k)-1 edges and rc > k");
  sharp->add_option("n", n)->required();
  sharp->add_option("k", k)->required();
  sharp->add_option("--budget", budget, "Candidate graphs examined");
  sharp->add_option("--seed", seed);

  auto* sweep = app.add_subcommand("sweep", "Check the k-color bound on all or sampled dense graphs");
  sweep->add_option("n", n)->required();
  sweep->add_option("k", k)->required();
  sweep->add_option("--mode", mode)->check(CLI::IsMember({"exhaustive", "sample"}));
  sweep->add_option("--seed", seed);
  sweep->add_option("--count", count, "Sample size");
  sweep->add_option("--threads", threads, "Workers (0: all cores)");
  sweep->add_flag("--literal", literal, "Disable repaired branches");

  auto* gen = app.add_subcommand("gen", "Generate a graph: complete n | path n | cycle n | star n | lollipop n k | random n m");
  gen->add_option("kind", kind)->required();
  gen->add_option("params", params)->required();
  gen->add_option("--seed", seed);
  gen->add_flag("--dot", dot, "Print DOT instead of an edge list");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  if (sharp->parsed()) budget = sharp->count("--budget") ? budget : 2'000'000;
  try {
    if (verify->parsed()) return cmd_verify(file);
    if (exact->parsed()) return cmd_exact(file, kmax, budget);
    if (color->parsed()) return cmd_color(file, colors, dot, base_cap, literal);
    if (threshold->parsed()) return cmd_threshold(n, k);
    if (sharp->parsed()) return cmd_sharpness(n, k, budget, seed);
    if (sweep->parsed()) return cmd_sweep(n, k, mode, seed, count, threads, literal);
    if (gen->parsed()) return cmd_gen(kind, params, seed, dot);
  } catch (const ProofGap& gap) {
    std::cerr << "proof gap: " << gap.what() << '\n';
    return kProofGap;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return kClaimFails;
  }
  return kInputError;
}
