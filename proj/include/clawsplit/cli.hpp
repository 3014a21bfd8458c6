#pragma once

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "clawsplit/clawsplit.hpp"

namespace clawsplit::cli {

/// Process exit codes.
enum Exit : int { kYes = 0, kNo = 1, kUsage = 2, kBudget = 3 };

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string input;
  std::string out;
  std::string aux_out;  // plan/trace/labels/provenance, depending on the command
  std::string certificate;
  std::string hs;
  std::string labels;
  std::string algo = "exact";
  std::string mode = "exclusive";
  std::string kernel_mode = "paper-strict";
  std::string oracle = "branching";
  std::string format = "edge-list";
  std::string builtin;
  std::size_t k = 0;
  std::size_t c = 3;
  std::size_t n = 0;
  double p = 0.5;
  std::optional<std::size_t> max_degree;
  std::optional<std::uint64_t> seed;
  std::uint64_t node_budget = 5'000'000;
  std::size_t max_vertices = 10;
  bool witnesses = false;
};

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write '" + path + "'");
  out << text;
}

/// Writes to `path`, or to `fallback` when no path was given.
inline void emit(const std::string& path, const std::string& text, std::ostream& fallback) {
  if (path.empty())
    fallback << text;
  else
    write_file(path, text);
}

inline Graph load_graph(const RunConfig& cfg) {
  if (cfg.input.empty()) throw UsageError("--input is required");
  Graph g = parse_edge_list(read_file(cfg.input));
  if (!cfg.labels.empty()) g = parse_labels(read_file(cfg.labels), g);
  return g;
}

inline SplitMode parse_mode(const std::string& s) {
  if (s == "exclusive") return SplitMode::exclusive;
  if (s == "inclusive") return SplitMode::inclusive;
  throw UsageError("unknown mode '" + s + "'");
}

inline Rule2Mode parse_kernel_mode(const std::string& s) {
  if (s == "paper-strict") return Rule2Mode::paper_strict;
  if (s == "verified") return Rule2Mode::verified;
  throw UsageError("unknown kernel mode '" + s + "'");
}

inline int verdict_exit(Verdict v) {
  return v == Verdict::yes ? kYes : v == Verdict::no ? kNo : kBudget;
}

inline std::string render_graph(const Graph& g, const std::string& format) {
  if (format == "edge-list") return to_edge_list(g);
  if (format == "dot") return to_dot(g);
  throw UsageError("unknown format '" + format + "'");
}

}  // namespace detail

inline int cmd_detect(const RunConfig& cfg, std::ostream& out) {
  auto g = detail::load_graph(cfg);
  auto report = find_centers(g, cfg.c);
  for (Vertex v : report.centers) {
    out << v;
    if (cfg.witnesses) out << ": " << clawsplit::detail::join(report.witness.at(v));
    out << '\n';
  }
  return kYes;
}

inline int cmd_solve(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  auto g = detail::load_graph(cfg);
  if (cfg.algo == "deg4") {
    if (cfg.c != 3) throw UsageError("--algo deg4 supports only --c 3");
    try {
      auto sol = solve_deg4(g);
      out << "cost " << sol.plan.cost() << '\n';
      for (const auto& r : sol.resolutions)
        if (r.tag == ResolutionCase::connected_star_fallback)
          err << "note: center " << r.vertex << " resolved via " << to_string(r.tag) << '\n';
      detail::emit(cfg.aux_out, to_plan_text(sol.plan), out);
      return kYes;
    } catch (const DegreeBoundExceeded& e) {
      err << "error: " << e.what() << '\n';
      return kUsage;
    } catch (const SearchBudgetExceeded& e) {
      err << "error: " << e.what() << '\n';
      return kBudget;
    }
  }
  if (cfg.algo != "exact") throw UsageError("unknown algorithm '" + cfg.algo + "'");
  const SplitMode mode = detail::parse_mode(cfg.mode);
  if (mode == SplitMode::exclusive && cfg.oracle == "branching") {
    auto r = solve_exact_branching(g, cfg.k, cfg.c, {cfg.node_budget});
    out << to_string(r.verdict) << '\n';
    if (r.plan) detail::emit(cfg.aux_out, to_plan_text(*r.plan), out);
    return detail::verdict_exit(r.verdict);
  }
  if (cfg.oracle != "branching" && cfg.oracle != "sequential")
    throw UsageError("unknown oracle '" + cfg.oracle + "'");
  SequentialOptions opts{cfg.max_vertices, cfg.node_budget};
  SequentialResult r;
  try {
    r = solve_exact_sequential(g, cfg.k, cfg.c, mode, opts);
  } catch (const InstanceTooLarge& e) {
    throw UsageError(e.what());
  }
  out << to_string(r.verdict) << '\n';
  if (r.trace) detail::emit(cfg.aux_out, to_trace_text(*r.trace), out);
  return detail::verdict_exit(r.verdict);
}

inline int cmd_kernelize(const RunConfig& cfg, std::ostream& out) {
  auto g = detail::load_graph(cfg);
  auto outcome = kernelize(g, cfg.k, cfg.c, detail::parse_kernel_mode(cfg.kernel_mode));
  if (!cfg.aux_out.empty()) detail::write_file(cfg.aux_out, kernel_trace_text(outcome));
  if (outcome.verdict == KernelVerdict::no_instance) {
    out << "NO\n";
    if (cfg.aux_out.empty()) out << kernel_trace_text(outcome);
    return kNo;
  }
  out << "REDUCED n=" << outcome.graph.vertex_count() << " m=" << outcome.graph.edge_count()
      << " bound=" << kernel_size_bound(cfg.k, cfg.c) << '\n';
  if (!cfg.out.empty()) {
    std::string text = "# kernel id -> original id:";
    for (std::size_t i = 0; i < outcome.provenance.size(); ++i)
      text += " " + std::to_string(i) + ">" + std::to_string(outcome.provenance[i]);
    detail::write_file(cfg.out, text + "\n" + to_edge_list(outcome.graph));
  }
  return kYes;
}

/// Kernelize, then decide the kernel exactly.
inline int cmd_pipeline(const RunConfig& cfg, std::ostream& out) {
  auto g = detail::load_graph(cfg);
  auto outcome = kernelize(g, cfg.k, cfg.c, detail::parse_kernel_mode(cfg.kernel_mode));
  if (outcome.verdict == KernelVerdict::no_instance) {
    out << "NO\n";
    return kNo;
  }
  auto r = solve_exact_branching(outcome.graph, cfg.k, cfg.c, {cfg.node_budget});
  out << to_string(r.verdict) << '\n';
  return detail::verdict_exit(r.verdict);
}

inline int cmd_reduce(const RunConfig& cfg, std::ostream& out) {
  if (cfg.hs.empty()) throw UsageError("--hs is required");
  auto inst = parse_hitting_set(detail::read_file(cfg.hs));
  ReducedInstance reduced;
  try {
    reduced = reduce_hs_to_split(inst, cfg.c);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  detail::emit(cfg.out, detail::render_graph(reduced.graph, cfg.format), out);
  if (!cfg.aux_out.empty()) detail::write_file(cfg.aux_out, to_labels_text(reduced.graph));
  out << "budget " << reduced.budget << '\n';
  return kYes;
}

inline int cmd_hs_oracle(const RunConfig& cfg, std::ostream& out) {
  if (cfg.hs.empty()) throw UsageError("--hs is required");
  auto inst = parse_hitting_set(detail::read_file(cfg.hs));
  try {
    out << brute_force_min_hitting_set(inst) << '\n';
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return kYes;
}

inline int cmd_gen(const RunConfig& cfg, std::ostream& out) {
  Graph g;
  if (!cfg.builtin.empty()) {
    try {
      g = cubic_builtin(cfg.builtin);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  } else {
    if (!cfg.seed) throw UsageError("random generation requires --seed");
    if (cfg.p < 0.0 || cfg.p > 1.0) throw UsageError("--p must lie in [0, 1]");
    g = cfg.max_degree ? gen_random_bounded(cfg.n, cfg.p, *cfg.max_degree, *cfg.seed)
                       : gen_random(cfg.n, cfg.p, *cfg.seed);
  }
  std::string text;
  if (cfg.format == "hs") {
    auto inst = pair_system(g, 0);
    inst.budget = brute_force_min_hitting_set(inst);
    text = to_hitting_set_text(inst);
  } else {
    text = detail::render_graph(g, cfg.format);
  }
  detail::emit(cfg.out, text, out);
  return kYes;
}

inline int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  auto g = detail::load_graph(cfg);
  if (cfg.certificate.empty() == cfg.aux_out.empty())
    throw UsageError("give exactly one of --plan or --trace");
  bool ok = false;
  try {
    if (!cfg.certificate.empty()) {
      ok = verify_solution(g, parse_plan_text(detail::read_file(cfg.certificate)), cfg.k, cfg.c);
    } else {
      ok = verify_solution(g, parse_trace_text(detail::read_file(cfg.aux_out)), cfg.k, cfg.c,
                           detail::parse_mode(cfg.mode));
    }
  } catch (const InvalidCertificate& e) {
    err << "malformed certificate: " << e.what() << '\n';
    return kUsage;
  }
  out << (ok ? "VALID" : "INVALID") << '\n';
  return ok ? kYes : kNo;
}

inline int cmd_export_dot(const RunConfig& cfg, std::ostream& out) {
  auto g = detail::load_graph(cfg);
  auto centers = find_centers(g, cfg.c).centers;
  detail::emit(cfg.out, to_dot(g, centers), out);
  return kYes;
}

/**
 * Entry point shared by the executable and the tests. Exit codes: 0 YES or
 * success, 1 NO, 2 input/usage error, 3 search budget exceeded.
 */
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Vertex splitting into K_{1,c}-free graphs", "clawsplit"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--c", cfg.c, "forbidden star K_{1,c}")->check(CLI::Range(3, 64));
  };
  auto graph_in = [&](CLI::App* sub) {
    sub->add_option("--input", cfg.input, "edge-list file")->required();
    sub->add_option("--labels", cfg.labels, "labels file");
  };

  auto* detect = app.add_subcommand("detect", "list K_{1,c} centers");
  graph_in(detect);
  common(detect);
  detect->add_flag("--witnesses", cfg.witnesses, "print one independent witness per center");

  auto* solve = app.add_subcommand("solve", "solve an instance");
  graph_in(solve);
  common(solve);
  solve->add_option("--algo", cfg.algo, "deg4 (max degree 4, c = 3) or exact search")->check(CLI::IsMember({"deg4", "exact"}));
  solve->add_option("--k", cfg.k, "split budget of the exact search");
  solve->add_option("--mode", cfg.mode, "split regime")->check(CLI::IsMember({"exclusive", "inclusive"}));
  solve->add_option("--oracle", cfg.oracle, "exact search strategy")->check(CLI::IsMember({"branching", "sequential"}));
  solve->add_option("--node-budget", cfg.node_budget, "search node limit");
  solve->add_option("--max-vertices", cfg.max_vertices, "n + k limit of the sequential search");
  solve->add_option("--plan-out,--out", cfg.aux_out, "certificate output");

  auto* kern = app.add_subcommand("kernelize", "apply the reduction rules");
  graph_in(kern);
  common(kern);
  kern->add_option("--k", cfg.k, "split budget")->required();
  kern->add_option("--mode", cfg.kernel_mode, "rule 2 threshold variant")->check(CLI::IsMember({"paper-strict", "verified"}));
  kern->add_option("--out", cfg.out, "kernel edge list");
  kern->add_option("--trace", cfg.aux_out, "rule log");

  auto* pipe = app.add_subcommand("pipeline", "kernelize, then solve the kernel exactly");
  graph_in(pipe);
  common(pipe);
  pipe->add_option("--k", cfg.k, "split budget")->required();
  pipe->add_option("--mode", cfg.kernel_mode, "rule 2 threshold variant")->check(CLI::IsMember({"paper-strict", "verified"}));
  pipe->add_option("--node-budget", cfg.node_budget, "search node limit");

  auto* reduce = app.add_subcommand("reduce", "build the splitting instance of a hitting-set file");
  reduce->add_option("--hs", cfg.hs, "hitting-set file")->required();
  common(reduce);
  reduce->add_option("--out", cfg.out, "graph output");
  reduce->add_option("--labels", cfg.aux_out, "labels output");
  reduce->add_option("--format", cfg.format, "graph output format")->check(CLI::IsMember({"edge-list", "dot"}));

  auto* oracle = app.add_subcommand("hs-oracle", "minimum hitting-set size");
  oracle->add_option("--hs", cfg.hs, "hitting-set file")->required();

  auto* gen = app.add_subcommand("gen", "generate a graph");
  gen->add_option("--n", cfg.n, "vertex count");
  gen->add_option("--p", cfg.p, "edge probability");
  gen->add_option("--max-degree", cfg.max_degree, "degree cap");
  gen->add_option("--seed", cfg.seed, "required for random graphs");
  gen->add_option("--builtin", cfg.builtin, "k4, k33, prism or cube");
  gen->add_option("--out", cfg.out, "output file");
  gen->add_option("--format", cfg.format, "hs emits the pair system of the graph")->check(CLI::IsMember({"edge-list", "dot", "hs"}));

  auto* verify = app.add_subcommand("verify", "check a plan or trace");
  graph_in(verify);
  common(verify);
  verify->add_option("--k", cfg.k, "split budget")->required();
  verify->add_option("--mode", cfg.mode, "split regime of a trace")->check(CLI::IsMember({"exclusive", "inclusive"}));
  verify->add_option("--plan", cfg.certificate, "split plan file");
  verify->add_option("--trace", cfg.aux_out, "split trace file");

  auto* dot = app.add_subcommand("export-dot", "Graphviz rendering with centers highlighted");
  graph_in(dot);
  common(dot);
  dot->add_option("--out", cfg.out, "output file");

  std::vector<const char*> argv{"clawsplit"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kYes;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*detect) return cmd_detect(cfg, out);
    if (*solve) return cmd_solve(cfg, out, err);
    if (*kern) return cmd_kernelize(cfg, out);
    if (*pipe) return cmd_pipeline(cfg, out);
    if (*reduce) return cmd_reduce(cfg, out);
    if (*oracle) return cmd_hs_oracle(cfg, out);
    if (*gen) return cmd_gen(cfg, out);
    if (*verify) return cmd_verify(cfg, out, err);
    if (*dot) return cmd_export_dot(cfg, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace clawsplit::cli
