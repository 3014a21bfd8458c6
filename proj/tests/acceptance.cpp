// Acceptance harness: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <mutex>
#include <set>
#include <string>
#include <vector>

#include "support/oracles.hpp"

using namespace clawsplit;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string summary;
  std::vector<std::string> details;
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

std::vector<Graph> all_graphs(std::size_t max_n, const std::function<bool(const Graph&)>& keep = {}) {
  std::vector<Graph> out;
  auto by_order = enumerate_graphs(max_n, keep);
  for (auto& layer : by_order)
    for (auto& g : layer) out.push_back(std::move(g));
  return out;
}

// Oracle settings for instances beyond the default n + k <= 10 guard.
const SequentialOptions kWideSearch{24, 200'000'000};

// ---------------------------------------------------------------------------

Outcome detection_equivalence() {
  auto t0 = Clock::now();
  std::vector<Graph> graphs = all_graphs(7);
  const std::size_t exhaustive = graphs.size();
  for (std::uint64_t seed = 0; seed < 500; ++seed)
    graphs.push_back(gen_random(3 + seed % 10, 0.1 + 0.8 * static_cast<double>(seed % 17) / 16, seed));
  std::atomic<std::size_t> mismatches{0};
  oracle::parallel_for(graphs.size(), [&](std::size_t i) {
    if (find_centers(graphs[i], 3).centers != oracle::brute_force_centers(graphs[i], 3)) ++mismatches;
  });
  const double secs = seconds_since(t0);
  Outcome o;
  o.pass = mismatches == 0 && secs < 60;
  o.summary = fmt("%zu exhaustive + 500 random graphs, %zu mismatches, %.1f s", exhaustive,
                  mismatches.load(), secs);
  return o;
}

Outcome degree4_optimality() {
  auto t0 = Clock::now();
  std::vector<Graph> graphs = all_graphs(8, [](const Graph& g) { return g.max_degree() <= 4; });
  const std::size_t exhaustive = graphs.size();
  for (std::uint64_t seed = 0; seed < 1000; ++seed)
    graphs.push_back(gen_random_bounded(5 + seed % 5, 0.3 + 0.5 * static_cast<double>(seed % 11) / 10,
                                        4, 1'000'000 + seed));

  struct Tally {
    std::atomic<std::size_t> count{0}, exclusive_bad{0}, inclusive_bad{0}, undecided{0};
  } plain, fallback;
  std::mutex log_mutex;
  std::vector<std::string> examples;

  // optimum == cost: the plan, replayed as single splits, is a solution of
  // that length, and the exhaustive search finds none with one split fewer.
  oracle::parallel_for(graphs.size(), [&](std::size_t i) {
    const Graph& g = graphs[i];
    auto sol = solve_deg4(g);
    const std::size_t cost = sol.plan.cost();
    Tally& t = sol.fallback_count ? fallback : plain;
    ++t.count;
    const auto trace = plan_to_trace(g, sol.plan);
    if (!verify_solution(g, trace, cost, 3, SplitMode::exclusive)) {
      ++t.exclusive_bad;
      ++t.inclusive_bad;
      return;
    }
    if (cost == 0) return;
    for (auto mode : {SplitMode::exclusive, SplitMode::inclusive}) {
      auto below = solve_exact_sequential(g, cost - 1, 3, mode, kWideSearch);
      if (below.verdict == Verdict::unknown) {
        ++t.undecided;
        continue;
      }
      if (below.verdict == Verdict::no) continue;
      ++(mode == SplitMode::exclusive ? t.exclusive_bad : t.inclusive_bad);
      std::lock_guard lock(log_mutex);
      if (examples.size() < 3)
        examples.push_back(fmt("%s optimum %zu < %zu on: ", std::string(to_string(mode)).c_str(),
                               below.trace->size(), cost) +
                           to_edge_list(g));
    }
  });

  Outcome o;
  auto line = [](const char* name, const Tally& t) {
    return fmt("%s: %zu graphs, exclusive mismatches %zu, inclusive mismatches %zu, undecided %zu",
               name, t.count.load(), t.exclusive_bad.load(), t.inclusive_bad.load(),
               t.undecided.load());
  };
  o.details.push_back(line("non-fallback", plain));
  o.details.push_back(line("fallback (connected star)", fallback));
  for (auto& e : examples) {
    std::string flat;
    for (char ch : e) flat += ch == '\n' ? ' ' : ch;
    o.details.push_back(flat);
  }
  const std::size_t bad = plain.exclusive_bad + plain.inclusive_bad + plain.undecided +
                          fallback.exclusive_bad + fallback.inclusive_bad + fallback.undecided;
  o.pass = bad == 0;
  o.summary = fmt("%zu exhaustive (n <= 8) + 1000 random (n <= 9), %.1f s", exhaustive,
                  seconds_since(t0));
  return o;
}

Outcome fan_with_tail_golden() {
  const Graph g = oracle::fan_with_tail();
  Outcome o;
  auto report = find_centers(g, 3);
  const bool one_center = report.centers == std::vector<Vertex>{0};
  auto p5 = apply_single_split(g, 0, {1, 2, 3, 4}, {5}, SplitMode::exclusive);
  const bool claw_at_p5 = find_centers(p5.graph, 3).centers == std::vector<Vertex>{5};
  auto p1 = apply_single_split(g, 0, {2, 3, 4, 5}, {1}, SplitMode::exclusive);
  const bool p1_free = is_k1c_free(p1.graph, 3);
  const auto opt = sequential_optimum(g, 3, SplitMode::exclusive, 2);
  const auto branch = solve_exact_branching(g, 2, 3);
  const bool optimum_one = opt == std::optional<std::size_t>(1) && branch.plan &&
                           branch.plan->cost() == 1;
  o.pass = one_center && claw_at_p5 && p1_free && optimum_one;
  o.summary = fmt("single center %s, p5 split claw %s, p1 split claw-free %s, optimum %s",
                  one_center ? "yes" : "no", claw_at_p5 ? "yes" : "no", p1_free ? "yes" : "no",
                  opt ? std::to_string(*opt).c_str() : "none");
  return o;
}

Outcome kernel_size_bound_check() {
  auto t0 = Clock::now();
  std::atomic<std::size_t> violations{0}, reduced{0}, nonempty{0}, no{0};
  oracle::parallel_for(1000, [&](std::size_t i) {
    const std::size_t k = 1 + i % 5, c = 3 + (i / 5) % 3;
    const std::size_t n = 10 + (i * 7) % 50;
    const double p = 0.03 + 0.3 * static_cast<double>((i * 13) % 10) / 10;
    auto g = gen_random(n, p, 2'000'000 + i);
    auto out = kernelize(g, k, c, Rule2Mode::paper_strict);
    if (out.verdict == KernelVerdict::no_instance) {
      ++no;
      return;
    }
    ++reduced;
    if (out.graph.vertex_count() > 0) ++nonempty;
    if (out.graph.vertex_count() > kernel_size_bound(k, c)) ++violations;
  });
  Outcome o;
  o.pass = violations == 0;
  o.summary = fmt("1000 instances (paper-strict): %zu reduced (%zu non-empty), %zu NO, %zu violations, %.1f s",
                  reduced.load(), nonempty.load(), no.load(), violations.load(), seconds_since(t0));
  return o;
}

Outcome kernel_answer_preservation() {
  auto t0 = Clock::now();
  std::vector<Graph> graphs = all_graphs(8);
  const std::size_t exhaustive = graphs.size();
  for (std::uint64_t seed = 0; seed < 1000; ++seed)
    graphs.push_back(gen_random(5 + seed % 4, 0.2 + 0.6 * static_cast<double>(seed % 7) / 6,
                                3'000'000 + seed));

  std::atomic<std::size_t> strict_bad{0}, verified_bad{0}, divergent{0}, downgraded{0}, checks{0};
  std::mutex log_mutex;
  std::vector<std::string> examples;
  std::map<std::string, std::size_t> causes;  // "mode: rules fired" for each inconsistency
  auto yes = [](const Graph& g, std::size_t k) {
    return solve_exact_sequential(g, k, 3, SplitMode::exclusive).verdict == Verdict::yes;
  };
  oracle::parallel_for(graphs.size(), [&](std::size_t i) {
    const Graph& g = graphs[i];
    for (std::size_t k = 0; k <= 2; ++k) {
      ++checks;
      const bool truth = yes(g, k);
      bool consistent[2];
      KernelVerdict verdicts[2];
      int m = 0;
      for (auto mode : {Rule2Mode::paper_strict, Rule2Mode::verified}) {
        auto out = kernelize(g, k, 3, mode);
        if (!out.notes.empty() && mode == Rule2Mode::verified) ++downgraded;
        verdicts[m] = out.verdict;
        consistent[m] = out.verdict == KernelVerdict::no_instance ? !truth : yes(out.graph, k) == truth;
        if (!consistent[m]) {
          std::set<std::string> fired;
          for (const auto& f : out.fired) fired.insert(std::string(to_string(f.rule)));
          std::string key = std::string(to_string(mode)) + (truth ? ", YES instance" : ", NO instance") + ", fired:";
          for (const auto& r : fired) key += " " + r;
          std::lock_guard lock(log_mutex);
          ++causes[key];
        }
        ++m;
      }
      if (!consistent[0]) ++strict_bad;
      if (!consistent[1]) ++verified_bad;
      if (verdicts[0] != verdicts[1]) {
        ++divergent;
        std::lock_guard lock(log_mutex);
        if (examples.size() < 2) {
          std::string flat = fmt("divergence at k=%zu: ", k);
          for (char ch : to_edge_list(g)) flat += ch == '\n' ? ' ' : ch;
          examples.push_back(flat);
        }
      }
    }
  });
  Outcome o;
  o.pass = verified_bad == 0;
  o.summary = fmt("%zu instances (%zu graphs exhaustive n <= 8 + 1000 random, k <= 2), %.1f s",
                  checks.load(), exhaustive, seconds_since(t0));
  o.details.push_back(fmt("verified inconsistencies %zu, paper-strict inconsistencies %zu", verified_bad.load(),
                          strict_bad.load()));
  o.details.push_back(fmt("paper-strict/verified verdict divergences %zu, verified runs with notes %zu",
                          divergent.load(), downgraded.load()));
  for (const auto& [key, count] : causes) o.details.push_back(fmt("%zu inconsistencies (%s)", count, key.c_str()));
  for (auto& e : examples) o.details.push_back(e);
  return o;
}

Outcome kernel_idempotence() {
  auto t0 = Clock::now();
  std::atomic<std::size_t> violations{0}, runs{0}, firings{0};
  oracle::parallel_for(1000, [&](std::size_t i) {
    const std::size_t k = 1 + i % 4;
    auto g = gen_random(8 + i % 25, 0.05 + 0.3 * static_cast<double>(i % 9) / 8, 4'000'000 + i);
    for (auto mode : {Rule2Mode::paper_strict, Rule2Mode::verified}) {
      ++runs;
      auto once = kernelize(g, k, 3, mode);
      firings += once.fired.size();
      for (const auto& f : once.fired)
        if (!f.no_instance && f.vertices_after >= f.vertices_before) ++violations;
      if (once.verdict != KernelVerdict::reduced) continue;
      auto twice = kernelize(once.graph, k, 3, mode);
      if (twice.verdict != KernelVerdict::reduced || !twice.fired.empty() ||
          !(twice.graph == once.graph))
        ++violations;
    }
  });
  Outcome o;
  o.pass = violations == 0;
  o.summary = fmt("%zu kernelizations, %zu rule firings, %zu violations, %.1f s", runs.load(),
                  firings.load(), violations.load(), seconds_since(t0));
  return o;
}

Outcome reduction_forward() {
  Outcome o;
  std::size_t witnesses = 0, failures = 0;
  for (auto name : {"k4", "k33", "prism", "cube"}) {
    auto inst = pair_system(cubic_builtin(name), 0);
    const auto hits = brute_force_hitting_set(inst);
    inst.budget = hits.size();
    auto reduced = reduce_hs_to_split(inst, 3);
    auto plan = hitting_set_to_plan(reduced, hits);
    ++witnesses;
    const bool ok = plan.cost() <= inst.subsets.size() + inst.budget &&
                    verify_solution(reduced.graph, plan, reduced.budget, 3);
    failures += !ok;

    auto padded = pad_no_subset_hits_all(inst);
    const auto padded_hits = brute_force_hitting_set(padded);
    auto padded_reduced = reduce_hs_to_split(padded, 3);
    auto padded_plan = hitting_set_to_plan(padded_reduced, padded_hits);
    ++witnesses;
    const bool padded_ok = padded_hits.size() <= padded.budget &&
                           verify_solution(padded_reduced.graph, padded_plan, padded_reduced.budget, 3);
    failures += !padded_ok;
    o.details.push_back(fmt("%s: t=%zu cost %zu/%zu %s; padded t'=%zu cost %zu/%zu %s", name,
                            inst.budget, plan.cost(), reduced.budget, ok ? "ok" : "FAILED",
                            padded.budget, padded_plan.cost(), padded_reduced.budget,
                            padded_ok ? "ok" : "FAILED"));
  }
  std::size_t systems = 0, padding_bad = 0;
  for (std::size_t u = 1; u <= 5; ++u) {
    std::vector<std::vector<std::size_t>> pairs;
    for (std::size_t a = 0; a < u; ++a)
      for (std::size_t b = a + 1; b < u; ++b) pairs.push_back({a, b});
    for (std::uint32_t mask = 0; mask < (1U << pairs.size()); ++mask) {
      HittingSetInstance inst;
      inst.universe = u;
      for (std::size_t i = 0; i < pairs.size(); ++i)
        if (mask >> i & 1U) inst.subsets.push_back(pairs[i]);
      ++systems;
      if (brute_force_min_hitting_set(pad_no_subset_hits_all(inst)) != brute_force_min_hitting_set(inst) + 3)
        ++padding_bad;
    }
  }
  o.pass = failures == 0 && padding_bad == 0;
  o.summary = fmt("%zu verified witnesses, padding property on %zu pair systems (%zu failures)",
                  witnesses, systems, padding_bad);
  return o;
}

Outcome reduction_structure() {
  auto t0 = Clock::now();
  auto r = reduce_hs_to_split(oracle::k4_pairs(3), 3);
  const auto& g = r.graph;
  const auto& L = r.layout;
  Outcome o;

  std::vector<Vertex> a, b;
  for (std::size_t i = 0; i < L.subsets; ++i) a.push_back(L.subset(i));
  for (std::size_t j = 0; j < L.guards; ++j) b.push_back(L.guard(j));
  bool shape = g.vertex_count() == 34 && r.budget == 9 && is_clique(g, a) && is_clique(g, b) &&
               b.size() == L.subsets + 3 + 1;
  for (Vertex s : a)
    for (Vertex x : b) shape = shape && g.adjacent(s, x);
  for (std::size_t u = 0; u < L.elements; ++u) {
    const Vertex e = L.element(u);
    shape = shape && g.degree(e) == 3 + 1 && g.degree(L.element_pendant(u, 0)) == 1;
  }
  for (std::size_t j = 0; j < L.guards; ++j)
    shape = shape && g.degree(L.guard_pendant(j, 0)) == 1 &&
            g.degree(L.guard(j)) == L.guards - 1 + L.subsets + 1;
  const bool centers_ok = find_centers(g, 3).centers == a;

  // Every bipartition of every subset vertex with guards on both sides, or
  // with all guards on one side but other subset vertices on both, leaves
  // every guard a claw center.
  std::atomic<std::size_t> splits{0}, case_i{0}, case_ii{0}, bad{0};
  auto role_count = [&](const Block& blk, std::string_view role) {
    return static_cast<std::size_t>(
        std::count_if(blk.begin(), blk.end(), [&](Vertex w) { return g.label(w) == role; }));
  };
  for (Vertex s : a) {
    auto candidates = detail::admissible_splits(g.neighbors(s), SplitMode::exclusive);
    oracle::parallel_for(candidates.size(), [&](std::size_t i) {
      const auto& [x, y] = candidates[i];
      ++splits;
      const bool guards_both = role_count(x, "guard") && role_count(y, "guard");
      const bool subsets_both = role_count(x, "subset") && role_count(y, "subset");
      if (!guards_both && !subsets_both) return;
      ++(guards_both ? case_i : case_ii);
      auto out = apply_single_split(g, s, x, y, SplitMode::exclusive);
      for (Vertex gd : b)
        if (!is_center(out.graph, gd, 3)) {
          ++bad;
          return;
        }
    });
  }
  o.pass = shape && centers_ok && bad == 0;
  o.summary = fmt("invariants %s, centers = subset vertices %s, %zu splits checked, %.1f s",
                  shape ? "hold" : "BROKEN", centers_ok ? "yes" : "no", splits.load(),
                  seconds_since(t0));
  o.details.push_back(fmt("guards on both sides: %zu splits; guards one side, subsets both: %zu splits; "
                          "guard left without a claw: %zu",
                          case_i.load(), case_ii.load(), bad.load()));
  return o;
}

Outcome plan_trace_equivalence() {
  auto t0 = Clock::now();
  auto graphs = all_graphs(6);
  std::atomic<std::size_t> traces{0}, plans{0}, bad{0};
  oracle::parallel_for(graphs.size(), [&](std::size_t gi) {
    const Graph& g = graphs[gi];
    // Trace -> plan, every exclusive trace of length <= 2.
    auto check_trace = [&](const SplitTrace& t) {
      ++traces;
      auto plan = trace_to_plan(g, t);
      if (plan.cost() != t.size() ||
          !isomorphic(apply_split_plan(g, plan).graph, apply_trace(g, t).graph))
        ++bad;
    };
    check_trace(SplitTrace{});
    for (Vertex u = 0; u < g.vertex_count(); ++u)
      for (auto& [x, y] : detail::admissible_splits(g.neighbors(u), SplitMode::exclusive)) {
        SplitStep first{u, x, y, SplitMode::exclusive};
        check_trace(SplitTrace{{first}});
        auto mid = apply_single_split(g, first);
        for (Vertex w = 0; w < mid.graph.vertex_count(); ++w)
          for (auto& [x2, y2] : detail::admissible_splits(mid.graph.neighbors(w), SplitMode::exclusive))
            check_trace(SplitTrace{{first, {w, x2, y2, SplitMode::exclusive}}});
      }
    // Plan -> trace, every plan of cost <= 2.
    std::vector<std::vector<Partition>> options(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      auto nb = g.neighbors(v);
      for (auto& p : oracle::set_partitions(std::vector<Vertex>(nb.begin(), nb.end())))
        if (p.size() >= 2 && p.size() <= 3) options[v].push_back(std::move(p));
    }
    auto check_plan = [&](const SplitPlan& plan) {
      ++plans;
      auto t = plan_to_trace(g, plan);
      if (t.size() != plan.cost() ||
          !isomorphic(apply_trace(g, t).graph, apply_split_plan(g, plan).graph))
        ++bad;
    };
    check_plan(SplitPlan{});
    for (Vertex v = 0; v < g.vertex_count(); ++v)
      for (const auto& p : options[v]) {
        SplitPlan one;
        one.set(v, p);
        check_plan(one);
        if (p.size() != 2) continue;
        for (Vertex w = v + 1; w < g.vertex_count(); ++w)
          for (const auto& q : options[w]) {
            if (q.size() != 2) continue;
            SplitPlan two = one;
            two.set(w, q);
            check_plan(two);
          }
      }
  });
  Outcome o;
  o.pass = bad == 0;
  o.summary = fmt("%zu graphs (n <= 6), %zu traces, %zu plans, %zu mismatches, %.1f s", graphs.size(),
                  traces.load(), plans.load(), bad.load(), seconds_since(t0));
  return o;
}

Outcome oracle_agreement() {
  auto t0 = Clock::now();
  auto graphs = all_graphs(7);
  std::atomic<std::size_t> bad{0}, yes{0};
  oracle::parallel_for(graphs.size(), [&](std::size_t i) {
    const Graph& g = graphs[i];
    auto b = solve_exact_branching(g, 2, 3);
    auto s = solve_exact_sequential(g, 2, 3, SplitMode::exclusive);
    if (b.verdict == Verdict::unknown || s.verdict == Verdict::unknown) {
      ++bad;
      return;
    }
    if (b.verdict != s.verdict) {
      ++bad;
      return;
    }
    if (b.verdict == Verdict::yes) {
      ++yes;
      if (b.plan->cost() != s.trace->size()) ++bad;
    }
  });
  const double secs = seconds_since(t0);
  Outcome o;
  o.pass = bad == 0 && secs < 600;
  o.summary = fmt("%zu graphs (n <= 7, k <= 2), %zu feasible, %zu disagreements, %.1f s", graphs.size(),
                  yes.load(), bad.load(), secs);
  return o;
}

}  // namespace

// Optional arguments select criteria by number; the default runs all of them.
int main(int argc, char** argv) {
  std::set<int> only;
  for (int i = 1; i < argc; ++i) only.insert(std::atoi(argv[i]));
  struct Criterion {
    const char* name;
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {"detection oracle equivalence", detection_equivalence},
      {"degree-4 optimality", degree4_optimality},
      {"fan with tail golden", fan_with_tail_golden},
      {"kernel size bound", kernel_size_bound_check},
      {"kernel answer preservation", kernel_answer_preservation},
      {"kernel idempotence and shrinkage", kernel_idempotence},
      {"reduction forward correctness", reduction_forward},
      {"reduction structural checks", reduction_structure},
      {"plan/trace equivalence", plan_trace_equivalence},
      {"oracle cross-agreement", oracle_agreement},
  };
  int failed = 0;
  int index = 1;
  int run = 0;
  for (const auto& c : criteria) {
    if (!only.empty() && !only.count(index)) {
      ++index;
      continue;
    }
    ++run;
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.summary = std::string("exception: ") + e.what();
    }
    std::printf("[%s] criterion %d: %s: %s\n", o.pass ? "PASS" : "FAIL", index, c.name, o.summary.c_str());
    for (const auto& d : o.details) std::printf("       %s\n", d.c_str());
    std::fflush(stdout);
    failed += !o.pass;
    ++index;
  }
  std::printf("%d of %d criteria passed\n", run - failed, run);
  return failed ? 1 : 0;
}
