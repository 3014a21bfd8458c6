#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "clawsplit/canonical.hpp"
#include "clawsplit/detection.hpp"
#include "clawsplit/graph.hpp"
#include "clawsplit/split.hpp"

namespace clawsplit {

enum class Verdict { yes, no, unknown };

inline std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::yes: return "YES";
    case Verdict::no: return "NO";
    case Verdict::unknown: return "UNKNOWN(budget)";
  }
  return "?";
}

class InvalidCertificate : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class InstanceTooLarge : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// ---------------------------------------------------------------------------
// Branch and bound over split plans (exclusive splits)
// ---------------------------------------------------------------------------

struct BranchingOptions {
  std::uint64_t node_budget = 5'000'000;
};

struct BranchingResult {
  Verdict verdict = Verdict::no;
  std::optional<SplitPlan> plan;  // minimum cost, set on YES
  std::uint64_t nodes = 0;
};

namespace detail {

class PlanBrancher {
 public:
  PlanBrancher(const Graph& g, std::size_t c, std::uint64_t budget)
      : g_(g), c_(c), budget_(budget) {}

  /// found / not found / nullopt when out of budget
  std::optional<bool> run(const SplitPlan& plan, std::size_t remaining) {
    if (++nodes_ > budget_) return std::nullopt;
    auto out = apply_split_plan(g_, plan);
    auto report = find_centers(out.graph, c_);
    if (report.centers.empty()) {
      solution_ = plan;
      return true;
    }
    if (report.centers.size() > remaining) return false;

    // Any claw must lose its center; branch on the lexicographically least one.
    const Vertex center = report.centers.front();
    const Vertex v = out.origin[center];
    Block block;
    for (Vertex w : out.graph.neighbors(center)) block.push_back(out.origin[w]);
    std::sort(block.begin(), block.end());

    Partition base;
    if (const Partition* p = plan.find(v)) {
      for (const auto& b : *p)
        if (b != block) base.push_back(b);
    }
    const std::size_t d = block.size();
    const std::uint64_t masks = std::uint64_t{1} << (d - 1);
    for (std::uint64_t mask = 0; mask + 1 < masks; ++mask) {
      Block x{block[0]}, y;
      for (std::size_t i = 1; i < d; ++i) ((mask >> (i - 1)) & 1U ? x : y).push_back(block[i]);
      Partition next = base;
      next.push_back(std::move(x));
      next.push_back(std::move(y));
      SplitPlan child = plan;
      child.set(v, std::move(next));
      auto r = run(child, remaining - 1);
      if (!r || *r) return r;
    }
    return false;
  }

  [[nodiscard]] std::uint64_t nodes() const { return nodes_; }
  [[nodiscard]] const SplitPlan& solution() const { return solution_; }

 private:
  const Graph& g_;
  std::size_t c_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  SplitPlan solution_;
};

}  // namespace detail

/**
 * Minimum-cost exclusive solution with at most k splits, by iterative
 * deepening from the center-count lower bound. Each node branches on every
 * bipartition of the current claw center's incident-edge block.
 */
inline BranchingResult solve_exact_branching(const Graph& g, std::size_t k, std::size_t c,
                                             const BranchingOptions& opts = {}) {
  detail::require_c(c);
  BranchingResult result;
  const std::size_t lower = find_centers(g, c).centers.size();
  if (lower > k) return result;
  std::uint64_t used = 0;
  for (std::size_t budget = lower; budget <= k; ++budget) {
    detail::PlanBrancher brancher(g, c, opts.node_budget - used);
    auto r = brancher.run(SplitPlan{}, budget);
    used += brancher.nodes();
    result.nodes = used;
    if (!r) {
      result.verdict = Verdict::unknown;
      return result;
    }
    if (*r) {
      result.verdict = Verdict::yes;
      result.plan = brancher.solution();
      return result;
    }
  }
  return result;
}

// ---------------------------------------------------------------------------
// Breadth-first search over single splits
// ---------------------------------------------------------------------------

struct SequentialOptions {
  /// Tiny-scale guard: rejects instances with n + k above this.
  std::size_t max_total_vertices = 10;
  std::uint64_t state_budget = 20'000'000;
};

struct SequentialResult {
  Verdict verdict = Verdict::no;
  std::optional<SplitTrace> trace;  // shortest, set on YES
  std::uint64_t states = 0;
};

namespace detail {

using StateKey = std::vector<CanonicalForm>;

struct StateKeyHash {
  std::size_t operator()(const StateKey& key) const noexcept {
    std::size_t h = key.size();
    CanonicalFormHash inner;
    for (const auto& f : key) h ^= inner(f) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

struct StateSummary {
  std::size_t centers = 0;
  StateKey key;                  // canonical forms of components with a center
  std::vector<char> splittable;  // vertex lies in such a component
  std::vector<char> is_center;
};

/// Components without a center never need splits and are left out of the key.
inline StateSummary summarize(const Graph& g, std::size_t c) {
  StateSummary s;
  auto centers = find_centers(g, c).centers;
  s.centers = centers.size();
  s.splittable.assign(g.vertex_count(), 0);
  s.is_center.assign(g.vertex_count(), 0);
  if (centers.empty()) return s;
  for (Vertex v : centers) s.is_center[v] = 1;
  for (const auto& comp : connected_components(g)) {
    if (std::none_of(comp.begin(), comp.end(), [&](Vertex v) { return s.is_center[v]; }))
      continue;
    for (Vertex v : comp) s.splittable[v] = 1;
    s.key.push_back(canonical_form(induced_subgraph(g, comp).graph));
  }
  std::sort(s.key.begin(), s.key.end());
  return s;
}

/// Every admissible (x, y) for splitting a vertex with neighbors `nbrs`,
/// unordered: (x, y) and (y, x) are listed once.
inline std::vector<std::pair<Block, Block>> admissible_splits(std::span<const Vertex> nbrs,
                                                              SplitMode mode) {
  std::vector<std::pair<Block, Block>> out;
  const std::size_t d = nbrs.size();
  if (d == 0) return out;
  if (mode == SplitMode::exclusive) {
    if (d < 2) return out;
    const std::uint64_t masks = std::uint64_t{1} << (d - 1);
    for (std::uint64_t mask = 0; mask + 1 < masks; ++mask) {
      Block x{nbrs[0]}, y;
      for (std::size_t i = 1; i < d; ++i) ((mask >> (i - 1)) & 1U ? x : y).push_back(nbrs[i]);
      out.emplace_back(std::move(x), std::move(y));
    }
    return out;
  }
  // digit per neighbor: 0 -> x only, 1 -> y only, 2 -> both
  std::vector<int> digit(d, 0);
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < d; ++i) total *= 3;
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t rest = code;
    for (std::size_t i = 0; i < d; ++i) {
      digit[i] = static_cast<int>(rest % 3);
      rest /= 3;
    }
    // canonical orientation: the first neighbor not in both goes to x
    auto first_single = std::find_if(digit.begin(), digit.end(), [](int t) { return t != 2; });
    if (first_single != digit.end() && *first_single == 1) continue;
    Block x, y;
    for (std::size_t i = 0; i < d; ++i) {
      if (digit[i] != 1) x.push_back(nbrs[i]);
      if (digit[i] != 0) y.push_back(nbrs[i]);
    }
    if (x.empty() || y.empty()) continue;
    out.emplace_back(std::move(x), std::move(y));
  }
  return out;
}

}  // namespace detail

/**
 * Shortest sequence of at most k single splits reaching a K_{1,c}-free
 * graph. Exclusive mode uses disjoint blocks only; inclusive mode allows
 * overlapping blocks (and therefore also disjoint ones).
 *
 * States are deduplicated by the canonical forms of their components that
 * still contain a center; a state is dropped when its center count exceeds
 * the remaining budget. A split removes at most the claws centered at the
 * split vertex, so a state with exactly as many centers as remaining splits
 * only expands its centers.
 */
inline SequentialResult solve_exact_sequential(const Graph& g, std::size_t k, std::size_t c,
                                               SplitMode mode,
                                               const SequentialOptions& opts = {}) {
  detail::require_c(c);
  if (g.vertex_count() + k > opts.max_total_vertices)
    throw InstanceTooLarge("n + k = " + std::to_string(g.vertex_count() + k) +
                           " exceeds the search limit " +
                           std::to_string(opts.max_total_vertices));
  struct Node {
    Graph graph;
    std::size_t parent;
    SplitStep step;
  };
  SequentialResult result;
  std::vector<Node> nodes;
  auto trace_to = [&](std::size_t idx) {
    SplitTrace t;
    while (idx != 0) {
      t.steps.push_back(nodes[idx].step);
      idx = nodes[idx].parent;
    }
    std::reverse(t.steps.begin(), t.steps.end());
    return t;
  };

  auto root = detail::summarize(g, c);
  if (root.centers == 0) {
    result.verdict = Verdict::yes;
    result.trace = SplitTrace{};
    return result;
  }
  if (root.centers > k) return result;

  std::unordered_set<detail::StateKey, detail::StateKeyHash> visited{root.key};
  nodes.push_back({g, 0, {}});
  std::vector<std::pair<std::size_t, detail::StateSummary>> frontier;
  frontier.emplace_back(0, std::move(root));

  for (std::size_t depth = 0; depth < k; ++depth) {
    std::vector<std::pair<std::size_t, detail::StateSummary>> next;
    for (const auto& [idx, summary_here] : frontier) {
      const Graph current = nodes[idx].graph;
      const bool tight = summary_here.centers == k - depth;
      for (Vertex u = 0; u < current.vertex_count(); ++u) {
        if (!summary_here.splittable[u] || (tight && !summary_here.is_center[u])) continue;
        for (auto& [x, y] : detail::admissible_splits(current.neighbors(u), mode)) {
          SplitStep step{u, x, y, std::any_of(x.begin(), x.end(), [&](Vertex w) {
                           return std::binary_search(y.begin(), y.end(), w);
                         }) ? SplitMode::inclusive : SplitMode::exclusive};
          auto child = apply_single_split(current, step);
          if (++result.states > opts.state_budget) {
            result.verdict = Verdict::unknown;
            return result;
          }
          auto summary = detail::summarize(child.graph, c);
          if (summary.centers == 0) {
            nodes.push_back({std::move(child.graph), idx, std::move(step)});
            result.verdict = Verdict::yes;
            result.trace = trace_to(nodes.size() - 1);
            return result;
          }
          if (summary.centers > k - depth - 1) continue;
          if (!visited.insert(summary.key).second) continue;
          nodes.push_back({std::move(child.graph), idx, std::move(step)});
          next.emplace_back(nodes.size() - 1, std::move(summary));
        }
      }
    }
    frontier = std::move(next);
    if (frontier.empty()) break;
  }
  return result;
}

/// Smallest k <= max_k solvable by the sequential search, if any.
inline std::optional<std::size_t> sequential_optimum(const Graph& g, std::size_t c,
                                                     SplitMode mode, std::size_t max_k,
                                                     const SequentialOptions& opts = {}) {
  auto r = solve_exact_sequential(g, max_k, c, mode, opts);
  if (r.verdict == Verdict::unknown)
    throw std::runtime_error("sequential search exceeded its state budget");
  if (r.verdict == Verdict::no) return std::nullopt;
  return r.trace->size();
}

// ---------------------------------------------------------------------------
// Certificate checking
// ---------------------------------------------------------------------------

/// Throws InvalidCertificate when the plan does not fit g.
inline bool verify_solution(const Graph& g, const SplitPlan& plan, std::size_t k,
                            std::size_t c) {
  SplitOutcome out;
  try {
    out = apply_split_plan(g, plan);
  } catch (const InvalidSplit& e) {
    throw InvalidCertificate(e.what());
  }
  return plan.cost() <= k && is_k1c_free(out.graph, c);
}

/// Exclusive mode rejects (returns false for) traces with overlapping steps.
inline bool verify_solution(const Graph& g, const SplitTrace& trace, std::size_t k,
                            std::size_t c, SplitMode mode) {
  SplitOutcome out;
  try {
    out = apply_trace(g, trace);
  } catch (const InvalidSplit& e) {
    throw InvalidCertificate(e.what());
  }
  if (mode == SplitMode::exclusive &&
      std::any_of(trace.steps.begin(), trace.steps.end(),
                  [](const SplitStep& s) { return s.mode != SplitMode::exclusive; }))
    return false;
  return trace.size() <= k && is_k1c_free(out.graph, c);
}

}  // namespace clawsplit
