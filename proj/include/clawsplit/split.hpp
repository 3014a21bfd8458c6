#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "clawsplit/graph.hpp"

namespace clawsplit {

enum class SplitMode { exclusive, inclusive };

inline std::string_view to_string(SplitMode mode) {
  return mode == SplitMode::exclusive ? "exclusive" : "inclusive";
}

/// Sorted set of neighbor ids; identifies the incident edges routed to one copy.
using Block = std::vector<Vertex>;
using Partition = std::vector<Block>;

class InvalidSplit : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/**
 * Batched exclusive splits: vertex -> partition of its incident edges.
 * Vertices without an entry keep their single block.
 *
 * Partitions are normalized on insertion (members ascending, blocks ordered
 * by smallest member).
 */
class SplitPlan {
 public:
  void set(Vertex v, Partition partition) {
    for (auto& block : partition) std::sort(block.begin(), block.end());
    std::sort(partition.begin(), partition.end());
    parts_[v] = std::move(partition);
  }

  void erase(Vertex v) { parts_.erase(v); }

  [[nodiscard]] const Partition* find(Vertex v) const {
    auto it = parts_.find(v);
    return it == parts_.end() ? nullptr : &it->second;
  }

  [[nodiscard]] const std::map<Vertex, Partition>& parts() const { return parts_; }
  [[nodiscard]] bool empty() const { return parts_.empty(); }

  /// Sum over split vertices of (blocks - 1).
  [[nodiscard]] std::size_t cost() const {
    std::size_t total = 0;
    for (const auto& [v, p] : parts_)
      if (!p.empty()) total += p.size() - 1;
    return total;
  }

  bool operator==(const SplitPlan&) const = default;

 private:
  std::map<Vertex, Partition> parts_;
};

inline std::size_t plan_cost(const SplitPlan& plan) { return plan.cost(); }

struct SplitStep {
  Vertex vertex;
  Block x;
  Block y;
  SplitMode mode = SplitMode::exclusive;
  bool operator==(const SplitStep&) const = default;
};

/// Sequence of single splits; each step addresses the graph produced so far.
struct SplitTrace {
  std::vector<SplitStep> steps;
  [[nodiscard]] std::size_t size() const { return steps.size(); }
  bool operator==(const SplitTrace&) const = default;
};

/// Result of splitting: new graph plus, for each new vertex, the vertex of the
/// input graph it descends from.
struct SplitOutcome {
  Graph graph;
  std::vector<Vertex> origin;
};

inline void validate_plan(const Graph& g, const SplitPlan& plan) {
  for (const auto& [v, partition] : plan.parts()) {
    if (v >= g.vertex_count())
      throw InvalidSplit("plan vertex " + std::to_string(v) + " out of range");
    if (partition.empty())
      throw InvalidSplit("vertex " + std::to_string(v) + " has no blocks");
    std::vector<Vertex> all;
    for (const auto& block : partition) {
      if (block.empty())
        throw InvalidSplit("empty block at vertex " + std::to_string(v));
      all.insert(all.end(), block.begin(), block.end());
    }
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end())
      throw InvalidSplit("overlapping blocks at vertex " + std::to_string(v));
    auto nbrs = g.neighbors(v);
    if (!std::equal(all.begin(), all.end(), nbrs.begin(), nbrs.end()))
      throw InvalidSplit("blocks at vertex " + std::to_string(v) +
                         " do not partition its neighborhood");
  }
}

/**
 * Applies a plan. Block 0 of a split vertex keeps the vertex id; further
 * blocks get fresh ids n, n+1, ... in ascending (vertex, block) order.
 * Labels are inherited by every copy.
 */
inline SplitOutcome apply_split_plan(const Graph& g, const SplitPlan& plan) {
  validate_plan(g, plan);
  const std::size_t n = g.vertex_count();
  // first_extra[v]: id of block 1 of v (blocks >= 1 are consecutive).
  std::vector<Vertex> first_extra(n, kTombstone);
  SplitOutcome out;
  out.origin.resize(n);
  for (Vertex v = 0; v < n; ++v) out.origin[v] = v;
  for (const auto& [v, partition] : plan.parts()) {
    if (partition.size() < 2) continue;
    first_extra[v] = static_cast<Vertex>(out.origin.size());
    for (std::size_t b = 1; b < partition.size(); ++b) out.origin.push_back(v);
  }
  auto copy_toward = [&](Vertex v, Vertex toward) -> Vertex {
    const Partition* p = plan.find(v);
    if (!p || p->size() < 2) return v;
    for (std::size_t b = 0; b < p->size(); ++b)
      if (std::binary_search((*p)[b].begin(), (*p)[b].end(), toward))
        return b == 0 ? v : static_cast<Vertex>(first_extra[v] + b - 1);
    return kTombstone;  // unreachable for validated plans
  };
  std::vector<std::vector<Vertex>> adj(out.origin.size());
  for (const auto& e : g.edges()) {
    Vertex a = copy_toward(e.u, e.v);
    Vertex b = copy_toward(e.v, e.u);
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<std::string> labels;
  if (g.has_labels())
    for (Vertex origin : out.origin) labels.emplace_back(g.label(origin));
  out.graph = Graph::from_adjacency(std::move(adj), std::move(labels));
  return out;
}

/**
 * Splits v into v (neighborhood x) and a new last vertex (neighborhood y).
 * Exclusive mode requires x, y to partition N(v); inclusive mode only
 * requires x ∪ y = N(v).
 */
inline SplitOutcome apply_single_split(const Graph& g, Vertex v, Block x, Block y,
                                       SplitMode mode) {
  if (v >= g.vertex_count())
    throw InvalidSplit("split vertex " + std::to_string(v) + " out of range");
  if (x.empty() || y.empty()) throw InvalidSplit("empty block");
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  if (std::adjacent_find(x.begin(), x.end()) != x.end() ||
      std::adjacent_find(y.begin(), y.end()) != y.end())
    throw InvalidSplit("repeated neighbor in block");
  Block both;
  std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(both));
  if (mode == SplitMode::exclusive && !both.empty())
    throw InvalidSplit("exclusive split with overlapping blocks");
  Block all;
  std::set_union(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(all));
  auto nbrs = g.neighbors(v);
  if (!std::equal(all.begin(), all.end(), nbrs.begin(), nbrs.end()))
    throw InvalidSplit("blocks do not cover N(" + std::to_string(v) + ") exactly");

  const auto n = static_cast<Vertex>(g.vertex_count());
  std::vector<std::vector<Vertex>> adj = g.adjacency();
  adj.emplace_back();
  for (Vertex w : nbrs) {
    auto& list = adj[w];
    const bool in_x = std::binary_search(x.begin(), x.end(), w);
    const bool in_y = std::binary_search(y.begin(), y.end(), w);
    if (!in_x) list.erase(std::lower_bound(list.begin(), list.end(), v));
    if (in_y) list.push_back(n);  // n is the largest id, order stays sorted
  }
  adj[v] = std::move(x);
  adj[n] = std::move(y);

  SplitOutcome out;
  out.origin.resize(n + 1);
  for (Vertex u = 0; u < n; ++u) out.origin[u] = u;
  out.origin[n] = v;
  std::vector<std::string> labels = g.labels();
  if (!labels.empty()) labels.push_back(labels[v]);
  out.graph = Graph::from_adjacency(std::move(adj), std::move(labels));
  return out;
}

inline SplitOutcome apply_single_split(const Graph& g, const SplitStep& step) {
  return apply_single_split(g, step.vertex, step.x, step.y, step.mode);
}

/// Applies all steps in order; origin maps final vertices to input vertices.
inline SplitOutcome apply_trace(const Graph& g, const SplitTrace& trace) {
  SplitOutcome cur{g, {}};
  cur.origin.resize(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) cur.origin[v] = v;
  for (const auto& step : trace.steps) {
    auto next = apply_single_split(cur.graph, step);
    for (auto& o : next.origin) o = cur.origin[o];
    cur = std::move(next);
  }
  return cur;
}

/**
 * Recovers the plan realized by an exclusively split graph: the partition of
 * each original vertex is given by the (original ids of the) neighborhoods of
 * its copies. `origin` maps split-graph vertices to ids of `original`.
 */
inline SplitPlan plan_from_split_graph(const Graph& original, const Graph& split,
                                       std::span<const Vertex> origin) {
  std::vector<Partition> parts(original.vertex_count());
  for (Vertex c = 0; c < split.vertex_count(); ++c) {
    Block block;
    for (Vertex w : split.neighbors(c)) block.push_back(origin[w]);
    if (!block.empty()) parts[origin[c]].push_back(std::move(block));
  }
  SplitPlan plan;
  for (Vertex v = 0; v < original.vertex_count(); ++v)
    if (parts[v].size() >= 2) plan.set(v, std::move(parts[v]));
  return plan;
}

/// Plan with the same final graph as an exclusive trace; cost = trace length.
inline SplitPlan trace_to_plan(const Graph& g, const SplitTrace& trace) {
  for (const auto& s : trace.steps)
    if (s.mode != SplitMode::exclusive)
      throw InvalidSplit("only exclusive traces have a plan");
  auto out = apply_trace(g, trace);
  return plan_from_split_graph(g, out.graph, out.origin);
}

/// Plan on g equivalent to applying `first`, then `second` on the result.
inline SplitPlan compose_plans(const Graph& g, const SplitPlan& first,
                               const SplitPlan& second) {
  auto mid = apply_split_plan(g, first);
  auto last = apply_split_plan(mid.graph, second);
  for (auto& o : last.origin) o = mid.origin[o];
  return plan_from_split_graph(g, last.graph, last.origin);
}

/// Sequential realization of a plan: each split vertex peels off its blocks
/// from the last one down, so the copy keeping the vertex id ends with block 0.
inline SplitTrace plan_to_trace(const Graph& g, const SplitPlan& plan) {
  validate_plan(g, plan);
  SplitTrace trace;
  // Current id of the copy of `v` holding the edge toward `w`.
  std::map<std::pair<Vertex, Vertex>, Vertex> moved;
  auto current = [&](Vertex v, Vertex toward) {
    auto it = moved.find({v, toward});
    return it == moved.end() ? v : it->second;
  };
  auto next_id = static_cast<Vertex>(g.vertex_count());
  for (const auto& [v, partition] : plan.parts()) {
    for (std::size_t b = partition.size(); b-- > 1;) {
      SplitStep step{v, {}, {}, SplitMode::exclusive};
      for (std::size_t r = 0; r < b; ++r)
        for (Vertex w : partition[r]) step.x.push_back(current(w, v));
      for (Vertex w : partition[b]) step.y.push_back(current(w, v));
      std::sort(step.x.begin(), step.x.end());
      std::sort(step.y.begin(), step.y.end());
      for (Vertex w : partition[b]) moved[{v, w}] = next_id;
      ++next_id;
      trace.steps.push_back(std::move(step));
    }
  }
  return trace;
}

// ---------------------------------------------------------------------------
// Text formats
// ---------------------------------------------------------------------------

namespace detail {

inline std::string join(const Block& block) {
  std::string out;
  for (std::size_t i = 0; i < block.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(block[i]);
  }
  return out;
}

inline Block parse_block(std::string_view s, std::size_t lineno) {
  Block block;
  s = trim(s);
  while (true) {
    auto comma = s.find(',');
    auto item = trim(s.substr(0, comma));
    auto nums = parse_numbers(item);
    if (!nums || nums->size() != 1)
      throw ParseError(ParseErrorKind::malformed_line, lineno,
                       "bad block member '" + std::string(item) + "'");
    block.push_back(static_cast<Vertex>((*nums)[0]));
    if (comma == std::string_view::npos) break;
    s = s.substr(comma + 1);
  }
  return block;
}

}  // namespace detail

/// One line per split vertex: "v: a,b|c|d,e".
inline std::string to_plan_text(const SplitPlan& plan) {
  std::string out;
  for (const auto& [v, partition] : plan.parts()) {
    out += std::to_string(v) + ": ";
    for (std::size_t b = 0; b < partition.size(); ++b) {
      if (b) out += '|';
      out += detail::join(partition[b]);
    }
    out += '\n';
  }
  return out;
}

inline SplitPlan parse_plan_text(std::string_view text) {
  SplitPlan plan;
  const auto lines = detail::split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (detail::skippable(lines[i])) continue;
    auto line = detail::trim(lines[i]);
    auto colon = line.find(':');
    auto head = colon == std::string_view::npos ? std::nullopt
                                                : detail::parse_numbers(line.substr(0, colon));
    if (!head || head->size() != 1)
      throw ParseError(ParseErrorKind::malformed_line, i + 1,
                       "expected 'v: blocks', got '" + std::string(lines[i]) + "'");
    const auto v = static_cast<Vertex>((*head)[0]);
    if (plan.find(v))
      throw ParseError(ParseErrorKind::duplicate_edge, i + 1,
                       "vertex " + std::to_string(v) + " listed twice");
    Partition partition;
    std::string_view rest = line.substr(colon + 1);
    while (true) {
      auto bar = rest.find('|');
      partition.push_back(detail::parse_block(rest.substr(0, bar), i + 1));
      if (bar == std::string_view::npos) break;
      rest = rest.substr(bar + 1);
    }
    plan.set(v, std::move(partition));
  }
  return plan;
}

/// One line per step: "v exclusive: a,b | c,d".
inline std::string to_trace_text(const SplitTrace& trace) {
  std::string out;
  for (const auto& s : trace.steps)
    out += std::to_string(s.vertex) + " " + std::string(to_string(s.mode)) + ": " +
           detail::join(s.x) + " | " + detail::join(s.y) + "\n";
  return out;
}

inline SplitTrace parse_trace_text(std::string_view text) {
  SplitTrace trace;
  const auto lines = detail::split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (detail::skippable(lines[i])) continue;
    auto line = detail::trim(lines[i]);
    auto colon = line.find(':');
    auto bar = line.find('|');
    if (colon == std::string_view::npos || bar == std::string_view::npos || bar < colon)
      throw ParseError(ParseErrorKind::malformed_line, i + 1,
                       "expected 'v mode: x | y', got '" + std::string(lines[i]) + "'");
    auto head = detail::trim(line.substr(0, colon));
    auto space = head.find(' ');
    auto nums = detail::parse_numbers(head.substr(0, space));
    auto mode_word = space == std::string_view::npos ? std::string_view{}
                                                     : detail::trim(head.substr(space));
    if (!nums || nums->size() != 1 || (mode_word != "exclusive" && mode_word != "inclusive"))
      throw ParseError(ParseErrorKind::malformed_line, i + 1,
                       "bad step header '" + std::string(head) + "'");
    SplitStep step;
    step.vertex = static_cast<Vertex>((*nums)[0]);
    step.mode = mode_word == "exclusive" ? SplitMode::exclusive : SplitMode::inclusive;
    step.x = detail::parse_block(line.substr(colon + 1, bar - colon - 1), i + 1);
    step.y = detail::parse_block(line.substr(bar + 1), i + 1);
    trace.steps.push_back(std::move(step));
  }
  return trace;
}

}  // namespace clawsplit
