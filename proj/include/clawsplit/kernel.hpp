#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "clawsplit/detection.hpp"
#include "clawsplit/graph.hpp"
#include "clawsplit/matching.hpp"

namespace clawsplit {

enum class Rule2Mode { paper_strict, verified };

inline std::string_view to_string(Rule2Mode m) {
  return m == Rule2Mode::paper_strict ? "paper-strict" : "verified";
}

enum class KernelVerdict { reduced, no_instance };

enum class RuleId { rule0, rule1, rule2, rule3 };

inline std::string_view to_string(RuleId r) {
  static constexpr std::string_view names[] = {"rule0", "rule1", "rule2", "rule3"};
  return names[static_cast<int>(r)];
}

/// (c-1)k^3 + (c-1)k^2 + k
inline std::uint64_t kernel_size_bound(std::uint64_t k, std::uint64_t c) {
  return (c - 1) * k * k * k + (c - 1) * k * k + k;
}

/// Largest number of neighborhood cliques (or independent neighbors) a
/// center may have: (c-1)(k+1).
inline std::size_t partition_bound(std::size_t k, std::size_t c) { return (c - 1) * (k + 1); }

/// One applied rule; vertex ids are those of the original input graph.
struct RuleFiring {
  RuleId rule = RuleId::rule0;
  std::optional<Vertex> center;
  std::vector<Vertex> clique;
  std::vector<Vertex> deleted;
  std::size_t observed = 0;  // rule0: centers, rule2: t or independent-set size
  std::size_t bound = 0;
  std::size_t matched = 0;
  std::size_t vertices_before = 0;
  std::size_t vertices_after = 0;
  bool no_instance = false;
  bool verified = false;  // rule2 decided by an independent-set witness
};

namespace detail {
inline std::string id_list(const std::vector<Vertex>& ids) {
  std::string s;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(ids[i]);
  }
  return s.empty() ? "-" : s;
}
}  // namespace detail

/// Stable one-line rendering used in trace logs.
inline std::string to_log_line(const RuleFiring& f) {
  const std::string no = " → NO";
  switch (f.rule) {
    case RuleId::rule0:
      return "rule0 centers=" + std::to_string(f.observed) + " bound=" + std::to_string(f.bound) + no;
    case RuleId::rule1:
      return "rule1 deleted=" + detail::id_list(f.deleted);
    case RuleId::rule2:
      return "rule2 v=" + std::to_string(*f.center) +
             (f.verified ? " independent=" : " t=") + std::to_string(f.observed) +
             " bound=" + std::to_string(f.bound) + no;
    case RuleId::rule3:
      return "rule3 v=" + std::to_string(*f.center) + " clique=" + detail::id_list(f.clique) +
             " matched=" + std::to_string(f.matched) + " deleted=" + detail::id_list(f.deleted);
  }
  return {};
}

struct KernelOutcome {
  KernelVerdict verdict = KernelVerdict::reduced;
  Graph graph;  // meaningful when reduced
  std::size_t k = 0;
  std::size_t c = 3;
  std::vector<RuleFiring> fired;
  std::vector<Vertex> provenance;  // kernel id -> original id
  std::vector<std::string> notes;  // mode downgrades and uncertified passes
  bool size_bound_certified = true;
};

// ---------------------------------------------------------------------------
// Individual rules (ids relative to the graph passed in)
// ---------------------------------------------------------------------------

struct Rule0Result {
  bool no_instance;
  std::size_t centers;
  std::size_t bound;
};

/// Every center needs a split of its own, so more than k centers is a NO.
inline Rule0Result rule0_center_budget(const Graph& g, std::size_t k, std::size_t c) {
  const std::size_t centers = find_centers(g, c).centers.size();
  return {centers > k, centers, k};
}

struct DeletionResult {
  Relabeled reduced;
  std::vector<Vertex> deleted;  // ids of the input graph, ascending
  std::size_t matched = 0;      // rule3 only
};

/// Deletes, in one batch, every vertex with no center in its closed neighborhood.
inline DeletionResult rule1_irrelevant_vertices(const Graph& g, std::span<const Vertex> centers) {
  std::vector<char> near(g.vertex_count(), 0);
  for (Vertex v : centers) {
    near[v] = 1;
    for (Vertex w : g.neighbors(v)) near[w] = 1;
  }
  DeletionResult r;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (!near[v]) r.deleted.push_back(v);
  r.reduced = delete_vertices(g, r.deleted);
  return r;
}

struct Rule2Result {
  bool no_instance = false;
  std::size_t t = 0;      // greedy clique count
  std::size_t bound = 0;  // (c-1)(k+1)
  bool downgraded = false;
  std::vector<Vertex> independent;  // verified NO witness
};

/**
 * `paper_strict`: NO iff the greedy clique partition of N(v) has more than
 * (c-1)(k+1) cliques. `verified`: NO iff N(v) holds (c-1)(k+1)+1 pairwise
 * non-adjacent vertices; if that search runs out of work the paper-strict
 * test decides and `downgraded` is set.
 */
inline Rule2Result rule2_partition_bound(const Graph& g, Vertex v, std::size_t k, std::size_t c,
                                         Rule2Mode mode,
                                         std::uint64_t work_limit = kDefaultIndependentSetWork) {
  Rule2Result r;
  r.t = greedy_clique_partition(g, v).size();
  r.bound = partition_bound(k, c);
  if (mode == Rule2Mode::verified) {
    auto is = neighborhood_has_independent_set(g, v, r.bound + 1, work_limit);
    if (is.status != SearchStatus::budget_exceeded) {
      r.no_instance = is.status == SearchStatus::found;
      r.independent = std::move(is.witness);
      return r;
    }
    r.downgraded = true;
  }
  r.no_instance = r.t > r.bound;
  return r;
}

/**
 * Crown rule: H is a clique of non-centers with |H| > k. Keeps the vertices
 * of H covered by a maximum matching between H and its center neighbors and
 * deletes the rest.
 */
inline DeletionResult rule3_crown(const Graph& g, std::vector<Vertex> clique,
                                  std::span<const Vertex> centers, std::size_t k) {
  std::sort(clique.begin(), clique.end());
  if (!is_clique(g, clique)) throw std::invalid_argument("crown rule: H is not a clique");
  std::vector<char> is_center(g.vertex_count(), 0);
  for (Vertex v : centers) is_center[v] = 1;
  for (Vertex h : clique)
    if (is_center[h])
      throw std::invalid_argument("crown rule: H contains center " + std::to_string(h));
  if (clique.size() <= k)
    throw std::invalid_argument("crown rule: |H| must exceed k");

  std::vector<Vertex> right;
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex h : clique)
    for (Vertex w : g.neighbors(h))
      if (is_center[w]) {
        edges.emplace_back(h, w);
        right.push_back(w);
      }
  std::sort(right.begin(), right.end());
  right.erase(std::unique(right.begin(), right.end()), right.end());
  auto matching = max_bipartite_matching<Vertex, Vertex>(clique, right, edges);

  DeletionResult r;
  r.matched = matching.size();
  std::vector<char> keep(g.vertex_count(), 0);
  for (const auto& [h, w] : matching) keep[h] = 1;
  for (Vertex h : clique)
    if (!keep[h]) r.deleted.push_back(h);
  r.reduced = delete_vertices(g, r.deleted);
  return r;
}

// ---------------------------------------------------------------------------
// Fixed-point driver
// ---------------------------------------------------------------------------

struct KernelOptions {
  std::uint64_t independent_set_work = kDefaultIndependentSetWork;
};

/**
 * Applies the center budget, irrelevant-vertex, partition-bound and crown
 * rules until none fires. Centers are recomputed after every deletion. k is
 * never changed.
 */
inline KernelOutcome kernelize(const Graph& g, std::size_t k, std::size_t c, Rule2Mode mode,
                               const KernelOptions& opts = {}) {
  detail::require_c(c);
  KernelOutcome out;
  out.k = k;
  out.c = c;
  Graph cur = g;
  std::vector<Vertex> prov(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) prov[v] = v;
  auto to_original = [&](std::vector<Vertex> ids) {
    for (auto& id : ids) id = prov[id];
    std::sort(ids.begin(), ids.end());
    return ids;
  };
  auto adopt = [&](DeletionResult& d) {
    std::vector<Vertex> next(d.reduced.new_to_old.size());
    for (std::size_t i = 0; i < next.size(); ++i) next[i] = prov[d.reduced.new_to_old[i]];
    prov = std::move(next);
    cur = std::move(d.reduced.graph);
  };
  auto finish_no = [&](RuleFiring f) {
    f.no_instance = true;
    f.vertices_before = f.vertices_after = cur.vertex_count();
    out.fired.push_back(std::move(f));
    out.verdict = KernelVerdict::no_instance;
    out.graph = Graph{};
    out.provenance.clear();
    return out;
  };

  while (true) {
    const auto centers = find_centers(cur, c).centers;

    if (auto r0 = rule0_center_budget(cur, k, c); r0.no_instance) {
      RuleFiring f;
      f.rule = RuleId::rule0;
      f.observed = r0.centers;
      f.bound = r0.bound;
      return finish_no(std::move(f));
    }

    if (auto r1 = rule1_irrelevant_vertices(cur, centers); !r1.deleted.empty()) {
      RuleFiring f;
      f.rule = RuleId::rule1;
      f.deleted = to_original(r1.deleted);
      f.vertices_before = cur.vertex_count();
      adopt(r1);
      f.vertices_after = cur.vertex_count();
      out.fired.push_back(std::move(f));
      continue;
    }

    bool changed = false;
    std::vector<char> is_center(cur.vertex_count(), 0);
    for (Vertex v : centers) is_center[v] = 1;
    for (Vertex v : centers) {
      auto r2 = rule2_partition_bound(cur, v, k, c, mode, opts.independent_set_work);
      if (r2.downgraded)
        out.notes.push_back("rule2 v=" + std::to_string(prov[v]) +
                            " verified search over budget, decided paper-strict");
      if (r2.no_instance) {
        RuleFiring f;
        f.rule = RuleId::rule2;
        f.center = prov[v];
        f.verified = mode == Rule2Mode::verified && !r2.downgraded;
        f.observed = f.verified ? r2.independent.size() : r2.t;
        f.bound = r2.bound;
        return finish_no(std::move(f));
      }
      if (r2.t > r2.bound) {
        out.size_bound_certified = false;
        out.notes.push_back("rule2 v=" + std::to_string(prov[v]) + " t=" + std::to_string(r2.t) +
                            " bound=" + std::to_string(r2.bound) +
                            " kept: no independent set above bound");
      }

      for (const auto& block : greedy_clique_partition(cur, v)) {
        std::vector<Vertex> h;
        for (Vertex u : block)
          if (!is_center[u]) h.push_back(u);
        if (h.size() <= k) continue;
        auto r3 = rule3_crown(cur, h, centers, k);
        RuleFiring f;
        f.rule = RuleId::rule3;
        f.center = prov[v];
        f.clique = to_original(h);
        f.deleted = to_original(r3.deleted);
        f.matched = r3.matched;
        f.vertices_before = cur.vertex_count();
        adopt(r3);
        f.vertices_after = cur.vertex_count();
        out.fired.push_back(std::move(f));
        changed = true;
        break;
      }
      if (changed) break;
    }
    if (!changed) break;
  }

  out.verdict = KernelVerdict::reduced;
  out.graph = std::move(cur);
  out.provenance = std::move(prov);
  return out;
}

inline std::string kernel_trace_text(const KernelOutcome& o) {
  std::string s;
  for (const auto& f : o.fired) s += to_log_line(f) + "\n";
  for (const auto& n : o.notes) s += "# " + n + "\n";
  return s;
}

}  // namespace clawsplit
