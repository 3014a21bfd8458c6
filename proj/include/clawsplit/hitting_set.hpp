#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "clawsplit/degree4.hpp"
#include "clawsplit/detection.hpp"
#include "clawsplit/graph.hpp"
#include "clawsplit/split.hpp"

namespace clawsplit {

/// Subsets of {0..universe-1}; every subset should have the same arity and
/// every element should occur in exactly `bound` subsets.
struct HittingSetInstance {
  std::size_t universe = 0;
  std::vector<std::vector<std::size_t>> subsets;
  std::size_t budget = 0;
  std::size_t bound = 3;

  /// Throws std::invalid_argument unless every subset has `arity` distinct
  /// elements and every element occurs exactly `bound` times.
  void validate(std::size_t arity) const {
    std::vector<std::size_t> occurrences(universe, 0);
    for (std::size_t i = 0; i < subsets.size(); ++i) {
      auto s = subsets[i];
      std::sort(s.begin(), s.end());
      if (s.size() != arity || std::adjacent_find(s.begin(), s.end()) != s.end())
        throw std::invalid_argument("subset " + std::to_string(i) + " does not have " +
                                    std::to_string(arity) + " distinct elements");
      for (auto e : s) {
        if (e >= universe)
          throw std::invalid_argument("subset " + std::to_string(i) + " names element " +
                                      std::to_string(e) + " outside the universe");
        ++occurrences[e];
      }
    }
    for (std::size_t e = 0; e < universe; ++e)
      if (occurrences[e] != bound)
        throw std::invalid_argument("element " + std::to_string(e) + " occurs " +
                                    std::to_string(occurrences[e]) + " times, expected " +
                                    std::to_string(bound));
  }

  [[nodiscard]] bool is_hitting_set(const std::vector<std::size_t>& chosen) const {
    return std::all_of(subsets.begin(), subsets.end(), [&](const auto& s) {
      return std::any_of(s.begin(), s.end(), [&](std::size_t e) {
        return std::find(chosen.begin(), chosen.end(), e) != chosen.end();
      });
    });
  }
};

/// Pair system of a graph: one subset per edge; cubic graphs give bound 3.
inline HittingSetInstance pair_system(const Graph& g, std::size_t budget) {
  HittingSetInstance inst;
  inst.universe = g.vertex_count();
  inst.budget = budget;
  inst.bound = g.vertex_count() ? g.max_degree() : 0;
  for (const auto& e : g.edges()) inst.subsets.push_back({e.u, e.v});
  return inst;
}

/**
 * Adds four fresh elements and the six pairs among them, raising the budget
 * by three. Afterwards no single subset meets all others, and the minimum
 * hitting set grows by exactly three.
 */
inline HittingSetInstance pad_no_subset_hits_all(const HittingSetInstance& inst) {
  for (const auto& s : inst.subsets)
    if (s.size() != 2)
      throw std::invalid_argument("padding gadget is defined for pair systems (c = 3) only");
  HittingSetInstance out = inst;
  const std::size_t a = inst.universe;
  out.universe += 4;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) out.subsets.push_back({a + i, a + j});
  out.budget += 3;
  return out;
}

/// Minimum hitting set by enumeration of element subsets (universe <= 24).
inline std::vector<std::size_t> brute_force_hitting_set(const HittingSetInstance& inst) {
  if (inst.universe > 24)
    throw std::invalid_argument("universe too large for exhaustive hitting-set search");
  std::vector<std::uint32_t> masks;
  for (const auto& s : inst.subsets) {
    std::uint32_t m = 0;
    for (auto e : s) m |= std::uint32_t{1} << e;
    masks.push_back(m);
  }
  std::optional<std::uint32_t> best;
  const std::uint32_t limit = std::uint32_t{1} << inst.universe;
  for (std::uint32_t h = 0; h < limit; ++h) {
    if (best && std::popcount(h) >= std::popcount(*best)) continue;
    if (std::all_of(masks.begin(), masks.end(), [&](auto m) { return (m & h) != 0; })) best = h;
  }
  if (!best) throw std::invalid_argument("an empty subset cannot be hit");
  std::vector<std::size_t> out;
  for (std::size_t e = 0; e < inst.universe; ++e)
    if (*best >> e & 1U) out.push_back(e);
  return out;
}

inline std::size_t brute_force_min_hitting_set(const HittingSetInstance& inst) {
  return brute_force_hitting_set(inst).size();
}

/// Id layout of a constructed instance; blocks are consecutive in this order.
struct ReductionLayout {
  std::size_t subsets = 0;
  std::size_t elements = 0;
  std::size_t guards = 0;
  std::size_t pendants_each = 1;  // c - 2

  [[nodiscard]] Vertex subset(std::size_t i) const { return static_cast<Vertex>(i); }
  [[nodiscard]] Vertex element(std::size_t u) const { return static_cast<Vertex>(subsets + u); }
  [[nodiscard]] Vertex element_pendant(std::size_t u, std::size_t j) const {
    return static_cast<Vertex>(subsets + elements + u * pendants_each + j);
  }
  [[nodiscard]] Vertex guard(std::size_t b) const {
    return static_cast<Vertex>(subsets + elements * (1 + pendants_each) + b);
  }
  [[nodiscard]] Vertex guard_pendant(std::size_t b, std::size_t j) const {
    return static_cast<Vertex>(subsets + elements * (1 + pendants_each) + guards +
                               b * pendants_each + j);
  }
  [[nodiscard]] std::size_t vertex_count() const {
    return (subsets + elements * (1 + pendants_each) + guards * (1 + pendants_each));
  }
};

struct ReducedInstance {
  Graph graph;  // labeled with roles
  std::size_t budget = 0;
  std::size_t c = 3;
  ReductionLayout layout;
  std::vector<std::vector<std::size_t>> subsets;  // source subsets, sorted
};

/**
 * Builds the splitting instance: subset vertices form a clique, each joined
 * to its elements; every element vertex gets c-2 pendants; a guard clique of
 * size |S|+t+1 is joined completely to the subset clique and every guard gets
 * c-2 pendants. Budget |S| + t.
 */
inline ReducedInstance reduce_hs_to_split(const HittingSetInstance& inst, std::size_t c) {
  detail::require_c(c);
  if (inst.bound != c)
    throw std::invalid_argument("construction needs every element in exactly c subsets");
  inst.validate(c - 1);

  ReducedInstance r;
  r.c = c;
  r.budget = inst.subsets.size() + inst.budget;
  r.layout = {inst.subsets.size(), inst.universe, inst.subsets.size() + inst.budget + 1, c - 2};
  const auto& L = r.layout;
  for (auto s : inst.subsets) {
    std::sort(s.begin(), s.end());
    r.subsets.push_back(std::move(s));
  }

  std::vector<Edge> edges;
  std::vector<std::string> labels(L.vertex_count());
  for (std::size_t i = 0; i < L.subsets; ++i) {
    labels[L.subset(i)] = "subset";
    for (std::size_t j = i + 1; j < L.subsets; ++j) edges.push_back({L.subset(i), L.subset(j)});
    for (auto u : r.subsets[i]) edges.push_back({L.subset(i), L.element(u)});
    for (std::size_t b = 0; b < L.guards; ++b) edges.push_back({L.subset(i), L.guard(b)});
  }
  for (std::size_t u = 0; u < L.elements; ++u) {
    labels[L.element(u)] = "element";
    for (std::size_t j = 0; j < L.pendants_each; ++j) {
      labels[L.element_pendant(u, j)] = "element-pendant";
      edges.push_back({L.element(u), L.element_pendant(u, j)});
    }
  }
  for (std::size_t b = 0; b < L.guards; ++b) {
    labels[L.guard(b)] = "guard";
    for (std::size_t b2 = b + 1; b2 < L.guards; ++b2) edges.push_back({L.guard(b), L.guard(b2)});
    for (std::size_t j = 0; j < L.pendants_each; ++j) {
      labels[L.guard_pendant(b, j)] = "guard-pendant";
      edges.push_back({L.guard(b), L.guard_pendant(b, j)});
    }
  }
  r.graph = Graph(L.vertex_count(), edges).with_labels(std::move(labels));
  return r;
}

/**
 * Forward witness for c = 3: every subset vertex splits off one edge toward
 * a chosen element of H it contains (the smallest one); then every element
 * of H splits off its pendant. An element chosen by two or more subsets
 * keeps a claw after a pendant split, so it gets the degree-4 resolution
 * instead. Cost is exactly |S| + |H|.
 */
inline SplitPlan hitting_set_to_plan(const ReducedInstance& reduced, std::vector<std::size_t> hits) {
  if (reduced.c != 3) throw std::invalid_argument("forward witness is built for c = 3 only");
  std::sort(hits.begin(), hits.end());
  hits.erase(std::unique(hits.begin(), hits.end()), hits.end());
  const auto& L = reduced.layout;
  for (auto u : hits)
    if (u >= L.elements) throw std::invalid_argument("H names an element outside the universe");
  SplitPlan first;
  for (std::size_t i = 0; i < L.subsets; ++i) {
    const auto& s = reduced.subsets[i];
    auto chosen = std::find_if(s.begin(), s.end(), [&](std::size_t e) {
      return std::binary_search(hits.begin(), hits.end(), e);
    });
    if (chosen == s.end())
      throw std::invalid_argument("H misses subset " + std::to_string(i));
    const Vertex v = L.subset(i);
    Block lone{L.element(*chosen)};
    Block rest;
    for (Vertex w : reduced.graph.neighbors(v))
      if (w != lone[0]) rest.push_back(w);
    first.set(v, {lone, rest});
  }
  auto mid = apply_split_plan(reduced.graph, first);
  SplitPlan second;
  const auto copy = static_cast<Vertex>(mid.graph.vertex_count());
  for (auto u : hits) {
    const Vertex e = L.element(u);
    const Vertex p = L.element_pendant(u, 0);
    Block rest;
    for (Vertex w : mid.graph.neighbors(e))
      if (w != p) rest.push_back(w);
    auto out = apply_single_split(mid.graph, e, rest, {p}, SplitMode::exclusive);
    if (!is_center(out.graph, e, 3) && !is_center(out.graph, copy, 3)) {
      second.set(e, {rest, {p}});
      continue;
    }
    auto res = resolve_center_deg4(mid.graph, e);
    if (!res.split || res.tag == ResolutionCase::connected_star_fallback)
      throw std::logic_error("unexpected neighborhood at element " + std::to_string(u));
    second.set(e, {res.split->first, res.split->second});
  }
  return compose_plans(reduced.graph, first, second);
}

// ---------------------------------------------------------------------------
// File format: "u s t d", then s lines of ascending element ids.
// ---------------------------------------------------------------------------

inline HittingSetInstance parse_hitting_set(std::string_view text) {
  HittingSetInstance inst;
  const auto lines = detail::split_lines(text);
  bool have_header = false;
  std::size_t declared = 0;
  std::size_t arity = 0;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (detail::skippable(lines[i])) continue;
    auto nums = detail::parse_numbers(lines[i]);
    if (!nums) throw ParseError(ParseErrorKind::malformed_line, i + 1, "expected integers");
    if (!have_header) {
      if (nums->size() != 4)
        throw ParseError(ParseErrorKind::malformed_line, i + 1, "expected 'u s t d'");
      inst.universe = (*nums)[0];
      declared = (*nums)[1];
      inst.budget = (*nums)[2];
      inst.bound = (*nums)[3];
      have_header = true;
      continue;
    }
    if (nums->empty() || (arity && nums->size() != arity))
      throw ParseError(ParseErrorKind::malformed_line, i + 1, "subset arity mismatch");
    arity = nums->size();
    std::vector<std::size_t> s(nums->begin(), nums->end());
    for (auto e : s)
      if (e >= inst.universe)
        throw ParseError(ParseErrorKind::vertex_out_of_range, i + 1, "element out of range");
    if (!std::is_sorted(s.begin(), s.end()) || std::adjacent_find(s.begin(), s.end()) != s.end())
      throw ParseError(ParseErrorKind::malformed_line, i + 1, "elements must be ascending");
    inst.subsets.push_back(std::move(s));
  }
  if (!have_header) throw ParseError(ParseErrorKind::missing_header, 0, "missing 'u s t d' header");
  if (inst.subsets.size() != declared)
    throw ParseError(ParseErrorKind::edge_count_mismatch, 0,
                     "header declares " + std::to_string(declared) + " subsets, found " +
                         std::to_string(inst.subsets.size()));
  return inst;
}

inline std::string to_hitting_set_text(const HittingSetInstance& inst) {
  std::string out = std::to_string(inst.universe) + " " + std::to_string(inst.subsets.size()) +
                    " " + std::to_string(inst.budget) + " " + std::to_string(inst.bound) + "\n";
  for (auto s : inst.subsets) {
    std::sort(s.begin(), s.end());
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? " " : "") + std::to_string(s[i]);
    out += "\n";
  }
  return out;
}

}  // namespace clawsplit
