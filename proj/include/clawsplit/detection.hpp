#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "clawsplit/graph.hpp"

namespace clawsplit {

struct CenterReport {
  std::vector<Vertex> centers;  // ascending
  std::map<Vertex, std::vector<Vertex>> witness;
};

namespace detail {

/// Fixed-width bitset sized at runtime; enough for neighborhood-local work.
class Bits {
 public:
  Bits() = default;
  explicit Bits(std::size_t n) : words_((n + 63) / 64, 0) {}

  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  void reset(std::size_t i) { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
  [[nodiscard]] bool test(std::size_t i) const {
    return (words_[i / 64] >> (i % 64)) & 1U;
  }
  [[nodiscard]] std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  [[nodiscard]] bool none() const {
    return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
  }
  /// Lowest set index, or npos.
  [[nodiscard]] std::size_t first() const { return next(0); }
  [[nodiscard]] std::size_t next(std::size_t from) const {
    for (std::size_t w = from / 64; w < words_.size(); ++w) {
      std::uint64_t word = words_[w];
      if (w == from / 64) word &= ~std::uint64_t{0} << (from % 64);
      if (word) return w * 64 + static_cast<std::size_t>(std::countr_zero(word));
    }
    return npos;
  }
  Bits& operator&=(const Bits& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  /// this & ~o
  Bits& subtract(const Bits& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

 private:
  std::vector<std::uint64_t> words_;
};

/// Subgraph induced by a vertex set, indexed 0..k-1 in ascending id order.
struct LocalGraph {
  std::vector<Vertex> members;
  std::vector<Bits> adj;

  LocalGraph(const Graph& g, std::span<const Vertex> vertices)
      : members(vertices.begin(), vertices.end()) {
    std::sort(members.begin(), members.end());
    const std::size_t k = members.size();
    adj.assign(k, Bits(k));
    for (std::size_t i = 0; i < k; ++i) {
      auto nbrs = g.neighbors(members[i]);
      // merge walk: both lists sorted
      std::size_t j = 0;
      for (Vertex w : nbrs) {
        while (j < k && members[j] < w) ++j;
        if (j == k) break;
        if (members[j] == w) adj[i].set(j);
      }
    }
  }

  [[nodiscard]] std::size_t size() const { return members.size(); }

  [[nodiscard]] Bits all() const {
    Bits b(size());
    for (std::size_t i = 0; i < size(); ++i) b.set(i);
    return b;
  }

  /// Number of cliques in a greedy clique cover of `cand`; bounds its
  /// independence number from above.
  [[nodiscard]] std::size_t clique_cover_bound(Bits cand) const {
    std::size_t cliques = 0;
    while (!cand.none()) {
      ++cliques;
      std::size_t seed = cand.first();
      cand.reset(seed);
      Bits common = adj[seed];
      common &= cand;
      while (!common.none()) {
        std::size_t u = common.first();
        cand.reset(u);
        common.reset(u);
        common &= adj[u];
      }
    }
    return cliques;
  }
};

/// Depth-first search for an independent set of a given size, choosing
/// members in ascending order so the first hit is lexicographically least.
class IndependentSetSearch {
 public:
  IndependentSetSearch(const LocalGraph& local, std::size_t target, std::uint64_t work_limit)
      : local_(local), target_(target), work_limit_(work_limit) {}

  /// nullopt when the work limit was hit before an answer.
  std::optional<bool> run() {
    chosen_.clear();
    if (target_ == 0) return true;
    return descend(local_.all());
  }

  [[nodiscard]] const std::vector<std::size_t>& chosen() const { return chosen_; }
  [[nodiscard]] std::uint64_t work() const { return work_; }

 private:
  std::optional<bool> descend(Bits cand) {
    if (++work_ > work_limit_) return std::nullopt;
    const std::size_t need = target_ - chosen_.size();
    if (cand.count() < need) return false;
    if (need > 1 && local_.clique_cover_bound(cand) < need) return false;
    for (std::size_t i = cand.first(); i != Bits::npos; i = cand.next(i + 1)) {
      chosen_.push_back(i);
      if (chosen_.size() == target_) return true;
      Bits next = cand;
      next.subtract(local_.adj[i]);
      // only larger indices remain eligible
      for (std::size_t j = next.first(); j != Bits::npos && j <= i; j = next.next(j + 1))
        next.reset(j);
      auto r = descend(std::move(next));
      if (!r || *r) return r;
      chosen_.pop_back();
      cand.reset(i);
      if (cand.count() < need) return false;
    }
    return false;
  }

  const LocalGraph& local_;
  std::size_t target_;
  std::uint64_t work_limit_;
  std::uint64_t work_ = 0;
  std::vector<std::size_t> chosen_;
};

inline void require_c(std::size_t c) {
  if (c < 3) throw std::invalid_argument("c must be at least 3");
}

}  // namespace detail

/// Lexicographically least set of c pairwise non-adjacent neighbors of v.
inline std::optional<std::vector<Vertex>> find_witness(const Graph& g, Vertex v, std::size_t c) {
  if (g.degree(v) < c) return std::nullopt;
  detail::LocalGraph local(g, g.neighbors(v));
  detail::IndependentSetSearch search(local, c, std::numeric_limits<std::uint64_t>::max());
  if (!*search.run()) return std::nullopt;
  std::vector<Vertex> w;
  for (auto i : search.chosen()) w.push_back(local.members[i]);
  return w;
}

inline bool is_center(const Graph& g, Vertex v, std::size_t c) {
  return find_witness(g, v, c).has_value();
}

/// All K_{1,c} centers with their lexicographically least witnesses.
inline CenterReport find_centers(const Graph& g, std::size_t c) {
  detail::require_c(c);
  CenterReport report;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) < c) continue;
    if (auto w = find_witness(g, v, c)) {
      report.centers.push_back(v);
      report.witness.emplace(v, std::move(*w));
    }
  }
  return report;
}

inline std::vector<Vertex> center_set(const Graph& g, std::size_t c) {
  return find_centers(g, c).centers;
}

inline bool is_k1c_free(const Graph& g, std::size_t c) {
  detail::require_c(c);
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) >= c && find_witness(g, v, c)) return false;
  return true;
}

enum class SearchStatus { found, absent, budget_exceeded };

struct IndependentSetResult {
  SearchStatus status;
  std::vector<Vertex> witness;  // set when found
  std::uint64_t work = 0;
};

inline constexpr std::uint64_t kDefaultIndependentSetWork = 2'000'000;

/// Does G[N(v)] contain an independent set of size s? Exhaustive with
/// clique-cover pruning; gives up after `work_limit` search nodes.
inline IndependentSetResult neighborhood_has_independent_set(
    const Graph& g, Vertex v, std::size_t s,
    std::uint64_t work_limit = kDefaultIndependentSetWork) {
  if (s == 0) return {SearchStatus::found, {}, 0};
  if (g.degree(v) < s) return {SearchStatus::absent, {}, 0};
  detail::LocalGraph local(g, g.neighbors(v));
  detail::IndependentSetSearch search(local, s, work_limit);
  auto r = search.run();
  if (!r) return {SearchStatus::budget_exceeded, {}, search.work()};
  if (!*r) return {SearchStatus::absent, {}, search.work()};
  IndependentSetResult out{SearchStatus::found, {}, search.work()};
  for (auto i : search.chosen()) out.witness.push_back(local.members[i]);
  return out;
}

/**
 * Greedy partition of N(v) into cliques. Each clique is seeded with the
 * smallest uncovered neighbor and extended by the smallest uncovered
 * neighbor adjacent to all members, so it is maximal in the remainder.
 */
inline std::vector<std::vector<Vertex>> greedy_clique_partition(const Graph& g, Vertex v) {
  detail::LocalGraph local(g, g.neighbors(v));
  std::vector<std::vector<Vertex>> cliques;
  detail::Bits left = local.all();
  while (!left.none()) {
    std::size_t seed = left.first();
    left.reset(seed);
    std::vector<Vertex> clique{local.members[seed]};
    detail::Bits common = local.adj[seed];
    common &= left;
    while (!common.none()) {
      std::size_t u = common.first();
      clique.push_back(local.members[u]);
      left.reset(u);
      common.reset(u);
      common &= local.adj[u];
    }
    cliques.push_back(std::move(clique));
  }
  return cliques;
}

}  // namespace clawsplit
