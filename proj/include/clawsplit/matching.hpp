#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <map>
#include <queue>
#include <span>
#include <utility>
#include <vector>

namespace clawsplit {

namespace detail {

/// Hopcroft-Karp on dense indices. Adjacency lists are scanned in the order
/// given, so results are deterministic.
class HopcroftKarp {
 public:
  HopcroftKarp(std::size_t left, std::size_t right)
      : adj_(left), match_left_(left, kFree), match_right_(right, kFree), dist_(left) {}

  void add_edge(std::size_t l, std::size_t r) { adj_[l].push_back(r); }

  std::size_t run() {
    std::size_t size = 0;
    while (bfs())
      for (std::size_t l = 0; l < adj_.size(); ++l)
        if (match_left_[l] == kFree && dfs(l)) ++size;
    return size;
  }

  [[nodiscard]] std::size_t mate_of_left(std::size_t l) const { return match_left_[l]; }

  static constexpr std::size_t kFree = std::numeric_limits<std::size_t>::max();

 private:
  bool bfs() {
    std::queue<std::size_t> q;
    bool reachable_free = false;
    for (std::size_t l = 0; l < adj_.size(); ++l) {
      if (match_left_[l] == kFree) {
        dist_[l] = 0;
        q.push(l);
      } else {
        dist_[l] = kFree;
      }
    }
    while (!q.empty()) {
      std::size_t l = q.front();
      q.pop();
      for (std::size_t r : adj_[l]) {
        std::size_t next = match_right_[r];
        if (next == kFree) {
          reachable_free = true;
        } else if (dist_[next] == kFree) {
          dist_[next] = dist_[l] + 1;
          q.push(next);
        }
      }
    }
    return reachable_free;
  }

  bool dfs(std::size_t l) {
    for (std::size_t r : adj_[l]) {
      std::size_t next = match_right_[r];
      if (next == kFree || (dist_[next] == dist_[l] + 1 && dfs(next))) {
        match_left_[l] = r;
        match_right_[r] = l;
        return true;
      }
    }
    dist_[l] = kFree;
    return false;
  }

  std::vector<std::vector<std::size_t>> adj_;
  std::vector<std::size_t> match_left_;
  std::vector<std::size_t> match_right_;
  std::vector<std::size_t> dist_;
};

}  // namespace detail

/**
 * Maximum-cardinality matching between `left` and `right` using only the
 * listed edges. Returns matched (left, right) pairs in `left` order.
 * Edges naming vertices outside the two sides are ignored.
 */
template <typename L, typename R>
std::vector<std::pair<L, R>> max_bipartite_matching(std::span<const L> left,
                                                    std::span<const R> right,
                                                    std::span<const std::pair<L, R>> edges) {
  std::map<L, std::size_t> left_index;
  std::map<R, std::size_t> right_index;
  for (std::size_t i = 0; i < left.size(); ++i) left_index.emplace(left[i], i);
  for (std::size_t i = 0; i < right.size(); ++i) right_index.emplace(right[i], i);

  std::vector<std::pair<std::size_t, std::size_t>> indexed;
  for (const auto& [l, r] : edges) {
    auto li = left_index.find(l);
    auto ri = right_index.find(r);
    if (li != left_index.end() && ri != right_index.end())
      indexed.emplace_back(li->second, ri->second);
  }
  std::sort(indexed.begin(), indexed.end());
  indexed.erase(std::unique(indexed.begin(), indexed.end()), indexed.end());

  detail::HopcroftKarp hk(left.size(), right.size());
  for (auto [l, r] : indexed) hk.add_edge(l, r);
  hk.run();

  std::vector<std::pair<L, R>> out;
  for (std::size_t l = 0; l < left.size(); ++l)
    if (auto r = hk.mate_of_left(l); r != detail::HopcroftKarp::kFree)
      out.emplace_back(left[l], right[r]);
  return out;
}

}  // namespace clawsplit
