#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <unordered_set>
#include <vector>

#include "clawsplit/graph.hpp"

namespace clawsplit {

/// Isomorphism-invariant encoding of a small graph: vertex count followed by
/// the upper-triangle adjacency bits under a canonical ordering.
struct CanonicalForm {
  std::vector<std::uint64_t> words;

  auto operator<=>(const CanonicalForm&) const = default;
  bool operator==(const CanonicalForm&) const = default;
};

struct CanonicalFormHash {
  std::size_t operator()(const CanonicalForm& f) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (auto w : f.words) {
      h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

namespace detail {

/**
 * Individualization-refinement over ordered partitions. Every leaf of the
 * search tree is a discrete partition; the minimum leaf encoding is the
 * canonical form. Twins in the target cell are tried once, since swapping
 * them is an automorphism preserving the partition.
 */
class Canonicalizer {
 public:
  explicit Canonicalizer(const Graph& g) : g_(g), n_(g.vertex_count()) {
    matrix_.assign(n_ * n_, 0);
    for (Vertex u = 0; u < n_; ++u)
      for (Vertex w : g.neighbors(u)) matrix_[u * n_ + w] = 1;
  }

  CanonicalForm run() {
    Cells cells;
    if (n_ > 0) {
      std::vector<Vertex> all(n_);
      for (Vertex v = 0; v < n_; ++v) all[v] = v;
      cells.push_back(std::move(all));
    }
    refine(cells);
    search(cells);
    CanonicalForm f;
    f.words.push_back(n_);
    f.words.insert(f.words.end(), best_.begin(), best_.end());
    return f;
  }

 private:
  using Cells = std::vector<std::vector<Vertex>>;

  [[nodiscard]] bool adj(Vertex a, Vertex b) const { return matrix_[a * n_ + b] != 0; }

  void refine(Cells& cells) const {
    std::vector<std::size_t> cell_of(n_);
    while (true) {
      for (std::size_t c = 0; c < cells.size(); ++c)
        for (Vertex v : cells[c]) cell_of[v] = c;
      Cells next;
      next.reserve(n_);
      for (const auto& cell : cells) {
        if (cell.size() == 1) {
          next.push_back(cell);
          continue;
        }
        std::vector<std::pair<std::vector<std::uint32_t>, Vertex>> sig;
        sig.reserve(cell.size());
        for (Vertex v : cell) {
          std::vector<std::uint32_t> counts(cells.size(), 0);
          for (Vertex w : g_.neighbors(v)) ++counts[cell_of[w]];
          sig.emplace_back(std::move(counts), v);
        }
        std::sort(sig.begin(), sig.end());
        for (std::size_t i = 0; i < sig.size(); ++i) {
          if (i == 0 || sig[i].first != sig[i - 1].first) next.emplace_back();
          next.back().push_back(sig[i].second);
        }
      }
      const bool stable = next.size() == cells.size();
      cells = std::move(next);
      if (stable) return;
    }
  }

  [[nodiscard]] bool twins(Vertex a, Vertex b) const {
    for (Vertex x = 0; x < n_; ++x) {
      if (x == a || x == b) continue;
      if (adj(a, x) != adj(b, x)) return false;
    }
    return true;
  }

  void search(const Cells& cells) {
    std::size_t target = cells.size();
    for (std::size_t c = 0; c < cells.size(); ++c)
      if (cells[c].size() > 1) {
        target = c;
        break;
      }
    if (target == cells.size()) {
      leaf(cells);
      return;
    }
    std::vector<Vertex> tried;
    for (Vertex v : cells[target]) {
      if (std::any_of(tried.begin(), tried.end(), [&](Vertex u) { return twins(u, v); }))
        continue;
      tried.push_back(v);
      Cells child;
      child.reserve(cells.size() + 1);
      for (std::size_t c = 0; c < cells.size(); ++c) {
        if (c != target) {
          child.push_back(cells[c]);
          continue;
        }
        child.push_back({v});
        std::vector<Vertex> rest;
        for (Vertex u : cells[c])
          if (u != v) rest.push_back(u);
        child.push_back(std::move(rest));
      }
      refine(child);
      search(child);
    }
  }

  void leaf(const Cells& cells) {
    std::vector<Vertex> order;
    order.reserve(n_);
    for (const auto& cell : cells) order.push_back(cell[0]);
    std::vector<std::uint64_t> code((n_ * (n_ - 1) / 2 + 63) / 64 + 1, 0);
    std::size_t bit = 0;
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i + 1; j < n_; ++j, ++bit)
        if (adj(order[i], order[j])) code[bit / 64] |= std::uint64_t{1} << (63 - bit % 64);
    if (!have_best_ || code < best_) {
      best_ = std::move(code);
      have_best_ = true;
    }
  }

  const Graph& g_;
  std::size_t n_;
  std::vector<char> matrix_;
  std::vector<std::uint64_t> best_;
  bool have_best_ = false;
};

}  // namespace detail

/// Canonical form; equal forms iff isomorphic. Labels are ignored.
inline CanonicalForm canonical_form(const Graph& g) {
  return detail::Canonicalizer(g).run();
}

inline bool isomorphic(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count())
    return false;
  return canonical_form(a) == canonical_form(b);
}

/**
 * All graphs on 1..max_n vertices up to isomorphism, grouped by order, that
 * satisfy a hereditary `keep` predicate. Graphs of order n arise by attaching
 * a new vertex to a representative of order n-1 in every possible way.
 */
inline std::vector<std::vector<Graph>> enumerate_graphs(
    std::size_t max_n, const std::function<bool(const Graph&)>& keep = {}) {
  std::vector<std::vector<Graph>> by_order(max_n + 1);
  if (max_n == 0) return by_order;
  by_order[1].push_back(Graph(1));
  for (std::size_t n = 2; n <= max_n; ++n) {
    std::unordered_set<CanonicalForm, CanonicalFormHash> seen;
    for (const auto& base : by_order[n - 1]) {
      const std::size_t subsets = std::size_t{1} << (n - 1);
      for (std::size_t mask = 0; mask < subsets; ++mask) {
        std::vector<std::vector<Vertex>> adj = base.adjacency();
        adj.emplace_back();
        const auto fresh = static_cast<Vertex>(n - 1);
        for (Vertex u = 0; u + 1 < n; ++u)
          if (mask >> u & 1U) {
            adj[u].push_back(fresh);
            adj[fresh].push_back(u);
          }
        Graph g = Graph::from_adjacency(std::move(adj));
        if (keep && !keep(g)) continue;
        if (seen.insert(canonical_form(g)).second) by_order[n].push_back(std::move(g));
      }
    }
  }
  return by_order;
}

}  // namespace clawsplit
