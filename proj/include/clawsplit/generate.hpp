#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "clawsplit/graph.hpp"

namespace clawsplit {

namespace detail {
/// Uniform double in [0, 1) from the top 53 bits; identical on every platform.
inline double unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}
}  // namespace detail

/// G(n, p): every pair u < v, in ascending order, is an edge with probability p.
inline Graph gen_random(std::size_t n, double p, std::uint64_t seed) {
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("edge probability must lie in [0, 1]");
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (detail::unit(rng) < p) edges.push_back({u, v});
  return Graph(n, edges);
}

/// G(n, p) restricted to maximum degree `max_degree`: pairs are visited in a
/// seeded random order and an edge is rejected when it would exceed the cap.
inline Graph gen_random_bounded(std::size_t n, double p, std::size_t max_degree,
                                std::uint64_t seed) {
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("edge probability must lie in [0, 1]");
  std::mt19937_64 rng(seed);
  std::vector<Edge> pairs;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) pairs.push_back({u, v});
  for (std::size_t i = pairs.size(); i > 1; --i) std::swap(pairs[i - 1], pairs[rng() % i]);
  std::vector<std::size_t> degree(n, 0);
  std::vector<Edge> edges;
  for (const auto& e : pairs) {
    if (detail::unit(rng) >= p) continue;
    if (degree[e.u] >= max_degree || degree[e.v] >= max_degree) continue;
    ++degree[e.u];
    ++degree[e.v];
    edges.push_back(e);
  }
  return Graph(n, edges);
}

inline Graph complete_graph(std::size_t n) { return gen_random(n, 1.0, 0); }

inline Graph star_graph(std::size_t leaves) {
  std::vector<Edge> edges;
  for (Vertex i = 1; i <= leaves; ++i) edges.push_back({0, i});
  return Graph(leaves + 1, edges);
}

inline Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Graph(n, edges);
}

/// Named cubic graphs: k4, k33, prism, cube.
inline Graph cubic_builtin(std::string_view name) {
  if (name == "k4") return complete_graph(4);
  if (name == "k33")
    return Graph(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
  if (name == "prism")
    return Graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
  if (name == "cube")
    return Graph(8, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {4, 5}, {5, 6}, {6, 7}, {4, 7},
                     {0, 4}, {1, 5}, {2, 6}, {3, 7}});
  throw std::invalid_argument("unknown builtin graph '" + std::string(name) + "'");
}

}  // namespace clawsplit
