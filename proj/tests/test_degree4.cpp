#include <gtest/gtest.h>

#include "support/oracles.hpp"

using namespace clawsplit;

namespace {

bool is_subset(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

TEST(Resolve, StarOfFour) {
  auto r = resolve_center_deg4(oracle::star(4), 0);
  EXPECT_EQ(r.tag, ResolutionCase::four_isolated);
  ASSERT_TRUE(r.split);
  EXPECT_EQ(r.split->first, (Block{1, 2}));
  EXPECT_EQ(r.split->second, (Block{3, 4}));
}

TEST(Resolve, PendantPlusPath) {
  // N(0) = {1} and the path 2-3-4.
  Graph g(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {2, 3}, {3, 4}});
  auto r = resolve_center_deg4(g, 0);
  EXPECT_EQ(r.tag, ResolutionCase::two_components);
  EXPECT_EQ(r.split->first, Block{1});
  EXPECT_EQ(r.split->second, (Block{2, 3, 4}));
}

TEST(Resolve, ThreeComponentsAndDegreeThree) {
  Graph g(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {3, 4}});
  auto r = resolve_center_deg4(g, 0);
  EXPECT_EQ(r.tag, ResolutionCase::three_components);
  EXPECT_EQ(r.split->first, Block{1});
  auto claw = resolve_center_deg4(oracle::star(3), 0);
  EXPECT_EQ(claw.tag, ResolutionCase::deg3);
  EXPECT_EQ(claw.split->first.size() + claw.split->second.size(), 3u);
}

TEST(Resolve, NonCentersGetNoSplit) {
  // Two edges, and pendant plus triangle: neither neighborhood has three independent vertices.
  Graph two_edges(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {3, 4}});
  Graph pendant_triangle(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {2, 3}, {3, 4}, {2, 4}});
  for (const auto& g : {two_edges, pendant_triangle}) {
    auto r = resolve_center_deg4(g, 0);
    EXPECT_EQ(r.tag, ResolutionCase::none);
    EXPECT_FALSE(r.split);
  }
}

TEST(Resolve, ConnectedStarFallback) {
  auto g = oracle::k23e();
  auto r = resolve_center_deg4(g, 0);
  EXPECT_EQ(r.tag, ResolutionCase::connected_star_fallback);
  ASSERT_TRUE(r.split);
  // The chosen split leaves neither copy of v a center.
  auto out = apply_single_split(g, 0, r.split->first, r.split->second, SplitMode::exclusive);
  auto centers = oracle::brute_force_centers(out.graph, 3);
  EXPECT_FALSE(std::binary_search(centers.begin(), centers.end(), 0u));
  EXPECT_FALSE(std::binary_search(centers.begin(), centers.end(), 5u));
}

TEST(Resolve, ConnectedStarHasNoComponentPreservingSplit) {
  // All seven bipartitions of N(v) = {w=1; a,b,c = 2,3,4} cut an edge of G[N(v)].
  auto g = oracle::k23e();
  auto nb = g.neighbors(0);
  std::size_t claw_destroying = 0;
  for (auto& [x, y] : detail::admissible_splits(nb, SplitMode::exclusive)) {
    auto out = apply_single_split(g, 0, x, y, SplitMode::exclusive);
    auto centers = oracle::brute_force_centers(out.graph, 3);
    const bool at_v = std::binary_search(centers.begin(), centers.end(), 0u) ||
                      std::binary_search(centers.begin(), centers.end(), 5u);
    claw_destroying += !at_v;
    bool cuts_edge = false;
    for (Vertex a : x)
      for (Vertex b : y) cuts_edge |= g.adjacent(a, b);
    EXPECT_TRUE(cuts_edge);
  }
  EXPECT_GT(claw_destroying, 0u);
}

TEST(Resolve, Errors) {
  EXPECT_THROW(resolve_center_deg4(oracle::star(5), 0), DegreeBoundExceeded);
  EXPECT_THROW(solve_deg4(oracle::fan_with_tail()), DegreeBoundExceeded);
}

TEST(Solve, ClawFreeInputNeedsNothing) {
  auto sol = solve_deg4(cubic_builtin("prism"));
  EXPECT_TRUE(sol.plan.empty());
  EXPECT_EQ(sol.plan.cost(), 0u);
}

TEST(Solve, ConnectedStarGraph) {
  auto g = oracle::k23e();
  auto sol = solve_deg4(g);
  EXPECT_EQ(sol.plan.cost(), 2u);
  EXPECT_EQ(sol.fallback_count, 2u);
  EXPECT_EQ(oracle::plan_enumeration_optimum(g, 3, 4), std::optional<std::size_t>(2));
  EXPECT_TRUE(verify_solution(g, sol.plan, 2, 3));
  for (const auto& r : sol.resolutions) EXPECT_EQ(r.tag, ResolutionCase::connected_star_fallback);
}

TEST(Solve, ComponentPreservingSplitsAddNoCenters) {
  for (std::uint64_t seed = 0; seed < 400; ++seed) {
    auto g = gen_random_bounded(9, 0.6, 4, seed);
    auto before = oracle::brute_force_centers(g, 3);
    for (Vertex v : before) {
      auto r = resolve_center_deg4(g, v);
      if (r.tag == ResolutionCase::connected_star_fallback) continue;
      auto out = apply_single_split(g, v, r.split->first, r.split->second, SplitMode::exclusive);
      auto after = oracle::brute_force_centers(out.graph, 3);
      std::vector<Vertex> allowed;
      for (Vertex u : before)
        if (u != v) allowed.push_back(u);
      ASSERT_TRUE(is_subset(after, allowed)) << "seed " << seed << " center " << v;
    }
  }
}

TEST(Solve, DegreeThreeCentersHaveIndependentNeighbors) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    auto g = gen_random_bounded(10, 0.5, 4, seed);
    for (Vertex v : oracle::brute_force_centers(g, 3))
      if (g.degree(v) == 3) {
        auto nb = g.neighbors(v);
        ASSERT_FALSE(g.adjacent(nb[0], nb[1]) || g.adjacent(nb[0], nb[2]) ||
                     g.adjacent(nb[1], nb[2]));
      }
  }
}

TEST(Solve, OutputIsClawFreeAndCountsCenters) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    auto g = gen_random_bounded(14, 0.4, 4, seed);
    auto sol = solve_deg4(g);
    ASSERT_TRUE(oracle::brute_force_free(apply_split_plan(g, sol.plan).graph, 3)) << seed;
    if (sol.fallback_count == 0)
      ASSERT_EQ(sol.plan.cost(), oracle::brute_force_centers(g, 3).size());
  }
}

TEST(Solve, OptimalOnSmallGraphs) {
  auto by_order = enumerate_graphs(6, [](const Graph& g) { return g.max_degree() <= 4; });
  for (std::size_t n = 1; n <= 6; ++n)
    for (const auto& g : by_order[n]) {
      auto expected = oracle::plan_enumeration_optimum(g, 3, 12);
      ASSERT_EQ(solve_deg4(g).plan.cost(), expected.value()) << to_edge_list(g);
    }
}
