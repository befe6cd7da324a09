// Copyright 2026 The bdmlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <algorithm>
#include <functional>
#include <numeric>
#include <vector>

#include "bdmlab/blocks.hpp"
#include "bdmlab/boundary.hpp"
#include "bdmlab/distance.hpp"
#include "bdmlab/enumerate.hpp"
#include "bdmlab/error.hpp"
#include "bdmlab/families.hpp"
#include "bdmlab/graph.hpp"
#include "gtest/gtest.h"

namespace bdmlab {
namespace {

Graph gem() {
  // Path 0-1-2-3 plus apex 4.
  return Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {0, 4}, {1, 4}, {2, 4},
                               {3, 4}});
}

std::vector<Graph> all_small_graphs(int n_max) {
  std::vector<Graph> out;
  for (int n = 1; n <= n_max; ++n)
    for (Graph& g : connected_graphs(n)) out.push_back(std::move(g));
  return out;
}

bool induces_cycle(const Graph& g, unsigned mask) {
  const Graph h = g.induced([&] {
    VertexSet keep;
    for (int v = 0; v < g.order(); ++v)
      if (mask >> v & 1u) keep.push_back(v);
    return keep;
  }());
  if (!is_connected(h)) return false;
  for (Vertex v = 0; v < h.order(); ++v)
    if (h.degree(v) != 2) return false;
  return true;
}

bool oracle_chordal(const Graph& g) {
  const int n = g.order();
  for (unsigned mask = 0; mask < (1u << n); ++mask)
    if (std::popcount(mask) >= 4 && induces_cycle(g, mask)) return false;
  return true;
}

// Every induced path must be a shortest path.
bool oracle_distance_hereditary(const Graph& g) {
  const auto d = all_pairs_distances(g);
  const int n = g.order();
  std::vector<Vertex> path;
  std::vector<bool> on(n, false);
  bool ok = true;
  std::function<void()> grow = [&] {
    const Vertex last = path.back();
    if (static_cast<int>(path.size()) - 1 != d(path.front(), last)) ok = false;
    if (!ok) return;
    g.for_each_neighbor(last, [&](Vertex w) {
      if (!ok || on[w]) return;
      for (std::size_t i = 0; i + 1 < path.size(); ++i)
        if (g.has_edge(path[i], w)) return;
      on[w] = true;
      path.push_back(w);
      grow();
      path.pop_back();
      on[w] = false;
    });
  };
  for (Vertex s = 0; s < n && ok; ++s) {
    path = {s};
    on[s] = true;
    grow();
    on[s] = false;
  }
  return ok;
}

bool oracle_bipartite(const Graph& g) {
  const int n = g.order();
  for (unsigned side = 0; side < (1u << n); ++side) {
    bool ok = true;
    for (const auto& [u, v] : g.edges())
      ok = ok && ((side >> u & 1u) != (side >> v & 1u));
    if (ok) return true;
  }
  return false;
}

bool is_clique_mask(const Graph& g, unsigned mask) {
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if ((mask >> u & 1u) && (mask >> v & 1u) && !g.has_edge(u, v))
        return false;
  return true;
}

bool oracle_split(const Graph& g) {
  const int n = g.order();
  const unsigned all = (1u << n) - 1;
  for (unsigned c = 0; c <= all; ++c) {
    if (!is_clique_mask(g, c)) continue;
    bool independent = true;
    for (const auto& [u, v] : g.edges())
      if (!(c >> u & 1u) && !(c >> v & 1u)) independent = false;
    if (independent) return true;
  }
  return false;
}

std::vector<unsigned> oracle_maximal_cliques(const Graph& g) {
  const int n = g.order();
  std::vector<unsigned> out;
  for (unsigned c = 1; c < (1u << n); ++c) {
    if (!is_clique_mask(g, c)) continue;
    bool maximal = true;
    for (int v = 0; v < n && maximal; ++v)
      if (!(c >> v & 1u) && is_clique_mask(g, c | 1u << v)) maximal = false;
    if (maximal) out.push_back(c);
  }
  return out;
}

// Some ordering of the maximal cliques is consecutive for every vertex.
bool oracle_interval(const Graph& g) {
  auto cliques = oracle_maximal_cliques(g);
  std::sort(cliques.begin(), cliques.end());
  do {
    bool ok = true;
    for (int v = 0; v < g.order() && ok; ++v) {
      int state = 0;  // 0 before, 1 inside, 2 after
      for (unsigned c : cliques) {
        const bool in = c >> v & 1u;
        if (in && state == 2) ok = false;
        if (in) state = 1;
        if (!in && state == 1) state = 2;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(cliques.begin(), cliques.end()));
  return false;
}

// Chordal and free of induced diamonds.
bool oracle_block_graph(const Graph& g) {
  if (!oracle_chordal(g)) return false;
  const int n = g.order();
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) != 4) continue;
    int edges = 0;
    for (const auto& [u, v] : g.edges())
      edges += (mask >> u & 1u) && (mask >> v & 1u);
    if (edges == 5) return false;
  }
  return true;
}

VertexSet oracle_fan3_centers(const Graph& g) {
  VertexSet out;
  const int n = g.order();
  for (Vertex u = 0; u < n; ++u) {
    const VertexSet nu = g.neighbors(u);
    bool found = false;
    std::vector<int> pick(4);
    // Ordered 4-tuples from N(u) forming an induced path.
    std::function<void(int)> choose = [&](int k) {
      if (found) return;
      if (k == 4) {
        int edges = 0;
        for (int i = 0; i < 4; ++i)
          for (int j = i + 1; j < 4; ++j) edges += g.has_edge(pick[i], pick[j]);
        found = edges == 3 && g.has_edge(pick[0], pick[1]) &&
                g.has_edge(pick[1], pick[2]) && g.has_edge(pick[2], pick[3]);
        return;
      }
      for (Vertex w : nu) {
        if (std::find(pick.begin(), pick.begin() + k, w) != pick.begin() + k)
          continue;
        pick[k] = w;
        choose(k + 1);
      }
    };
    choose(0);
    if (found) out.push_back(u);
  }
  return out;
}

TEST(Recognize, Cycles) {
  const FamilyFlags c4 = recognize(cycle_graph(4));
  EXPECT_TRUE(c4.bipartite);
  EXPECT_FALSE(c4.chordal);
  EXPECT_TRUE(c4.distance_hereditary);
  EXPECT_FALSE(c4.ptolemaic);
  EXPECT_FALSE(c4.interval);
  EXPECT_TRUE(c4.unicyclic);

  const FamilyFlags c5 = recognize(cycle_graph(5));
  EXPECT_FALSE(c5.bipartite);
  EXPECT_FALSE(c5.chordal);
  EXPECT_FALSE(c5.distance_hereditary);
}

TEST(Recognize, Gem) {
  const FamilyFlags f = recognize(gem());
  EXPECT_TRUE(f.chordal);
  EXPECT_TRUE(f.interval);
  EXPECT_FALSE(f.distance_hereditary);
  EXPECT_FALSE(f.ptolemaic);
  EXPECT_FALSE(f.block_graph);
}

TEST(Recognize, SubdividedClawIsNotInterval) {
  const Graph g = Graph::from_edges(
      7, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}});
  const FamilyFlags f = recognize(g);
  EXPECT_TRUE(f.tree && f.ptolemaic);
  EXPECT_FALSE(f.interval);
}

TEST(Recognize, PathsAndStars) {
  for (const Graph& g : {path_graph(6), star_graph(5)}) {
    const FamilyFlags f = recognize(g);
    EXPECT_TRUE(f.tree && f.chordal && f.distance_hereditary && f.ptolemaic &&
                f.interval && f.bipartite && f.block_graph);
  }
}

TEST(Recognize, RejectsDisconnected) {
  EXPECT_THROW(recognize(Graph(2)), Disconnected);
  EXPECT_THROW(fan3_centers(Graph(3)), Disconnected);
}

TEST(Recognize, SplitWitness) {
  const auto w = split_partition(gem());
  ASSERT_TRUE(w.has_value());
  EXPECT_FALSE(split_partition(cycle_graph(4)).has_value());
  EXPECT_FALSE(split_partition(path_graph(5)).has_value());
  EXPECT_TRUE(split_partition(path_graph(4)).has_value());
}

TEST(Recognize, MatchesOraclesExhaustively) {
  for (const Graph& g : all_small_graphs(7)) {
    const FamilyFlags f = recognize(g);
    SCOPED_TRACE(testing::Message() << "n=" << g.order() << " m=" << g.size());
    ASSERT_EQ(f.bipartite, oracle_bipartite(g));
    ASSERT_EQ(f.chordal, oracle_chordal(g));
    ASSERT_EQ(f.distance_hereditary, oracle_distance_hereditary(g));
    ASSERT_EQ(f.ptolemaic, f.chordal && f.distance_hereditary);
    ASSERT_EQ(f.split, oracle_split(g));
    ASSERT_EQ(f.block_graph, oracle_block_graph(g));
    if (f.chordal) ASSERT_EQ(f.interval, oracle_interval(g));
    else ASSERT_FALSE(f.interval);
    ASSERT_EQ(f.interval, interval_clique_order(g).has_value());
    ASSERT_EQ(f.tree, g.size() == g.order() - 1);
    // Trees need not be interval graphs: the subdivided claw is not.
    if (f.tree)
      ASSERT_TRUE(f.chordal && f.distance_hereditary && f.ptolemaic &&
                  f.bipartite);
  }
}

TEST(Recognize, SplitPartitionIsAWitness) {
  for (const Graph& g : all_small_graphs(7)) {
    const auto w = split_partition(g);
    if (!w) continue;
    for (std::size_t i = 0; i < w->first.size(); ++i)
      for (std::size_t j = i + 1; j < w->first.size(); ++j)
        ASSERT_TRUE(g.has_edge(w->first[i], w->first[j]));
    for (std::size_t i = 0; i < w->second.size(); ++i)
      for (std::size_t j = i + 1; j < w->second.size(); ++j)
        ASSERT_FALSE(g.has_edge(w->second[i], w->second[j]));
  }
}

TEST(Recognize, IntervalOrderIsConsecutive) {
  for (const Graph& g : all_small_graphs(7)) {
    const auto order = interval_clique_order(g);
    if (!order) continue;
    ASSERT_EQ(order->size(), oracle_maximal_cliques(g).size());
    for (Vertex v = 0; v < g.order(); ++v) {
      std::vector<int> where;
      for (int i = 0; i < static_cast<int>(order->size()); ++i)
        if (std::binary_search((*order)[i].begin(), (*order)[i].end(), v))
          where.push_back(i);
      ASSERT_FALSE(where.empty());
      ASSERT_EQ(where.back() - where.front() + 1,
                static_cast<int>(where.size()));
    }
  }
}

TEST(Fan3, Examples) {
  EXPECT_EQ(fan3_centers(gem()), VertexSet{4});
  EXPECT_TRUE(fan3_centers(path_graph(5)).empty());
  EXPECT_TRUE(fan3_centers(cycle_graph(4)).empty());
}

TEST(Fan3, MatchesOracle) {
  for (const Graph& g : all_small_graphs(7))
    ASSERT_EQ(fan3_centers(g), oracle_fan3_centers(g));
}

TEST(GeneratePtolemaic, SmallOrders) {
  EXPECT_EQ(generate_ptolemaic(1, 5).order(), 1);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Graph g = generate_ptolemaic(2, seed);
    EXPECT_EQ(g.size(), 1);
  }
  EXPECT_THROW(generate_ptolemaic(0, 1), InvalidGraph);
}

TEST(Recognize, LargeIntervalOrders) {
  Rng rng(3);
  for (int i = 0; i < 200; ++i) {
    // Unit-free interval model: random real intervals, kept if connected.
    const int n = std::uniform_int_distribution<int>(5, 40)(rng);
    std::vector<std::pair<int, int>> iv(n);
    for (auto& [l, r] : iv) {
      l = std::uniform_int_distribution<int>(0, 3 * n)(rng);
      r = l + std::uniform_int_distribution<int>(0, 6)(rng);
    }
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (iv[u].first <= iv[v].second && iv[v].first <= iv[u].second)
          edges.emplace_back(u, v);
    const Graph g = Graph::from_edges(n, edges);
    ASSERT_TRUE(is_interval(g));
    const auto order = interval_clique_order(g);
    ASSERT_TRUE(order.has_value());
    for (Vertex v = 0; v < n; ++v) {
      std::vector<int> where;
      for (int k = 0; k < static_cast<int>(order->size()); ++k)
        if (std::binary_search((*order)[k].begin(), (*order)[k].end(), v))
          where.push_back(k);
      ASSERT_EQ(where.back() - where.front() + 1,
                static_cast<int>(where.size()));
    }
  }
}

TEST(GeneratePtolemaic, DeterministicAndPtolemaic) {
  Rng rng(7);
  for (int i = 0; i < 1000; ++i) {
    const int n = std::uniform_int_distribution<int>(3, 40)(rng);
    const std::uint64_t seed = rng();
    const Graph g = generate_ptolemaic(n, seed);
    ASSERT_EQ(g.order(), n);
    ASSERT_TRUE(is_connected(g));
    ASSERT_TRUE(recognize(g).ptolemaic);
    ASSERT_EQ(g.edges(), generate_ptolemaic(n, seed).edges());
  }
}

TEST(BoundaryCharacterizations, PtolemaicExhaustive) {
  for (int n = 1; n <= 8; ++n) {
    enumerate_connected(n, [](const Graph& g) {
      if (!is_chordal(g) || !is_distance_hereditary(g)) return;
      VertexSet expected;
      const VertexSet cuts = cut_vertices(g);
      for (Vertex v = 0; v < g.order(); ++v)
        if (!std::binary_search(cuts.begin(), cuts.end(), v))
          expected.push_back(v);
      ASSERT_EQ(boundary_set(g), expected);
    });
  }
}

// Vertices that are neither cut vertices nor 3-fan centers are boundary
// vertices in every interval graph.
TEST(BoundaryCharacterizations, IntervalInclusionExhaustive) {
  for (int n = 1; n <= 8; ++n) {
    enumerate_connected(n, [](const Graph& g) {
      if (!is_interval(g)) return;
      const VertexSet cuts = cut_vertices(g);
      const VertexSet fans = fan3_centers(g);
      const VertexSet b = boundary_set(g);
      for (Vertex v = 0; v < g.order(); ++v)
        if (!std::binary_search(cuts.begin(), cuts.end(), v) &&
            !std::binary_search(fans.begin(), fans.end(), v))
          ASSERT_TRUE(std::binary_search(b.begin(), b.end(), v));
    });
  }
}

// The reverse inclusion fails: a 3-fan center with a true twin is a boundary
// vertex of that twin.
TEST(BoundaryCharacterizations, TwinnedFanCenterIsBoundary) {
  const Graph g = Graph::from_edges(
      6, {{2, 0}, {0, 1}, {1, 3}, {0, 4}, {1, 4}, {2, 4}, {3, 4}, {0, 5},
          {1, 5}, {2, 5}, {3, 5}, {4, 5}});
  ASSERT_TRUE(is_interval(g));
  EXPECT_EQ(fan3_centers(g), (VertexSet{4, 5}));
  EXPECT_TRUE(cut_vertices(g).empty());
  EXPECT_EQ(boundary_set(g), (VertexSet{0, 1, 2, 3, 4, 5}));
}

}  // namespace
}  // namespace bdmlab
