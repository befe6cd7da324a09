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
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "bdmlab/blocks.hpp"
#include "bdmlab/canonical.hpp"
#include "bdmlab/distance.hpp"
#include "bdmlab/enumerate.hpp"
#include "bdmlab/error.hpp"
#include "bdmlab/graph.hpp"
#include "bdmlab/graph6.hpp"
#include "bdmlab/random.hpp"
#include "gtest/gtest.h"

namespace bdmlab {
namespace {

// Straight transcription of the published graph6 layout, bit by bit into a
// string of '0'/'1' characters, then six at a time. Kept separate from the
// library encoder on purpose.
std::string reference_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out += static_cast<char>(n + 63);
  } else {
    out += static_cast<char>(126);
    out += static_cast<char>((n / 4096) % 64 + 63);
    out += static_cast<char>((n / 64) % 64 + 63);
    out += static_cast<char>(n % 64 + 63);
  }
  std::string bits;
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < j; ++i) bits += g.has_edge(i, j) ? '1' : '0';
  while (bits.size() % 6 != 0) bits += '0';
  for (std::size_t k = 0; k < bits.size(); k += 6)
    out += static_cast<char>(std::stoi(bits.substr(k, 6), nullptr, 2) + 63);
  return out;
}

// Brute-force canonical form: lexicographically smallest adjacency bit
// string over all n! relabelings.
std::vector<bool> brute_canonical(const Graph& g) {
  const int n = g.order();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<bool> best;
  do {
    std::vector<bool> form;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) form.push_back(g.has_edge(perm[i], perm[j]));
    if (best.empty() || form < best) best = form;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

int brute_automorphisms(const Graph& g) {
  const int n = g.order();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  int count = 0;
  do {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = i + 1; j < n && ok; ++j)
        ok = g.has_edge(i, j) == g.has_edge(perm[i], perm[j]);
    count += ok;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

Graph from_bits(int n, std::uint64_t bits) {
  Graph g(n);
  int k = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++k)
      if ((bits >> k) & 1) g.add_edge(i, j);
  return g;
}

TEST(BuildGraphTest, PathAndTriangle) {
  const Graph p4 = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
  EXPECT_EQ(p4, path_graph(4));
  EXPECT_EQ(p4.size(), 3);
  const Graph k3 = Graph::from_edges(3, {{0, 1}, {0, 2}, {1, 2}});
  EXPECT_EQ(k3, complete_graph(3));
}

TEST(BuildGraphTest, DuplicatesCollapse) {
  const Graph g = Graph::from_edges(3, {{0, 1}, {1, 0}, {0, 1}});
  EXPECT_EQ(g.size(), 1);
}

TEST(BuildGraphTest, RejectsSelfLoopAndRange) {
  EXPECT_THROW(Graph::from_edges(2, {{0, 0}}), InvalidGraph);
  EXPECT_THROW(Graph::from_edges(2, {{0, 2}}), InvalidGraph);
  EXPECT_THROW(Graph::from_edges(2, {{-1, 1}}), InvalidGraph);
}

TEST(BuildGraphTest, LargeOrderUsesMultiWordRows) {
  Graph g(130);
  g.add_edge(0, 129);
  g.add_edge(64, 65);
  EXPECT_FALSE(g.small());
  EXPECT_TRUE(g.has_edge(129, 0));
  EXPECT_EQ(g.neighbors(129), VertexSet{0});
  EXPECT_EQ(g.degree(64), 1);
}

TEST(Graph6Test, KnownRecords) {
  EXPECT_EQ(parse_graph6("@"), Graph(1));
  EXPECT_EQ(write_graph6(complete_graph(2)), "A_");
  EXPECT_EQ(reference_graph6(complete_graph(2)), "A_");
  EXPECT_EQ(write_graph6(Graph(1)), reference_graph6(Graph(1)));
  EXPECT_EQ(parse_graph6(reference_graph6(path_graph(5))), path_graph(5));
}

TEST(Graph6Test, RejectsMalformed) {
  EXPECT_THROW(parse_graph6("~~~"), ParseError);
  EXPECT_THROW(parse_graph6(""), ParseError);
  EXPECT_THROW(parse_graph6("B"), ParseError);     // missing data byte
  EXPECT_THROW(parse_graph6("A_?"), ParseError);   // extra byte
  EXPECT_THROW(parse_graph6("A`"), ParseError);    // nonzero padding
  EXPECT_THROW(parse_graph6("A\x20"), ParseError); // below 63
}

TEST(Graph6Test, RoundTripAndReferenceOnRandomGraphs) {
  Rng rng(7);
  std::uniform_int_distribution<int> order(1, 40);
  std::uniform_real_distribution<double> density(0.0, 1.0);
  for (int trial = 0; trial < 10000; ++trial) {
    const int n = order(rng);
    Graph g(n);
    std::bernoulli_distribution coin(density(rng));
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (coin(rng)) g.add_edge(i, j);
    const std::string text = write_graph6(g);
    ASSERT_EQ(text, reference_graph6(g));
    ASSERT_EQ(parse_graph6(text), g);
  }
}

TEST(Graph6Test, FourByteHeader) {
  const Graph g = path_graph(100);
  const std::string text = write_graph6(g);
  EXPECT_EQ(static_cast<unsigned char>(text[0]), 126);
  EXPECT_EQ(text, reference_graph6(g));
  EXPECT_EQ(parse_graph6(text), g);
}

TEST(DistanceTest, PathAndCycle) {
  const auto d4 = all_pairs_distances(path_graph(4));
  EXPECT_EQ(d4(0, 3), 3);
  const auto d5 = all_pairs_distances(cycle_graph(5));
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j)
      if (i != j) EXPECT_TRUE(d5(i, j) == 1 || d5(i, j) == 2);
}

TEST(DistanceTest, DisconnectedUsesSentinel) {
  Graph g(3);
  g.add_edge(0, 1);
  const auto d = all_pairs_distances(g);
  EXPECT_EQ(d(0, 2), kUnreachable);
  EXPECT_FALSE(is_connected(g));
  EXPECT_THROW(eccentricity_profile(g, d), Disconnected);
  Graph big(70);
  for (int i = 0; i + 1 < 69; ++i) big.add_edge(i, i + 1);
  EXPECT_EQ(all_pairs_distances(big)(0, 68), 68);
  EXPECT_EQ(all_pairs_distances(big)(0, 69), kUnreachable);
}

TEST(DistanceTest, EccentricityProfiles) {
  auto k5 = complete_graph(5);
  auto p = eccentricity_profile(k5, all_pairs_distances(k5));
  EXPECT_EQ(p.radius, 1);
  EXPECT_EQ(p.diameter, 1);
  auto p5 = path_graph(5);
  p = eccentricity_profile(p5, all_pairs_distances(p5));
  EXPECT_EQ(p.radius, 2);
  EXPECT_EQ(p.diameter, 4);
  EXPECT_EQ(p.central, VertexSet{2});
  auto c6 = cycle_graph(6);
  p = eccentricity_profile(c6, all_pairs_distances(c6));
  EXPECT_EQ(p.radius, 3);
  EXPECT_EQ(p.diameter, 3);
  EXPECT_EQ(p.central.size(), 6u);
  EXPECT_EQ(p.peripheral.size(), 6u);
}

TEST(DistanceTest, MetricPropertiesOnAllSmallConnectedGraphs) {
  for (int n = 1; n <= 7; ++n) {
    for (const Graph& g : connected_graphs(n)) {
      const auto d = all_pairs_distances(g);
      for (int u = 0; u < n; ++u) {
        ASSERT_EQ(d(u, u), 0);
        for (int v = 0; v < n; ++v) {
          ASSERT_EQ(d(u, v), d(v, u));
          ASSERT_EQ(d(u, v) == 1, g.has_edge(u, v));
          for (int w = 0; w < n; ++w) ASSERT_LE(d(u, w), d(u, v) + d(v, w));
        }
      }
    }
  }
}

TEST(BlockCutTreeTest, SmallShapes) {
  auto t = block_cut_tree(path_graph(4));
  EXPECT_EQ(t.blocks, (std::vector<VertexSet>{{0, 1}, {1, 2}, {2, 3}}));
  EXPECT_EQ(t.cut_vertices, (VertexSet{1, 2}));
  EXPECT_EQ(t.incidence.size(), 4u);

  t = block_cut_tree(cycle_graph(5));
  EXPECT_EQ(t.blocks.size(), 1u);
  EXPECT_TRUE(t.cut_vertices.empty());

  // Bowtie: triangles {0,1,2} and {2,3,4}.
  const Graph bowtie =
      Graph::from_edges(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
  t = block_cut_tree(bowtie);
  EXPECT_EQ(t.blocks, (std::vector<VertexSet>{{0, 1, 2}, {2, 3, 4}}));
  EXPECT_EQ(t.cut_vertices, VertexSet{2});

  t = block_cut_tree(Graph(1));
  EXPECT_EQ(t.blocks.size(), 1u);
  EXPECT_THROW(block_cut_tree(Graph(2)), Disconnected);
}

// Invariants: every edge lies in exactly one block, a vertex is a cut vertex
// iff deleting it disconnects the graph, and the incidence forms a tree.
TEST(BlockCutTreeTest, DeletionOracleOnAllSmallGraphs) {
  for (int n = 2; n <= 7; ++n) {
    for (const Graph& g : connected_graphs(n)) {
      const auto t = block_cut_tree(g);
      for (Vertex v = 0; v < n; ++v) {
        VertexSet keep;
        for (Vertex u = 0; u < n; ++u)
          if (u != v) keep.push_back(u);
        const bool cut = !is_connected(g.induced(keep));
        const bool listed = std::binary_search(t.cut_vertices.begin(),
                                               t.cut_vertices.end(), v);
        ASSERT_EQ(cut, listed) << write_graph6(g) << " vertex " << v;
        int containing = 0;
        for (const auto& b : t.blocks)
          containing += std::binary_search(b.begin(), b.end(), v);
        ASSERT_EQ(cut, containing >= 2);
      }
      for (const auto& [u, v] : g.edges()) {
        int count = 0;
        for (const auto& b : t.blocks)
          count += std::binary_search(b.begin(), b.end(), u) &&
                   std::binary_search(b.begin(), b.end(), v);
        ASSERT_EQ(count, 1);
      }
      const std::size_t nodes = t.blocks.size() + t.cut_vertices.size();
      ASSERT_EQ(t.incidence.size() + 1, nodes);
      ASSERT_EQ(cut_vertices(g), t.cut_vertices);
    }
  }
}

TEST(CertificateTest, RelabelingAndNonIsomorphic) {
  const Graph p4 = path_graph(4);
  const std::vector<int> perm{2, 0, 3, 1};
  EXPECT_EQ(certificate(p4), certificate(p4.relabeled(perm)));
  EXPECT_NE(certificate(p4), certificate(star_graph(3)));
  EXPECT_TRUE(is_isomorphic(p4, p4.relabeled(perm)));
  EXPECT_FALSE(is_isomorphic(p4, star_graph(3)));
}

TEST(CertificateTest, ConnectedClassesOnFourVertices) {
  std::set<Certificate> classes;
  for (std::uint64_t bits = 0; bits < 64; ++bits) {
    const Graph g = from_bits(4, bits);
    if (is_connected(g)) classes.insert(certificate(g));
  }
  EXPECT_EQ(classes.size(), 6u);
}

TEST(CertificateTest, InvariantUnderRandomRelabeling) {
  Rng rng(11);
  std::uniform_int_distribution<int> order(1, 14);
  std::uniform_real_distribution<double> density(0.05, 0.9);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = order(rng);
    const Graph g = random_connected_graph(n, density(rng), rng);
    const auto perm = random_permutation(n, rng);
    ASSERT_EQ(certificate(g), certificate(g.relabeled(perm)))
        << write_graph6(g);
  }
}

TEST(CertificateTest, HighlySymmetricGraphs) {
  for (int n : {6, 8, 10, 12}) {
    EXPECT_EQ(canonical_labeling(complete_graph(n)).orbit,
              std::vector<int>(n, 0));
    EXPECT_EQ(certificate(cycle_graph(n)),
              certificate(cycle_graph(n).relabeled(
                  [&] {
                    std::vector<int> p(n);
                    for (int i = 0; i < n; ++i) p[i] = (i * 7 + 1) % n;
                    return p;
                  }())));
  }
  // Petersen graph: vertex-transitive, 120 automorphisms.
  const Graph petersen = Graph::from_edges(
      10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {1, 6}, {2, 7},
           {3, 8}, {4, 9}, {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
  EXPECT_EQ(canonical_labeling(petersen).orbit, std::vector<int>(10, 0));
}

// Orbits reported by the search agree with brute-force automorphism counts:
// |Aut| times the orbit count identity is checked through orbit sizes.
TEST(CertificateTest, OrbitsMatchBruteForce) {
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : connected_graphs(n)) {
      const auto lab = canonical_labeling(g);
      for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = 0; v < n; ++v) {
          std::vector<int> perm(n);
          std::iota(perm.begin(), perm.end(), 0);
          bool same_orbit = false;
          do {
            if (perm[u] != v) continue;
            bool ok = true;
            for (int i = 0; i < n && ok; ++i)
              for (int j = i + 1; j < n && ok; ++j)
                ok = g.has_edge(i, j) == g.has_edge(perm[i], perm[j]);
            same_orbit = ok;
          } while (!same_orbit &&
                   std::next_permutation(perm.begin(), perm.end()));
          ASSERT_EQ(same_orbit, lab.orbit[u] == lab.orbit[v])
              << write_graph6(g) << " " << u << " " << v;
        }
      }
    }
  }
}

TEST(EnumerateTest, SmallCountsAgainstLabeledBruteForce) {
  for (int n = 1; n <= 6; ++n) {
    const int pairs = n * (n - 1) / 2;
    std::set<std::vector<bool>> classes;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << pairs); ++bits) {
      const Graph g = from_bits(n, bits);
      if (is_connected(g)) classes.insert(brute_canonical(g));
    }
    const auto graphs = connected_graphs(n);
    std::set<std::vector<bool>> produced;
    for (const auto& g : graphs) {
      ASSERT_TRUE(is_connected(g));
      produced.insert(brute_canonical(g));
    }
    EXPECT_EQ(produced.size(), graphs.size()) << "duplicate at n=" << n;
    EXPECT_EQ(produced, classes) << "n=" << n;
  }
}

// At n=7 the labeled brute force counts connected labeled graphs directly;
// the enumerator's classes must account for exactly that many labelings
// (orbit-stabilizer: n!/|Aut| labelings per class) and be pairwise distinct.
TEST(EnumerateTest, SevenVerticesByOrbitCounting) {
  const int n = 7;
  long long labeled = 0;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << 21); ++bits)
    labeled += is_connected(from_bits(n, bits));
  const auto graphs = connected_graphs(n);
  EXPECT_EQ(graphs.size(), 853u);
  std::set<std::vector<bool>> forms;
  long long covered = 0;
  for (const auto& g : graphs) {
    forms.insert(brute_canonical(g));
    covered += 5040 / brute_automorphisms(g);
  }
  EXPECT_EQ(forms.size(), graphs.size());
  EXPECT_EQ(covered, labeled);
}

TEST(EnumerateTest, EightVertexCountAndDistinctCertificates) {
  const auto graphs = connected_graphs(8);
  EXPECT_EQ(graphs.size(), 11117u);
  std::set<Certificate> certs;
  for (const auto& g : graphs) certs.insert(certificate(g));
  EXPECT_EQ(certs.size(), graphs.size());
}

TEST(EnumerateTest, DeterministicOrder) {
  EXPECT_EQ(connected_graphs(6), connected_graphs(6));
  ConnectedEnumerator e(6);
  std::vector<Graph> split;
  for (std::size_t i = 0; i < e.parent_count(); ++i)
    e.generate(i, i + 1, [&](const Graph& g) { split.push_back(g); });
  EXPECT_EQ(split, connected_graphs(6));
}

}  // namespace
}  // namespace bdmlab
