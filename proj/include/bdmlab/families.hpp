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

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bdmlab/graph.hpp"
#include "bdmlab/random.hpp"

namespace bdmlab {

struct FamilyFlags {
  bool bipartite = false;
  bool chordal = false;
  bool split = false;
  bool distance_hereditary = false;
  bool ptolemaic = false;
  bool interval = false;
  bool block_graph = false;
  bool tree = false;
  bool unicyclic = false;

  friend bool operator==(const FamilyFlags&, const FamilyFlags&) = default;
};

// Family names in the order used by reports and filters.
const std::vector<std::string>& family_names();
// Looks a flag up by name ("bipartite", "chordal", ..., "unicyclic").
std::optional<bool> family_flag(const FamilyFlags& f, const std::string& name);

// Requires a connected graph.
FamilyFlags recognize(const Graph& g);

bool is_bipartite(const Graph& g);

// Lexicographic breadth-first search; returns the visit order.
std::vector<Vertex> lex_bfs(const Graph& g);
// Perfect elimination ordering if the graph is chordal.
std::optional<std::vector<Vertex>> perfect_elimination_order(const Graph& g);
bool is_chordal(const Graph& g);

// Maximal cliques of a chordal graph read off a perfect elimination order.
std::vector<VertexSet> chordal_maximal_cliques(const Graph& g,
                                               const std::vector<Vertex>& peo);

// (clique, independent set) witness from the degree-sequence criterion.
std::optional<std::pair<VertexSet, VertexSet>> split_partition(const Graph& g);

// Pendant / true twin / false twin pruning down to one vertex.
bool is_distance_hereditary(const Graph& g);

// No three pairwise nonadjacent vertices such that each pair is joined by a
// path avoiding the closed neighborhood of the third.
bool is_asteroidal_triple_free(const Graph& g);
// Chordal and asteroidal-triple free.
bool is_interval(const Graph& g);

// Maximal cliques in an order where every vertex's cliques are consecutive,
// if one exists (that is, if the graph is an interval graph).
std::optional<std::vector<VertexSet>> interval_clique_order(const Graph& g);

// Centers u of an induced 3-fan: some four neighbors of u induce a path P4.
VertexSet fan3_centers(const Graph& g);

// Random Ptolemaic graph grown from K1 by n-1 operations: attach a leaf,
// add a true twin, or add a false twin of a vertex whose (nonempty)
// neighborhood is a clique. The operation is drawn uniformly among the
// applicable ones, then the target vertex uniformly.
Graph generate_ptolemaic(int n, Rng& rng);
Graph generate_ptolemaic(int n, std::uint64_t seed);

}  // namespace bdmlab
