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
#include <functional>
#include <optional>
#include <vector>

#include "bdmlab/boundary.hpp"
#include "bdmlab/graph.hpp"
#include "bdmlab/matrix.hpp"

namespace bdmlab {

// Distances from the vertices of s (rows, in the given order) to every vertex
// of a graph of order n (columns).
struct SVMatrix {
  VertexSet s;
  int n = 0;
  Matrix<int> entries;
};

SVMatrix sv_matrix(const Graph& g, const VertexSet& s);

// Rebuilds the graph from distances out of a strong resolving set, using
// d(x,y) = max over s of |d(s,x) - d(s,y)|. Throws NotRealizable when the
// rebuilt graph does not reproduce the input.
Graph graph_from_SV(const SVMatrix& m);

// The tree whose leaf-to-leaf distances are `leaf_distances`. Leaves keep
// their matrix indices 0..k-1; internal vertices follow. Throws
// NotRealizable when no tree fits, or when `n` is given and differs.
Graph tree_from_leaf_distances(const Matrix<int>& leaf_distances,
                               std::optional<int> n = std::nullopt);

struct ConsistentOptions {
  // Maximum number of isomorphism classes; exceeding it throws CapExceeded.
  std::size_t cap = 64;
  // Search nodes before giving up with InfeasibleSearch.
  std::uint64_t node_budget = 50'000'000;
  // Optional extra condition on completed graphs (for example Ptolemaic).
  std::function<bool(const Graph&)> accept;
};

// One graph per isomorphism class among connected graphs on [n] whose
// boundary is exactly b.boundary and whose boundary distances equal
// b.entries. Boundary vertices keep their labels; the others are filled in
// ascending order. Output is sorted by certificate.
std::vector<Graph> consistent_graphs(const BoundaryDistanceMatrix& b,
                                     const ConsistentOptions& options = {});
std::vector<Graph> consistent_graphs(const BoundaryDistanceMatrix& b,
                                     std::size_t cap);

// A Ptolemaic graph with the given boundary distance matrix. Non-cut
// vertices are exactly the boundary, so the cut vertices are recovered by
// peeling leaf blocks off the block-cutpoint tree; an exhaustive search
// restricted to Ptolemaic graphs backs up the peeling. Throws NotRealizable
// if no Ptolemaic graph fits and TheoremViolation if two non-isomorphic ones
// do.
Graph reconstruct_ptolemaic(const BoundaryDistanceMatrix& b);

// The peeling stage alone; nullopt when it does not reach a verified graph.
std::optional<Graph> peel_ptolemaic(const BoundaryDistanceMatrix& b,
                                    std::uint64_t step_budget = 1'000'000);

struct BdmVerdict {
  enum class Status { kBdm, kNotBdm };
  Status status = Status::kBdm;
  // Pairwise non-isomorphic graphs sharing (n, boundary, matrix); the input
  // graph's class is among them.
  std::vector<Graph> witnesses;

  bool is_bdm() const { return status == Status::kBdm; }
};

BdmVerdict bdm_verdict(const Graph& g, const ConsistentOptions& options = {});

// After deleting xy, every neighbor z of x is within distance 2 of y.
bool is_irrelevant_edge(const Graph& g, Vertex x, Vertex y);

}  // namespace bdmlab
