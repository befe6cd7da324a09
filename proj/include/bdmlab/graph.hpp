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

#include <bit>
#include <initializer_list>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace bdmlab {

// Vertices are 0-based indices in the C++ API. Every textual interface
// (records, DOT, CLI) prints them as labels 1..n.
using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;
// Sorted, duplicate-free list of vertices.
using VertexSet = std::vector<Vertex>;

// Simple undirected graph with bit-row adjacency. Graphs of order <= 64 keep
// one 64-bit word per row, which is the fast path used by the search code.
class Graph {
 public:
  Graph() = default;
  // Edgeless graph on n vertices.
  explicit Graph(int n);

  // Validates every pair; throws InvalidGraph on out-of-range or self-loops.
  // Duplicate pairs collapse.
  static Graph from_edges(int n, std::span<const Edge> edges);
  static Graph from_edges(int n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  int order() const { return n_; }
  int size() const;
  int words() const { return words_; }
  bool small() const { return n_ <= 64; }

  bool has_edge(Vertex u, Vertex v) const {
    return (bits_[row_offset(u) + (v >> 6)] >> (v & 63)) & 1u;
  }
  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);

  // Single-word row; only valid when small().
  std::uint64_t mask(Vertex v) const { return bits_[v]; }
  std::span<const std::uint64_t> row(Vertex v) const {
    return {bits_.data() + row_offset(v), static_cast<std::size_t>(words_)};
  }

  int degree(Vertex v) const;
  VertexSet neighbors(Vertex v) const;
  std::vector<Edge> edges() const;

  template <typename F>
  void for_each_neighbor(Vertex v, F&& f) const {
    const std::uint64_t* r = bits_.data() + row_offset(v);
    for (int w = 0; w < words_; ++w) {
      std::uint64_t bits = r[w];
      while (bits) {
        f(static_cast<Vertex>(w * 64 + std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
  }

  // Vertex v of this graph becomes vertex perm[v] of the result.
  Graph relabeled(std::span<const int> perm) const;
  // Subgraph induced by `keep` (in the given order; vertex keep[i] -> i).
  Graph induced(std::span<const Vertex> keep) const;
  // Copy with one extra vertex adjacent to `nbrs`.
  Graph with_vertex(std::span<const Vertex> nbrs) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::size_t row_offset(Vertex v) const {
    return static_cast<std::size_t>(v) * words_;
  }

  int n_ = 0;
  int words_ = 0;
  std::vector<std::uint64_t> bits_;
};

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph star_graph(int leaves);

}  // namespace bdmlab
