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

#include "bdmlab/graph.hpp"

#include <string>

#include "bdmlab/error.hpp"

namespace bdmlab {

Graph::Graph(int n)
    : n_(n), words_(n == 0 ? 0 : (n + 63) / 64),
      bits_(static_cast<std::size_t>(n) * words_, 0) {
  if (n < 0) throw InvalidGraph("negative vertex count");
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (const auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw InvalidGraph("edge (" + std::to_string(u + 1) + "," +
                         std::to_string(v + 1) + ") out of range for n=" +
                         std::to_string(n));
    if (u == v)
      throw InvalidGraph("self-loop at vertex " + std::to_string(u + 1));
    g.add_edge(u, v);
  }
  return g;
}

int Graph::size() const {
  int twice = 0;
  for (auto w : bits_) twice += std::popcount(w);
  return twice / 2;
}

void Graph::add_edge(Vertex u, Vertex v) {
  bits_[row_offset(u) + (v >> 6)] |= std::uint64_t{1} << (v & 63);
  bits_[row_offset(v) + (u >> 6)] |= std::uint64_t{1} << (u & 63);
}

void Graph::remove_edge(Vertex u, Vertex v) {
  bits_[row_offset(u) + (v >> 6)] &= ~(std::uint64_t{1} << (v & 63));
  bits_[row_offset(v) + (u >> 6)] &= ~(std::uint64_t{1} << (u & 63));
}

int Graph::degree(Vertex v) const {
  int d = 0;
  for (auto w : row(v)) d += std::popcount(w);
  return d;
}

VertexSet Graph::neighbors(Vertex v) const {
  VertexSet out;
  for_each_neighbor(v, [&](Vertex w) { out.push_back(w); });
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < n_; ++u)
    for_each_neighbor(u, [&](Vertex v) {
      if (u < v) out.emplace_back(u, v);
    });
  return out;
}

Graph Graph::relabeled(std::span<const int> perm) const {
  Graph out(n_);
  for (Vertex u = 0; u < n_; ++u)
    for_each_neighbor(u, [&](Vertex v) {
      if (u < v) out.add_edge(perm[u], perm[v]);
    });
  return out;
}

Graph Graph::induced(std::span<const Vertex> keep) const {
  const int k = static_cast<int>(keep.size());
  Graph out(k);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (has_edge(keep[i], keep[j])) out.add_edge(i, j);
  return out;
}

Graph Graph::with_vertex(std::span<const Vertex> nbrs) const {
  Graph out(n_ + 1);
  for (Vertex u = 0; u < n_; ++u)
    for_each_neighbor(u, [&](Vertex v) {
      if (u < v) out.add_edge(u, v);
    });
  for (Vertex v : nbrs) out.add_edge(n_, v);
  return out;
}

Graph path_graph(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph cycle_graph(int n) {
  Graph g = path_graph(n);
  if (n >= 3) g.add_edge(n - 1, 0);
  return g;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

Graph star_graph(int leaves) {
  Graph g(leaves + 1);
  for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
  return g;
}

}  // namespace bdmlab
