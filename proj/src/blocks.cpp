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

#include "bdmlab/blocks.hpp"

#include <algorithm>

#include "bdmlab/distance.hpp"
#include "bdmlab/error.hpp"

namespace bdmlab {

namespace {

// Iterative Hopcroft-Tarjan over an explicit stack of (vertex, neighbor
// cursor) frames; blocks are popped off an edge stack.
struct Tarjan {
  explicit Tarjan(const Graph& g)
      : g(g), n(g.order()), disc(n, -1), low(n, 0), is_cut(n, false) {
    for (Vertex v = 0; v < n; ++v) adj.push_back(g.neighbors(v));
  }

  void run(Vertex root) {
    struct Frame {
      Vertex v;
      Vertex parent;
      std::size_t next;
      int children;
    };
    std::vector<Frame> stack;
    disc[root] = low[root] = time++;
    stack.push_back({root, -1, 0, 0});
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.next < adj[f.v].size()) {
        const Vertex w = adj[f.v][f.next++];
        if (disc[w] < 0) {
          edges.emplace_back(f.v, w);
          ++f.children;
          disc[w] = low[w] = time++;
          stack.push_back({w, f.v, 0, 0});
        } else if (w != f.parent && disc[w] < disc[f.v]) {
          edges.emplace_back(f.v, w);
          low[f.v] = std::min(low[f.v], disc[w]);
        }
        continue;
      }
      const Frame done = f;
      stack.pop_back();
      if (stack.empty()) {
        if (done.children >= 2) is_cut[done.v] = true;
        break;
      }
      Frame& parent = stack.back();
      low[parent.v] = std::min(low[parent.v], low[done.v]);
      if (low[done.v] >= disc[parent.v]) {
        if (parent.parent >= 0) is_cut[parent.v] = true;
        VertexSet block;
        while (true) {
          const Edge e = edges.back();
          edges.pop_back();
          block.push_back(e.first);
          block.push_back(e.second);
          if (e.first == parent.v && e.second == done.v) break;
        }
        std::sort(block.begin(), block.end());
        block.erase(std::unique(block.begin(), block.end()), block.end());
        blocks.push_back(std::move(block));
      }
    }
  }

  const Graph& g;
  int n;
  int time = 0;
  std::vector<VertexSet> adj;
  std::vector<int> disc;
  std::vector<int> low;
  std::vector<bool> is_cut;
  std::vector<Edge> edges;
  std::vector<VertexSet> blocks;
};

}  // namespace

BlockCutTree block_cut_tree(const Graph& g) {
  require_connected(g);
  BlockCutTree out;
  if (g.order() == 0) return out;
  if (g.order() == 1) {
    out.blocks.push_back({0});
    return out;
  }
  Tarjan t(g);
  t.run(0);
  out.blocks = std::move(t.blocks);
  std::sort(out.blocks.begin(), out.blocks.end());
  for (Vertex v = 0; v < g.order(); ++v)
    if (t.is_cut[v]) out.cut_vertices.push_back(v);
  for (int b = 0; b < static_cast<int>(out.blocks.size()); ++b)
    for (Vertex v : out.blocks[b])
      if (t.is_cut[v]) out.incidence.emplace_back(b, v);
  return out;
}

VertexSet cut_vertices(const Graph& g) {
  require_connected(g);
  if (g.order() <= 2) return {};
  Tarjan t(g);
  t.run(0);
  VertexSet out;
  for (Vertex v = 0; v < g.order(); ++v)
    if (t.is_cut[v]) out.push_back(v);
  return out;
}

}  // namespace bdmlab
