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

#include <utility>
#include <vector>

#include "bdmlab/graph.hpp"

namespace bdmlab {

// Blocks (maximal biconnected subgraphs and bridges) and cut vertices of a
// connected graph, with block/cut-vertex incidence.
struct BlockCutTree {
  std::vector<VertexSet> blocks;
  VertexSet cut_vertices;
  // (block index, cut vertex) pairs; these are the tree's edges.
  std::vector<std::pair<int, Vertex>> incidence;
};

// Depth-first biconnectivity decomposition. Throws Disconnected.
// K1 yields a single block {0} and no cut vertices.
BlockCutTree block_cut_tree(const Graph& g);

// Cut vertices only; also used by the enumerator's deletion rule.
VertexSet cut_vertices(const Graph& g);

}  // namespace bdmlab
