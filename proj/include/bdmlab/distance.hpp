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

#include <limits>
#include <vector>

#include "bdmlab/graph.hpp"
#include "bdmlab/matrix.hpp"

namespace bdmlab {

inline constexpr int kUnreachable = std::numeric_limits<int>::max();

// Full n x n shortest-path table; kUnreachable between components.
using DistanceMatrix = Matrix<int>;

// Breadth-first distances from `source`.
std::vector<int> bfs_distances(const Graph& g, Vertex source);

DistanceMatrix all_pairs_distances(const Graph& g);

bool is_connected(const Graph& g);

// Throws Disconnected unless `g` is connected.
void require_connected(const Graph& g);

struct EccentricityProfile {
  std::vector<int> ecc;
  int radius = 0;
  int diameter = 0;
  VertexSet central;
  VertexSet peripheral;
};

// Requires a connected graph and its distance table.
EccentricityProfile eccentricity_profile(const Graph& g,
                                         const DistanceMatrix& d);

}  // namespace bdmlab
