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
#include <random>

#include "bdmlab/graph.hpp"

namespace bdmlab {

// Every generator takes its pseudo-random source explicitly.
using Rng = std::mt19937_64;

// Uniform random labeled tree (via a random Pruefer sequence).
Graph random_tree(int n, Rng& rng);

// Random spanning tree plus each remaining pair independently with
// probability p; always connected.
Graph random_connected_graph(int n, double p, Rng& rng);

// Uniform random permutation of 0..n-1.
std::vector<int> random_permutation(int n, Rng& rng);

}  // namespace bdmlab
