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

#include "bdmlab/random.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace bdmlab {

Graph random_tree(int n, Rng& rng) {
  Graph g(n);
  if (n <= 1) return g;
  if (n == 2) {
    g.add_edge(0, 1);
    return g;
  }
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::vector<int> code(n - 2);
  for (auto& c : code) c = pick(rng);
  std::vector<int> degree(n, 1);
  for (int c : code) ++degree[c];
  std::priority_queue<int, std::vector<int>, std::greater<>> leaves;
  for (int v = 0; v < n; ++v)
    if (degree[v] == 1) leaves.push(v);
  for (int c : code) {
    const int leaf = leaves.top();
    leaves.pop();
    g.add_edge(leaf, c);
    if (--degree[c] == 1) leaves.push(c);
  }
  const int a = leaves.top();
  leaves.pop();
  g.add_edge(a, leaves.top());
  return g;
}

Graph random_connected_graph(int n, double p, Rng& rng) {
  Graph g = random_tree(n, rng);
  std::bernoulli_distribution coin(p);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.has_edge(u, v) && coin(rng)) g.add_edge(u, v);
  return g;
}

std::vector<int> random_permutation(int n, Rng& rng) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace bdmlab
