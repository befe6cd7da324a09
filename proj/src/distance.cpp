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

#include "bdmlab/distance.hpp"

#include <algorithm>
#include <bit>

#include "bdmlab/error.hpp"

namespace bdmlab {

namespace {

// Level-synchronous BFS over single-word rows.
void bfs_small(const Graph& g, Vertex source, std::span<int> out) {
  std::fill(out.begin(), out.end(), kUnreachable);
  std::uint64_t seen = std::uint64_t{1} << source;
  std::uint64_t frontier = seen;
  int level = 0;
  out[source] = 0;
  while (frontier) {
    std::uint64_t next = 0;
    for (std::uint64_t f = frontier; f; f &= f - 1)
      next |= g.mask(std::countr_zero(f));
    next &= ~seen;
    ++level;
    for (std::uint64_t b = next; b; b &= b - 1) out[std::countr_zero(b)] = level;
    seen |= next;
    frontier = next;
  }
}

void bfs_general(const Graph& g, Vertex source, std::span<int> out) {
  std::fill(out.begin(), out.end(), kUnreachable);
  std::vector<Vertex> queue{source};
  out[source] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex u = queue[head];
    g.for_each_neighbor(u, [&](Vertex v) {
      if (out[v] == kUnreachable) {
        out[v] = out[u] + 1;
        queue.push_back(v);
      }
    });
  }
}

}  // namespace

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  std::vector<int> out(g.order());
  if (g.small())
    bfs_small(g, source, out);
  else
    bfs_general(g, source, out);
  return out;
}

DistanceMatrix all_pairs_distances(const Graph& g) {
  const int n = g.order();
  DistanceMatrix d = DistanceMatrix::square(n);
  for (Vertex s = 0; s < n; ++s) {
    if (g.small())
      bfs_small(g, s, d.row(s));
    else
      bfs_general(g, s, d.row(s));
  }
  return d;
}

bool is_connected(const Graph& g) {
  const int n = g.order();
  if (n <= 1) return true;
  if (g.small()) {
    std::uint64_t seen = 1;
    std::uint64_t frontier = 1;
    while (frontier) {
      std::uint64_t next = 0;
      for (std::uint64_t f = frontier; f; f &= f - 1)
        next |= g.mask(std::countr_zero(f));
      frontier = next & ~seen;
      seen |= next;
    }
    return std::popcount(seen) == n;
  }
  const auto d = bfs_distances(g, 0);
  return std::none_of(d.begin(), d.end(),
                      [](int x) { return x == kUnreachable; });
}

void require_connected(const Graph& g) {
  if (!is_connected(g)) throw Disconnected();
}

EccentricityProfile eccentricity_profile(const Graph& g,
                                         const DistanceMatrix& d) {
  require_connected(g);
  const int n = g.order();
  EccentricityProfile p;
  p.ecc.resize(n);
  for (Vertex v = 0; v < n; ++v) {
    const auto r = d.row(v);
    p.ecc[v] = *std::max_element(r.begin(), r.end());
  }
  p.radius = *std::min_element(p.ecc.begin(), p.ecc.end());
  p.diameter = *std::max_element(p.ecc.begin(), p.ecc.end());
  for (Vertex v = 0; v < n; ++v) {
    if (p.ecc[v] == p.radius) p.central.push_back(v);
    if (p.ecc[v] == p.diameter) p.peripheral.push_back(v);
  }
  return p;
}

}  // namespace bdmlab
