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

#include "bdmlab/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "bdmlab/canonical.hpp"
#include "bdmlab/error.hpp"

namespace bdmlab {

namespace {

// Bit i set iff removing vertex i leaves the graph connected.
std::uint64_t non_cut_mask(const Graph& g) {
  const int n = g.order();
  const std::uint64_t all = n == 64 ? ~std::uint64_t{0}
                                    : (std::uint64_t{1} << n) - 1;
  std::uint64_t out = 0;
  for (int v = 0; v < n; ++v) {
    const std::uint64_t rest = all & ~(std::uint64_t{1} << v);
    if (rest == 0) {
      out |= std::uint64_t{1} << v;
      continue;
    }
    std::uint64_t seen = rest & (~rest + 1);
    std::uint64_t frontier = seen;
    while (frontier) {
      std::uint64_t next = 0;
      for (std::uint64_t f = frontier; f; f &= f - 1)
        next |= g.mask(std::countr_zero(f));
      next &= rest & ~seen;
      seen |= next;
      frontier = next;
    }
    if (seen == rest) out |= std::uint64_t{1} << v;
  }
  return out;
}

std::uint64_t image(std::uint64_t set, const std::vector<int>& gamma) {
  std::uint64_t out = 0;
  for (; set; set &= set - 1)
    out |= std::uint64_t{1} << gamma[std::countr_zero(set)];
  return out;
}

struct Verdict {
  bool accepted = false;
  std::vector<std::vector<int>> generators;
};

// Canonical-deletion test for the child whose newest vertex is `added`.
Verdict accept(const Graph& child, Vertex added, bool want_generators) {
  const int n = child.order();
  const std::uint64_t non_cut = non_cut_mask(child);
  // Root refinement sorts cells by decreasing degree first, so the first cell
  // holding a non-cut vertex has the largest non-cut degree.
  int best_degree = -1;
  for (std::uint64_t b = non_cut; b; b &= b - 1)
    best_degree = std::max(best_degree, child.degree(std::countr_zero(b)));
  if (child.degree(added) != best_degree) return {};

  const auto m = adjacency_matrix(child);
  CanonicalSearch search(m);
  const auto& cell = search.root_cell();
  int first_cell = n;
  for (std::uint64_t b = non_cut; b; b &= b - 1)
    first_cell = std::min(first_cell, cell[std::countr_zero(b)]);
  if (cell[added] != first_cell) return {};

  int candidates = 0;
  for (std::uint64_t b = non_cut; b; b &= b - 1)
    candidates += cell[std::countr_zero(b)] == first_cell;
  if (candidates == 1 && !want_generators) return {true, {}};

  auto labeling = search.run();
  Vertex chosen = -1;
  for (std::uint64_t b = non_cut; b; b &= b - 1) {
    const Vertex v = std::countr_zero(b);
    if (cell[v] != first_cell) continue;
    if (chosen < 0 || labeling.position[v] > labeling.position[chosen])
      chosen = v;
  }
  if (labeling.orbit[chosen] != labeling.orbit[added]) return {};
  return {true, std::move(labeling.generators)};
}

template <typename Emit>
void extend(const ConnectedEnumerator::Node& parent, bool want_generators,
            Emit&& emit) {
  const Graph& p = parent.graph;
  const int m = p.order();
  const std::uint64_t limit = std::uint64_t{1} << m;
  std::vector<bool> seen;
  if (!parent.generators.empty()) seen.assign(limit, false);
  std::vector<std::uint64_t> stack;
  VertexSet nbrs;
  for (std::uint64_t s = 1; s < limit; ++s) {
    if (!parent.generators.empty()) {
      if (seen[s]) continue;
      // s is the smallest member of its orbit; mark the rest.
      seen[s] = true;
      stack.assign(1, s);
      while (!stack.empty()) {
        const std::uint64_t x = stack.back();
        stack.pop_back();
        for (const auto& gamma : parent.generators) {
          const std::uint64_t y = image(x, gamma);
          if (!seen[y]) {
            seen[y] = true;
            stack.push_back(y);
          }
        }
      }
    }
    nbrs.clear();
    for (std::uint64_t b = s; b; b &= b - 1) nbrs.push_back(std::countr_zero(b));
    Graph child = p.with_vertex(nbrs);
    Verdict v = accept(child, m, want_generators);
    if (v.accepted) emit(std::move(child), std::move(v.generators));
  }
}

}  // namespace

ConnectedEnumerator::ConnectedEnumerator(int n) : n_(n) {
  if (n < 1) throw InvalidGraph("enumeration order must be at least 1");
  if (n > 63) throw InvalidGraph("enumeration order must be at most 63");
  if (n == 1) return;
  std::vector<Node> level{{Graph(1), {}}};
  for (int k = 2; k < n; ++k) {
    std::vector<Node> next;
    for (const auto& node : level)
      extend(node, true, [&](Graph g, std::vector<std::vector<int>> gens) {
        next.push_back({std::move(g), std::move(gens)});
      });
    level = std::move(next);
  }
  parents_ = std::move(level);
}

void ConnectedEnumerator::generate(std::size_t begin, std::size_t end,
                                   const Sink& sink) const {
  if (n_ == 1) {
    if (begin == 0 && end >= 1) sink(Graph(1));
    return;
  }
  for (std::size_t i = begin; i < end && i < parents_.size(); ++i)
    extend(parents_[i], false,
           [&](Graph g, std::vector<std::vector<int>>) { sink(g); });
}

std::vector<ConnectedEnumerator::Node> ConnectedEnumerator::children(
    const Node& parent) {
  std::vector<Node> out;
  extend(parent, true, [&](Graph g, std::vector<std::vector<int>> gens) {
    out.push_back({std::move(g), std::move(gens)});
  });
  return out;
}

std::vector<Graph> connected_graphs(int n) {
  std::vector<Graph> out;
  enumerate_connected(n, [&](const Graph& g) { out.push_back(g); });
  return out;
}

void enumerate_connected(int n, const ConnectedEnumerator::Sink& sink) {
  ConnectedEnumerator(n).generate_all(sink);
}

}  // namespace bdmlab
