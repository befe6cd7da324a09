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

#include <cstddef>
#include <functional>
#include <vector>

#include "bdmlab/graph.hpp"

namespace bdmlab {

// Orderly generation of connected graphs, one per isomorphism class.
//
// A graph of order n is produced from a parent of order n-1 by adding a vertex
// adjacent to a nonempty subset S of the parent, with S taken once per orbit
// of the parent's automorphism group. The child is kept only when the new
// vertex lies in the automorphism orbit of the child's canonical deletion
// vertex: the highest canonically labeled non-cut vertex in the first root
// refinement cell that contains a non-cut vertex. No global seen-set is kept.
class ConnectedEnumerator {
 public:
  struct Node {
    Graph graph;
    std::vector<std::vector<int>> generators;
  };

  using Sink = std::function<void(const Graph&)>;

  // Builds every level below n; the parents of order n-1 are then available
  // for (parallel) generation of the last level.
  explicit ConnectedEnumerator(int n);

  int order() const { return n_; }
  std::size_t parent_count() const {
    return n_ == 1 ? 1 : parents_.size();
  }

  // Children of parents [begin, end), in deterministic order.
  void generate(std::size_t begin, std::size_t end, const Sink& sink) const;
  void generate_all(const Sink& sink) const {
    generate(0, parent_count(), sink);
  }

  // Accepted children of one node, with automorphism generators.
  static std::vector<Node> children(const Node& parent);

 private:
  int n_;
  std::vector<Node> parents_;
};

// All connected graphs of order n (one per isomorphism class).
std::vector<Graph> connected_graphs(int n);
void enumerate_connected(int n, const ConnectedEnumerator::Sink& sink);

}  // namespace bdmlab
