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

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "bdmlab/graph.hpp"
#include "bdmlab/matrix.hpp"

namespace bdmlab {

// Canonical labeling of a symmetric matrix with small entries, computed by
// equitable-partition refinement plus individualization search. Pruning
// uses the automorphisms found so far; the stored generators span the whole
// automorphism group.
struct CanonicalLabeling {
  // vertex -> canonical position
  std::vector<int> position;
  // vertex -> smallest vertex of its automorphism orbit
  std::vector<int> orbit;
  std::vector<std::vector<int>> generators;
  // Strict upper triangle of the canonically permuted matrix, row-major.
  std::vector<std::uint8_t> form;
};

// One labeling run. Constructing it refines the root partition, which callers
// may inspect (root_cell) before paying for the search in run().
class CanonicalSearch {
 public:
  // `m` must outlive the search.
  explicit CanonicalSearch(const Matrix<std::uint8_t>& m,
                           std::span<const int> colors = {});

  // Root cell index of each vertex; cells are numbered in their
  // label-invariant order.
  const std::vector<int>& root_cell() const { return root_cell_; }
  int root_cell_count() const { return root_.cells; }

  CanonicalLabeling run();

 private:
  struct Partition {
    std::vector<int> elems;
    std::vector<int> end;
    int cells = 0;
  };

  int* count_row(int v) {
    return counts_.data() + static_cast<std::size_t>(v) * values_;
  }
  bool key_less(int a, int b);
  bool key_equal(int a, int b);
  void refine(Partition& p);
  void individualize(Partition& p, int s, int v);
  int find(int v);
  void unite(int a, int b);
  void stabilizer_orbits(const std::vector<int>& path);
  int root_of(int v) const;
  void leaf(const Partition& p);
  void record(const std::vector<int>& from, const std::vector<int>& to);
  void search(Partition p, std::vector<int>& path);

  const Matrix<std::uint8_t>& m_;
  int n_;
  int values_ = 1;
  std::vector<int> counts_;
  std::vector<int> uf_;
  std::vector<int> orbit_cache_;
  Partition root_;
  std::vector<int> root_cell_;
  std::vector<std::vector<int>> generators_;
  std::vector<int> first_elems_;
  std::vector<std::uint8_t> first_form_;
  std::vector<int> best_elems_;
  std::vector<std::uint8_t> best_form_;
  std::vector<std::uint8_t> form_;
};

// `colors` (optional) gives an initial vertex coloring that automorphisms
// must preserve; cells are ordered by ascending color.
CanonicalLabeling canonical_labeling(const Matrix<std::uint8_t>& m,
                                     std::span<const int> colors = {});
CanonicalLabeling canonical_labeling(const Graph& g);

// Cells of the coarsest equitable partition refining the unit partition,
// in the label-invariant order the canonical search uses.
std::vector<VertexSet> equitable_partition(const Graph& g);

Matrix<std::uint8_t> adjacency_matrix(const Graph& g);

// Byte string identifying an isomorphism class: the graph6 encoding of the
// canonically relabeled graph.
struct Certificate {
  std::string bytes;
  friend auto operator<=>(const Certificate&, const Certificate&) = default;
};

Certificate certificate(const Graph& g);
Certificate certificate(const Graph& g, const CanonicalLabeling& labeling);
bool is_isomorphic(const Graph& a, const Graph& b);

}  // namespace bdmlab
