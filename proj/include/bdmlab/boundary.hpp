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

#include <string>
#include <string_view>

#include "bdmlab/distance.hpp"
#include "bdmlab/graph.hpp"
#include "bdmlab/matrix.hpp"

namespace bdmlab {

// Distances among the boundary vertices of a graph, indexed by the original
// vertex labels, together with the order n of the whole graph.
struct BoundaryDistanceMatrix {
  int n = 0;
  VertexSet boundary;
  Matrix<int> entries;

  int kappa() const { return static_cast<int>(boundary.size()); }
  friend bool operator==(const BoundaryDistanceMatrix&,
                         const BoundaryDistanceMatrix&) = default;
};

// Vertices v none of whose neighbors is farther from u than v is.
VertexSet boundary_of(const Graph& g, const DistanceMatrix& d, Vertex u);

VertexSet boundary_set(const Graph& g, const DistanceMatrix& d);
VertexSet boundary_set(const Graph& g);

BoundaryDistanceMatrix bdm(const Graph& g, const DistanceMatrix& d);
BoundaryDistanceMatrix bdm(const Graph& g);

// Every pair x, y has some v in s with y on a v-x geodesic or x on a v-y
// geodesic, tested as d(v,x) = d(v,y) + d(y,x) or the symmetric identity.
bool is_strong_resolving(const Graph& g, const DistanceMatrix& d,
                         const VertexSet& s);
bool is_strong_resolving(const Graph& g, const VertexSet& s);

// Throws ParseError unless the matrix is square over the boundary, symmetric,
// zero on the diagonal, positive elsewhere, and the labels lie in [n].
void validate(const BoundaryDistanceMatrix& b);

// Text record `n=<int>; boundary=<labels>; rows=<r1;r2;...>` with 1-based
// labels and comma-separated entries.
std::string format_bdm_record(const BoundaryDistanceMatrix& b);
BoundaryDistanceMatrix parse_bdm_record(std::string_view text);

// Builds a matrix from rows given with 1-based boundary labels.
BoundaryDistanceMatrix make_bdm(int n, const VertexSet& labels_one_based,
                                const std::vector<std::vector<int>>& rows);

}  // namespace bdmlab
