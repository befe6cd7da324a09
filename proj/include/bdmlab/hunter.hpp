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
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "bdmlab/boundary.hpp"
#include "bdmlab/families.hpp"
#include "bdmlab/graph.hpp"
#include "bdmlab/matrix.hpp"

namespace bdmlab {

// Isomorphism-invariant name of a boundary distance matrix: n, kappa and the
// canonical form of the kappa x kappa matrix under simultaneous row/column
// permutation.
struct CollisionKey {
  int n = 0;
  int kappa = 0;
  std::vector<std::uint8_t> form;

  std::vector<std::uint8_t> bytes() const;
  std::string hex() const;
  // The canonically ordered matrix the form encodes.
  Matrix<int> matrix() const;

  friend bool operator==(const CollisionKey& a, const CollisionKey& b) {
    return a.bytes() == b.bytes();
  }
  friend auto operator<=>(const CollisionKey& a, const CollisionKey& b) {
    return a.bytes() <=> b.bytes();
  }
};

CollisionKey canonical_bdm_key(const BoundaryDistanceMatrix& b);

// Order-invariant digest used to bucket graphs before exact keys are built.
std::uint64_t bdm_fingerprint(const BoundaryDistanceMatrix& b);

struct CollisionClass {
  CollisionKey key;
  std::vector<std::string> members;  // graph6, sorted
  std::vector<FamilyFlags> flags;
  std::vector<int> diameters;
};

struct HuntOptions {
  // Names from family_names(); a graph must carry all of them.
  std::vector<std::string> families;
  std::optional<int> diameter;
  int jobs = 1;
  // Two-pass mode: first pass writes fingerprint shards here.
  std::optional<std::filesystem::path> shard_dir;
  int shards = 64;
  // Skip unparsable stream lines instead of failing.
  bool skip_bad = false;
  std::size_t chunk = 512;
};

struct HuntReport {
  std::string input;
  std::vector<std::string> filters;
  std::uint64_t scanned = 0;
  std::uint64_t passed = 0;
  std::uint64_t skipped = 0;  // bad or disconnected records
  std::uint64_t checksum = 0;  // FNV-1a over the graph6 lines, stream order
  std::vector<std::string> errors;
  std::vector<CollisionClass> classes;
  double seconds = 0;  // wall clock; not part of the serialized report
};

// All connected graphs of orders n_min..n_max from the built-in enumerator.
HuntReport hunt_enumerated(int n_min, int n_max, const HuntOptions& options);
// One graph6 record per line; a leading ">>graph6<<" header is skipped.
HuntReport hunt_stream(std::istream& in, const std::string& description,
                       const HuntOptions& options);
HuntReport hunt_graphs(const std::vector<Graph>& graphs,
                       const std::string& description,
                       const HuntOptions& options);

// Line-delimited records: one per class, then a summary record.
void write_hunt_report(const HuntReport& report, std::ostream& out);

// Non-isomorphic g, h of equal order and boundary number where some
// kappa-subset of h other than its boundary has the same distance matrix as
// the boundary of g, up to relabeling.
struct KappaPair {
  Graph g;
  Graph h;
  VertexSet h_subset;
};

std::vector<KappaPair> kappa_only_hunt(int n);

std::uint64_t fnv1a64(std::string_view bytes,
                      std::uint64_t seed = 14695981039346656037ull);

}  // namespace bdmlab
