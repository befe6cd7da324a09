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

#include "bdmlab/verify.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include "bdmlab/blocks.hpp"
#include "bdmlab/boundary.hpp"
#include "bdmlab/distance.hpp"
#include "bdmlab/error.hpp"
#include "bdmlab/families.hpp"
#include "bdmlab/graph6.hpp"
#include "bdmlab/hunter.hpp"
#include "bdmlab/reconstruct.hpp"
#include "parallel.hpp"

namespace bdmlab {
namespace {

// nullopt: premise does not apply. false: counterexample.
using Check = std::function<std::optional<bool>(const Graph&)>;

struct Claim {
  std::string id;
  std::string statement;
  Check check;  // empty for claims evaluated over the whole stream
};

VertexSet minus(int n, const VertexSet& a, const VertexSet& b = {}) {
  VertexSet out;
  for (Vertex v = 0; v < n; ++v)
    if (!std::binary_search(a.begin(), a.end(), v) &&
        !std::binary_search(b.begin(), b.end(), v))
      out.push_back(v);
  return out;
}

const std::vector<Claim>& catalog() {
  static const std::vector<Claim> claims{
      {"L5.1", "every peripheral vertex is a boundary vertex",
       [](const Graph& g) -> std::optional<bool> {
         const auto d = all_pairs_distances(g);
         const auto b = boundary_set(g, d);
         for (Vertex v : eccentricity_profile(g, d).peripheral)
           if (!std::binary_search(b.begin(), b.end(), v)) return false;
         return true;
       }},
      {"L5.2", "rad = diam implies kappa = n",
       [](const Graph& g) -> std::optional<bool> {
         const auto d = all_pairs_distances(g);
         const auto p = eccentricity_profile(g, d);
         if (p.radius != p.diameter) return std::nullopt;
         return static_cast<int>(boundary_set(g, d).size()) == g.order();
       }},
      {"L5.3",
       "diam = 2 implies kappa in {n-1, n}, and kappa = n-1 iff the center "
       "is a single vertex",
       [](const Graph& g) -> std::optional<bool> {
         const auto d = all_pairs_distances(g);
         const auto p = eccentricity_profile(g, d);
         if (p.diameter != 2) return std::nullopt;
         const int k = static_cast<int>(boundary_set(g, d).size());
         const int n = g.order();
         return (k == n - 1 || k == n) &&
                ((k == n - 1) == (p.central.size() == 1));
       }},
      {"T1-strong-resolving", "the boundary is a strong resolving set",
       [](const Graph& g) -> std::optional<bool> {
         const auto d = all_pairs_distances(g);
         return is_strong_resolving(g, d, boundary_set(g, d));
       }},
      {"T7-diam2", "every graph of diameter 2 is a BDM graph",
       [](const Graph& g) -> std::optional<bool> {
         const auto d = all_pairs_distances(g);
         if (eccentricity_profile(g, d).diameter != 2) return std::nullopt;
         return bdm_verdict(g).is_bdm();
       }},
      {"T10-irrelevant",
       "if the boundary misses exactly one vertex v, the graph is BDM or "
       "some edge vh is v-irrelevant",
       [](const Graph& g) -> std::optional<bool> {
         const auto b = boundary_set(g);
         if (static_cast<int>(b.size()) != g.order() - 1) return std::nullopt;
         const Vertex v = minus(g.order(), b).front();
         for (Vertex h : g.neighbors(v))
           if (is_irrelevant_edge(g, v, h)) return true;
         return bdm_verdict(g).is_bdm();
       }},
      {"PTOL-boundary",
       "in a Ptolemaic graph the boundary is every vertex but the cut vertices",
       [](const Graph& g) -> std::optional<bool> {
         if (!is_chordal(g) || !is_distance_hereditary(g)) return std::nullopt;
         return boundary_set(g) == minus(g.order(), cut_vertices(g));
       }},
      {"INT-boundary",
       "in an interval graph the boundary is every vertex but the cut "
       "vertices and 3-fan centers",
       [](const Graph& g) -> std::optional<bool> {
         if (!is_interval(g)) return std::nullopt;
         return boundary_set(g) ==
                minus(g.order(), cut_vertices(g), fan3_centers(g));
       }},
      {"C12-interval-evidence",
       "no two non-isomorphic interval graphs share a boundary distance "
       "matrix",
       {}},
  };
  return claims;
}

const Claim& find_claim(const std::string& id) {
  for (const auto& c : catalog())
    if (c.id == id) return c;
  throw Error("unknown claim '" + id + "'");
}

}  // namespace

const std::vector<std::string>& claim_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& c : catalog()) out.push_back(c.id);
    return out;
  }();
  return ids;
}

std::string claim_statement(const std::string& id) {
  return find_claim(id).statement;
}

ClaimReport verify_claim(const std::string& id, const std::vector<Graph>& graphs,
                         int jobs) {
  const Claim& claim = find_claim(id);
  ClaimReport report;
  report.claim = id;
  report.scanned = graphs.size();
  for (const Graph& g : graphs) require_connected(g);
  if (!claim.check) {
    // Stream-wide claim: group the interval graphs by boundary matrix.
    HuntOptions options;
    options.families = {"interval"};
    options.jobs = jobs;
    const HuntReport hunt = hunt_graphs(graphs, id, options);
    report.applicable = hunt.passed;
    std::vector<std::string> members;
    for (const auto& c : hunt.classes)
      members.insert(members.end(), c.members.begin(), c.members.end());
    for (const Graph& g : graphs)
      if (std::find(members.begin(), members.end(), write_graph6(g)) !=
          members.end())
        report.violations.push_back(g);
    return report;
  }
  std::vector<std::optional<bool>> verdicts(graphs.size());
  parallel_for(graphs.size(), jobs,
               [&](std::size_t i) { verdicts[i] = claim.check(graphs[i]); });
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    if (!verdicts[i]) continue;
    ++report.applicable;
    if (!*verdicts[i]) report.violations.push_back(graphs[i]);
  }
  return report;
}

ClaimReport verify_predicate(const std::string& name,
                             const std::vector<Graph>& graphs,
                             const std::function<bool(const Graph&)>& holds) {
  ClaimReport report;
  report.claim = name;
  report.scanned = graphs.size();
  report.applicable = graphs.size();
  for (const Graph& g : graphs)
    if (!holds(g)) report.violations.push_back(g);
  return report;
}

}  // namespace bdmlab
