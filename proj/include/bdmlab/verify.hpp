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
#include <functional>
#include <string>
#include <vector>

#include "bdmlab/graph.hpp"

namespace bdmlab {

// Claim ids accepted by verify_claim, in catalog order.
const std::vector<std::string>& claim_ids();
// One-line statement of a claim.
std::string claim_statement(const std::string& id);

struct ClaimReport {
  std::string claim;
  std::uint64_t scanned = 0;
  // Graphs satisfying the claim's premise.
  std::uint64_t applicable = 0;
  std::vector<Graph> violations;
};

// Checks a catalog claim on every graph; throws Error for an unknown id.
// Graphs must be connected. Violations keep input order.
ClaimReport verify_claim(const std::string& id, const std::vector<Graph>& graphs,
                         int jobs = 1);

// Ad hoc claim: `holds` returns false on a counterexample.
ClaimReport verify_predicate(const std::string& name,
                             const std::vector<Graph>& graphs,
                             const std::function<bool(const Graph&)>& holds);

}  // namespace bdmlab
