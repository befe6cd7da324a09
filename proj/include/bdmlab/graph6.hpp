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

#include "bdmlab/graph.hpp"

namespace bdmlab {

// graph6 supports orders up to this bound (four-byte header form).
inline constexpr int kGraph6MaxOrder = 258047;

// Parses one graph6 record (no trailing newline). Throws ParseError.
Graph parse_graph6(std::string_view text);

// Encodes `g` as a graph6 record without the trailing newline.
std::string write_graph6(const Graph& g);

}  // namespace bdmlab
