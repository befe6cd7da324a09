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

#include <iosfwd>
#include <string>
#include <vector>

namespace bdmlab::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kFailure = 1;  // I/O, parse and search errors
inline constexpr int kFound = 2;    // hunt classes or claim violations
inline constexpr int kUsage = 64;

// Runs one subcommand. args excludes the program name. Reports go to `out`
// unless --out names a file; diagnostics and timings go to `err`.
int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err);

int run(int argc, char** argv);

}  // namespace bdmlab::cli
