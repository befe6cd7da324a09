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

#include "bdmlab/graph6.hpp"

#include "bdmlab/error.hpp"

namespace bdmlab {

namespace {

bool printable(unsigned char c) { return c >= 63 && c <= 126; }

}  // namespace

Graph parse_graph6(std::string_view text) {
  if (text.empty()) throw ParseError("graph6: empty record");
  for (unsigned char c : text)
    if (!printable(c))
      throw ParseError("graph6: byte " + std::to_string(int{c}) +
                       " outside 63..126");

  std::size_t pos = 0;
  long long n = 0;
  if (static_cast<unsigned char>(text[0]) != 126) {
    n = static_cast<unsigned char>(text[0]) - 63;
    pos = 1;
  } else {
    if (text.size() >= 2 && static_cast<unsigned char>(text[1]) == 126)
      throw ParseError("graph6: orders above 258047 are not supported");
    if (text.size() < 4) throw ParseError("graph6: truncated order header");
    for (int i = 1; i <= 3; ++i)
      n = (n << 6) | (static_cast<unsigned char>(text[i]) - 63);
    if (n < 63) throw ParseError("graph6: non-canonical order header");
    pos = 4;
  }

  const long long pairs = n * (n - 1) / 2;
  const long long groups = (pairs + 5) / 6;
  if (static_cast<long long>(text.size() - pos) != groups)
    throw ParseError("graph6: expected " + std::to_string(groups) +
                     " data bytes for n=" + std::to_string(n) + ", got " +
                     std::to_string(text.size() - pos));

  Graph g(static_cast<int>(n));
  long long k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const unsigned char byte = text[pos + k / 6] - 63;
      if ((byte >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  if (k % 6 != 0) {
    const unsigned char last = text.back() - 63;
    const int pad = 6 - static_cast<int>(k % 6);
    if (last & ((1u << pad) - 1))
      throw ParseError("graph6: nonzero padding bits");
  }
  return g;
}

std::string write_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kGraph6MaxOrder) throw InvalidGraph("graph6: order too large");
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(static_cast<char>(126));
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

}  // namespace bdmlab
