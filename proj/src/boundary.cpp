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

#include "bdmlab/boundary.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "bdmlab/error.hpp"

namespace bdmlab {

VertexSet boundary_of(const Graph& g, const DistanceMatrix& d, Vertex u) {
  require_connected(g);
  VertexSet out;
  const auto du = d.row(u);
  for (Vertex v = 0; v < g.order(); ++v) {
    bool farther = false;
    g.for_each_neighbor(v, [&](Vertex w) { farther |= du[w] > du[v]; });
    if (!farther) out.push_back(v);
  }
  return out;
}

VertexSet boundary_set(const Graph& g, const DistanceMatrix& d) {
  require_connected(g);
  const int n = g.order();
  std::vector<bool> in(n, false);
  if (g.small()) {
    // Per source: layer masks by distance; v is maximally distant from u iff
    // no neighbor of v sits in the next layer.
    std::vector<std::uint64_t> layer(n + 1);
    for (Vertex u = 0; u < n; ++u) {
      std::fill(layer.begin(), layer.end(), 0);
      const auto du = d.row(u);
      for (Vertex v = 0; v < n; ++v) layer[du[v]] |= std::uint64_t{1} << v;
      for (Vertex v = 0; v < n; ++v)
        if (!in[v] && (g.mask(v) & layer[du[v] + 1]) == 0) in[v] = true;
    }
  } else {
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v : boundary_of(g, d, u)) in[v] = true;
  }
  VertexSet out;
  for (Vertex v = 0; v < n; ++v)
    if (in[v]) out.push_back(v);
  return out;
}

VertexSet boundary_set(const Graph& g) {
  return boundary_set(g, all_pairs_distances(g));
}

BoundaryDistanceMatrix bdm(const Graph& g, const DistanceMatrix& d) {
  BoundaryDistanceMatrix b;
  b.n = g.order();
  b.boundary = boundary_set(g, d);
  b.entries = d.principal(b.boundary);
  return b;
}

BoundaryDistanceMatrix bdm(const Graph& g) {
  return bdm(g, all_pairs_distances(g));
}

bool is_strong_resolving(const Graph& g, const DistanceMatrix& d,
                         const VertexSet& s) {
  require_connected(g);
  const int n = g.order();
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = x + 1; y < n; ++y) {
      const int dxy = d(x, y);
      const bool resolved = std::any_of(s.begin(), s.end(), [&](Vertex v) {
        return d(v, x) == d(v, y) + dxy || d(v, y) == d(v, x) + dxy;
      });
      if (!resolved) return false;
    }
  }
  return true;
}

bool is_strong_resolving(const Graph& g, const VertexSet& s) {
  return is_strong_resolving(g, all_pairs_distances(g), s);
}

void validate(const BoundaryDistanceMatrix& b) {
  const int k = b.kappa();
  if (b.entries.rows() != k || b.entries.cols() != k)
    throw ParseError("boundary matrix must be kappa x kappa");
  if (k > b.n) throw ParseError("boundary larger than n");
  for (int i = 0; i < k; ++i) {
    if (b.boundary[i] < 0 || b.boundary[i] >= b.n)
      throw ParseError("boundary label out of range");
    if (i > 0 && b.boundary[i] <= b.boundary[i - 1])
      throw ParseError("boundary labels must be distinct");
    if (b.entries(i, i) != 0) throw ParseError("nonzero diagonal entry");
    for (int j = 0; j < k; ++j) {
      if (b.entries(i, j) != b.entries(j, i))
        throw ParseError("boundary matrix is not symmetric");
      if (i != j && b.entries(i, j) < 1)
        throw ParseError("off-diagonal entries must be positive");
    }
  }
}

std::string format_bdm_record(const BoundaryDistanceMatrix& b) {
  std::string out = "n=" + std::to_string(b.n) + "; boundary=";
  for (int i = 0; i < b.kappa(); ++i) {
    if (i) out += ',';
    out += std::to_string(b.boundary[i] + 1);
  }
  out += "; rows=";
  for (int i = 0; i < b.kappa(); ++i) {
    if (i) out += ';';
    for (int j = 0; j < b.kappa(); ++j) {
      if (j) out += ',';
      out += std::to_string(b.entries(i, j));
    }
  }
  return out;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  while (true) {
    const auto pos = s.find(sep);
    out.push_back(trim(s.substr(0, pos)));
    if (pos == std::string_view::npos) break;
    s.remove_prefix(pos + 1);
  }
  return out;
}

int to_int(std::string_view s) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw ParseError("expected an integer, got '" + std::string(s) + "'");
  return value;
}

std::vector<int> int_list(std::string_view s) {
  std::vector<int> out;
  if (trim(s).empty()) return out;
  for (auto part : split(s, ',')) out.push_back(to_int(part));
  return out;
}

}  // namespace

BoundaryDistanceMatrix make_bdm(int n, const VertexSet& labels_one_based,
                                const std::vector<std::vector<int>>& rows) {
  const int k = static_cast<int>(labels_one_based.size());
  if (static_cast<int>(rows.size()) != k)
    throw ParseError("row count differs from boundary size");
  // Sort the labels, permuting the matrix along with them.
  std::vector<int> order(k);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return labels_one_based[a] < labels_one_based[b];
  });
  BoundaryDistanceMatrix b;
  b.n = n;
  b.entries = Matrix<int>::square(k);
  for (int i = 0; i < k; ++i) {
    b.boundary.push_back(labels_one_based[order[i]] - 1);
    if (static_cast<int>(rows[order[i]].size()) != k)
      throw ParseError("row length differs from boundary size");
    for (int j = 0; j < k; ++j) b.entries(i, j) = rows[order[i]][order[j]];
  }
  validate(b);
  return b;
}

BoundaryDistanceMatrix parse_bdm_record(std::string_view text) {
  int n = -1;
  VertexSet labels;
  std::vector<std::vector<int>> rows;
  bool have_boundary = false;
  bool have_rows = false;
  // Fields are separated by "; " but rows also use ';', so split on the
  // field names instead.
  const auto field = [&](std::string_view name) -> std::string_view {
    const auto pos = text.find(name);
    if (pos == std::string_view::npos) return {};
    auto rest = text.substr(pos + name.size());
    for (std::string_view next : {"n=", "boundary=", "rows="}) {
      if (next == name) continue;
      const auto stop = rest.find(next);
      if (stop != std::string_view::npos) rest = rest.substr(0, stop);
    }
    rest = trim(rest);
    while (!rest.empty() && rest.back() == ';') rest = trim(rest.substr(0, rest.size() - 1));
    return rest;
  };
  const auto n_text = field("n=");
  if (n_text.empty()) throw ParseError("record lacks n=");
  // "n=" also matches inside other names only if they contain it; none do.
  n = to_int(n_text);
  if (text.find("boundary=") != std::string_view::npos) {
    labels = int_list(field("boundary="));
    have_boundary = true;
  }
  if (text.find("rows=") != std::string_view::npos) {
    const auto body = field("rows=");
    if (!body.empty())
      for (auto r : split(body, ';')) rows.push_back(int_list(r));
    have_rows = true;
  }
  if (!have_boundary || !have_rows)
    throw ParseError("record needs boundary= and rows=");
  if (n < 1) throw ParseError("n must be positive");
  return make_bdm(n, labels, rows);
}

}  // namespace bdmlab
