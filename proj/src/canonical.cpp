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

#include "bdmlab/canonical.hpp"

#include <algorithm>
#include <numeric>

#include "bdmlab/graph6.hpp"

namespace bdmlab {

CanonicalSearch::CanonicalSearch(const Matrix<std::uint8_t>& m,
                                 std::span<const int> colors)
    : m_(m), n_(m.rows()) {
  int top = 0;
  for (auto v : m.data()) top = std::max<int>(top, v);
  values_ = top + 1;
  counts_.assign(static_cast<std::size_t>(n_) * values_, 0);
  uf_.resize(n_);

  root_.elems.resize(n_);
  root_.end.assign(n_, 0);
  std::iota(root_.elems.begin(), root_.elems.end(), 0);
  if (colors.empty()) {
    if (n_ > 0) {
      root_.end[0] = n_;
      root_.cells = 1;
    }
  } else {
    std::stable_sort(root_.elems.begin(), root_.elems.end(),
                     [&](int a, int b) { return colors[a] < colors[b]; });
    for (int s = 0; s < n_;) {
      int e = s + 1;
      while (e < n_ && colors[root_.elems[e]] == colors[root_.elems[s]]) ++e;
      root_.end[s] = e;
      ++root_.cells;
      s = e;
    }
  }
  refine(root_);
  root_cell_.assign(n_, 0);
  int index = 0;
  for (int s = 0; s < n_; s = root_.end[s], ++index)
    for (int q = s; q < root_.end[s]; ++q) root_cell_[root_.elems[q]] = index;
}

CanonicalLabeling CanonicalSearch::run() {
  CanonicalLabeling out;
  if (n_ == 0) return out;
  std::vector<int> path;
  search(root_, path);
  out.position.resize(n_);
  for (int p = 0; p < n_; ++p) out.position[best_elems_[p]] = p;
  out.form = best_form_;
  out.generators = std::move(generators_);
  std::iota(uf_.begin(), uf_.end(), 0);
  for (const auto& g : out.generators)
    for (int v = 0; v < n_; ++v) unite(v, g[v]);
  // unite() keeps the smaller index as root, so roots are orbit minima.
  out.orbit.resize(n_);
  for (int v = 0; v < n_; ++v) out.orbit[v] = find(v);
  return out;
}

bool CanonicalSearch::key_less(int a, int b) {
  const int* ka = count_row(a);
  const int* kb = count_row(b);
  return std::lexicographical_compare(ka, ka + values_, kb, kb + values_);
}

bool CanonicalSearch::key_equal(int a, int b) {
  const int* ka = count_row(a);
  const int* kb = count_row(b);
  return std::equal(ka, ka + values_, kb);
}

// Splits every cell by its members' value histograms against each splitter
// cell until nothing splits. Sub-cells are ordered by histogram, so the cell
// order depends only on the matrix up to relabeling.
void CanonicalSearch::refine(Partition& p) {
  bool changed = true;
  while (changed && p.cells < n_) {
    changed = false;
    for (int s = 0; s < n_ && p.cells < n_; s = p.end[s]) {
      std::fill(counts_.begin(), counts_.end(), 0);
      for (int q = s; q < p.end[s]; ++q) {
        const int w = p.elems[q];
        for (int v = 0; v < n_; ++v) ++count_row(v)[m_(v, w)];
      }
      for (int c = 0; c < n_; c = p.end[c]) {
        const int e = p.end[c];
        if (e - c < 2) continue;
        auto first = p.elems.begin() + c;
        auto last = p.elems.begin() + e;
        std::sort(first, last, [&](int a, int b) { return key_less(a, b); });
        if (key_equal(*first, *(last - 1))) continue;
        changed = true;
        int run = c;
        for (int q = c + 1; q <= e; ++q) {
          if (q == e || !key_equal(p.elems[q], p.elems[run])) {
            p.end[run] = q;
            if (run != c) ++p.cells;
            run = q;
          }
        }
      }
    }
  }
}

void CanonicalSearch::individualize(Partition& p, int s, int v) {
  const int e = p.end[s];
  auto it = std::find(p.elems.begin() + s, p.elems.begin() + e, v);
  std::iter_swap(p.elems.begin() + s, it);
  p.end[s] = s + 1;
  p.end[s + 1] = e;
  ++p.cells;
}

int CanonicalSearch::find(int v) {
  while (uf_[v] != v) v = uf_[v] = uf_[uf_[v]];
  return v;
}

void CanonicalSearch::unite(int a, int b) {
  a = find(a);
  b = find(b);
  if (a != b) uf_[std::max(a, b)] = std::min(a, b);
}

void CanonicalSearch::stabilizer_orbits(const std::vector<int>& path) {
  std::iota(uf_.begin(), uf_.end(), 0);
  for (const auto& g : generators_) {
    const bool fixes = std::all_of(path.begin(), path.end(),
                                   [&](int v) { return g[v] == v; });
    if (!fixes) continue;
    for (int v = 0; v < n_; ++v) unite(v, g[v]);
  }
  for (int v = 0; v < n_; ++v) find(v);
  orbit_cache_ = uf_;
}

int CanonicalSearch::root_of(int v) const {
  while (orbit_cache_[v] != v) v = orbit_cache_[v];
  return v;
}

void CanonicalSearch::leaf(const Partition& p) {
  form_.clear();
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      form_.push_back(m_(p.elems[i], p.elems[j]));
  if (first_elems_.empty()) {
    first_elems_ = p.elems;
    first_form_ = form_;
    best_elems_ = p.elems;
    best_form_ = form_;
    return;
  }
  // Leaves equivalent to the first leaf must always be recorded: that is what
  // makes the stored automorphisms generate the full group.
  if (form_ == first_form_) record(first_elems_, p.elems);
  if (form_ > best_form_) {
    best_form_ = form_;
    best_elems_ = p.elems;
  } else if (form_ == best_form_ && best_elems_ != first_elems_) {
    record(best_elems_, p.elems);
  }
}

void CanonicalSearch::record(const std::vector<int>& from,
                             const std::vector<int>& to) {
  std::vector<int> g(n_);
  bool identity = true;
  for (int q = 0; q < n_; ++q) {
    g[from[q]] = to[q];
    identity &= from[q] == to[q];
  }
  if (!identity) generators_.push_back(std::move(g));
}

void CanonicalSearch::search(Partition p, std::vector<int>& path) {
  if (!path.empty()) refine(p);
  if (p.cells == n_) {
    leaf(p);
    return;
  }
  int target = -1;
  int target_size = n_ + 1;
  for (int s = 0; s < n_; s = p.end[s]) {
    const int size = p.end[s] - s;
    if (size > 1 && size < target_size) {
      target = s;
      target_size = size;
    }
  }
  std::vector<int> cell(p.elems.begin() + target,
                        p.elems.begin() + p.end[target]);
  std::sort(cell.begin(), cell.end());
  std::vector<int> explored;
  std::size_t seen_generators = 0;
  for (int v : cell) {
    if (!explored.empty() && !generators_.empty()) {
      if (generators_.size() != seen_generators) {
        stabilizer_orbits(path);
        seen_generators = generators_.size();
      }
      const int root = root_of(v);
      if (std::any_of(explored.begin(), explored.end(),
                      [&](int u) { return root_of(u) == root; }))
        continue;
    }
    Partition child = p;
    individualize(child, target, v);
    path.push_back(v);
    search(std::move(child), path);
    path.pop_back();
    explored.push_back(v);
  }
}

Matrix<std::uint8_t> adjacency_matrix(const Graph& g) {
  const int n = g.order();
  auto m = Matrix<std::uint8_t>::square(n);
  for (Vertex u = 0; u < n; ++u)
    g.for_each_neighbor(u, [&](Vertex v) { m(u, v) = 1; });
  return m;
}

CanonicalLabeling canonical_labeling(const Matrix<std::uint8_t>& m,
                                     std::span<const int> colors) {
  return CanonicalSearch(m, colors).run();
}

CanonicalLabeling canonical_labeling(const Graph& g) {
  const auto m = adjacency_matrix(g);
  return canonical_labeling(m);
}

std::vector<VertexSet> equitable_partition(const Graph& g) {
  const auto m = adjacency_matrix(g);
  CanonicalSearch search(m);
  std::vector<VertexSet> cells(search.root_cell_count());
  for (Vertex v = 0; v < g.order(); ++v)
    cells[search.root_cell()[v]].push_back(v);
  return cells;
}

Certificate certificate(const Graph& g, const CanonicalLabeling& labeling) {
  return {write_graph6(g.relabeled(labeling.position))};
}

Certificate certificate(const Graph& g) {
  return certificate(g, canonical_labeling(g));
}

bool is_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  return certificate(a) == certificate(b);
}

}  // namespace bdmlab
