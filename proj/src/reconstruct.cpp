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

#include "bdmlab/reconstruct.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>

#include "bdmlab/canonical.hpp"
#include "bdmlab/distance.hpp"
#include "bdmlab/error.hpp"
#include "bdmlab/families.hpp"

namespace bdmlab {

SVMatrix sv_matrix(const Graph& g, const VertexSet& s) {
  require_connected(g);
  SVMatrix m;
  m.s = s;
  m.n = g.order();
  m.entries = Matrix<int>(static_cast<int>(s.size()), g.order());
  for (std::size_t i = 0; i < s.size(); ++i) {
    const auto row = bfs_distances(g, s[i]);
    std::copy(row.begin(), row.end(), m.entries.row(static_cast<int>(i)).begin());
  }
  return m;
}

Graph graph_from_SV(const SVMatrix& m) {
  const int k = static_cast<int>(m.s.size());
  const int n = m.n;
  if (n < 1 || k < 1) throw NotRealizable("empty SV matrix");
  if (m.entries.rows() != k || m.entries.cols() != n)
    throw NotRealizable("SV matrix must be |S| x n");
  for (int i = 0; i < k; ++i) {
    if (m.s[i] < 0 || m.s[i] >= n)
      throw NotRealizable("resolving vertex out of range");
    if (m.entries(i, m.s[i]) != 0)
      throw NotRealizable("row of s must be 0 at column s");
    for (int j = 0; j < k; ++j) {
      if (i != j && m.s[i] == m.s[j])
        throw NotRealizable("repeated resolving vertex");
      if (m.entries(i, m.s[j]) != m.entries(j, m.s[i]))
        throw NotRealizable("SV matrix not symmetric on S");
    }
    for (int x = 0; x < n; ++x)
      if (m.entries(i, x) < 0 || m.entries(i, x) == kUnreachable)
        throw NotRealizable("SV entries must be finite distances");
  }
  DistanceMatrix d = DistanceMatrix::square(n);
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      int best = 0;
      for (int i = 0; i < k; ++i)
        best = std::max(best, std::abs(m.entries(i, x) - m.entries(i, y)));
      d(x, y) = d(y, x) = best;
    }
  Graph g(n);
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if (d(x, y) == 1) g.add_edge(x, y);
  if (!is_connected(g)) throw NotRealizable("rebuilt graph is disconnected");
  if (all_pairs_distances(g) != d)
    throw NotRealizable("rows are not distances from a strong resolving set");
  return g;
}

Graph tree_from_leaf_distances(const Matrix<int>& m, std::optional<int> n) {
  const int k = m.rows();
  if (k < 1 || m.cols() != k) throw NotRealizable("leaf matrix must be square");
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      if (m(i, j) != m(j, i)) throw NotRealizable("leaf matrix not symmetric");
      if ((i == j) != (m(i, j) == 0) || m(i, j) < 0)
        throw NotRealizable("leaf distances must be positive off the diagonal");
    }
  if (k == 1) {
    if (n && *n != 1) throw NotRealizable("a single leaf means n = 1");
    return Graph(1);
  }
  std::vector<std::vector<int>> adj(k);
  const auto fresh = [&] {
    adj.emplace_back();
    return static_cast<int>(adj.size()) - 1;
  };
  const auto link = [&](int u, int v) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  };
  // Path of `len` edges from `from` ending in the existing vertex `to`.
  const auto hang = [&](int from, int to, int len) {
    int prev = from;
    for (int step = 1; step < len; ++step) {
      const int mid = fresh();
      link(prev, mid);
      prev = mid;
    }
    link(prev, to);
  };
  const auto path_between = [&](int s, int t) {
    std::vector<int> parent(adj.size(), -1);
    parent[s] = s;
    std::vector<int> queue{s};
    for (std::size_t head = 0; head < queue.size(); ++head)
      for (int w : adj[queue[head]])
        if (parent[w] < 0) {
          parent[w] = queue[head];
          queue.push_back(w);
        }
    std::vector<int> path{t};
    while (path.back() != s) path.push_back(parent[path.back()]);
    std::reverse(path.begin(), path.end());
    return path;
  };

  hang(0, 1, m(0, 1));
  for (int c = 2; c < k; ++c) {
    int best = -1;
    int best_leaf = -1;
    for (int b = 1; b < c; ++b) {
      const int twice = m(0, c) + m(0, b) - m(b, c);
      if (twice < 0 || twice % 2 != 0)
        throw NotRealizable("leaf distances violate the four-point parity");
      if (twice / 2 > best) {
        best = twice / 2;
        best_leaf = b;
      }
    }
    const int pendant = m(0, c) - best;
    if (best == 0 || best >= m(0, best_leaf) || pendant < 1)
      throw NotRealizable("a leaf would become an internal vertex");
    const auto path = path_between(0, best_leaf);
    hang(c, path[best], pendant);
  }

  const int order = static_cast<int>(adj.size());
  std::vector<Edge> edges;
  for (int u = 0; u < order; ++u)
    for (int v : adj[u])
      if (u < v) edges.emplace_back(u, v);
  const Graph t = Graph::from_edges(order, edges);
  for (int leaf = 0; leaf < k; ++leaf) {
    if (t.degree(leaf) != 1) throw NotRealizable("leaf ended up internal");
    const auto d = bfs_distances(t, leaf);
    for (int other = 0; other < k; ++other)
      if (d[other] != m(leaf, other))
        throw NotRealizable("no tree has these leaf distances");
  }
  if (n && *n != order)
    throw NotRealizable("leaf distances imply " + std::to_string(order) +
                        " vertices, not " + std::to_string(*n));
  return t;
}

namespace {

class ConsistentSearch {
 public:
  ConsistentSearch(const BoundaryDistanceMatrix& b,
                   const ConsistentOptions& options, bool stop_at_cap)
      : b_(b), options_(options), stop_at_cap_(stop_at_cap), g_(b.n) {
    validate(b);
    if (b.n > 64) throw InfeasibleSearch("consistency search needs n <= 64");
    const int k = b.kappa();
    std::vector<bool> on(b.n, false);
    for (Vertex v : b.boundary) on[v] = true;
    for (Vertex v = 0; v < b.n; ++v)
      if (!on[v]) hidden_.push_back(v);
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j)
        if (b.entries(i, j) == 1) g_.add_edge(b.boundary[i], b.boundary[j]);
    index_.assign(b.n, -1);
    for (int i = 0; i < k; ++i) index_[b.boundary[i]] = i;
  }

  std::vector<Graph> run() {
    if (distances_too_short()) return {};
    place(0);
    std::vector<Graph> out;
    for (auto& [cert, g] : found_) out.push_back(std::move(g));
    return out;
  }

 private:
  // Distances only shrink as edges are added, so a boundary pair that is
  // already too close can never be repaired.
  bool distances_too_short() const {
    const int k = b_.kappa();
    for (int i = 0; i < k; ++i) {
      const auto d = bfs_distances(g_, b_.boundary[i]);
      for (int j = i + 1; j < k; ++j)
        if (d[b_.boundary[j]] < b_.entries(i, j)) return true;
    }
    return false;
  }

  void tick() {
    if (++nodes_ > options_.node_budget)
      throw InfeasibleSearch("consistency search exceeded its node budget");
  }

  void place(std::size_t i) {
    if (done_) return;
    tick();
    if (i == hidden_.size()) {
      finish();
      return;
    }
    // Earlier vertices available as neighbors of hidden_[i].
    std::vector<Vertex> pool(b_.boundary.begin(), b_.boundary.end());
    pool.insert(pool.end(), hidden_.begin(), hidden_.begin() + i);
    std::vector<Vertex> chosen;
    choose(i, pool, 0, chosen);
  }

  void choose(std::size_t i, const std::vector<Vertex>& pool, std::size_t at,
              std::vector<Vertex>& chosen) {
    if (done_) return;
    if (at == pool.size()) {
      const Vertex h = hidden_[i];
      for (Vertex w : chosen) g_.add_edge(h, w);
      if (!distances_too_short()) place(i + 1);
      for (Vertex w : chosen) g_.remove_edge(h, w);
      return;
    }
    choose(i, pool, at + 1, chosen);
    const Vertex v = pool[at];
    // Two boundary neighbors of one vertex are at distance at most 2.
    if (index_[v] >= 0)
      for (Vertex w : chosen)
        if (index_[w] >= 0 && b_.entries(index_[v], index_[w]) > 2) return;
    chosen.push_back(v);
    choose(i, pool, at + 1, chosen);
    chosen.pop_back();
  }

  void finish() {
    if (!is_connected(g_)) return;
    const auto d = all_pairs_distances(g_);
    const int k = b_.kappa();
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j)
        if (d(b_.boundary[i], b_.boundary[j]) != b_.entries(i, j)) return;
    if (boundary_set(g_, d) != b_.boundary) return;
    if (options_.accept && !options_.accept(g_)) return;
    auto cert = certificate(g_);
    if (found_.count(cert)) return;
    if (found_.size() == options_.cap) {
      if (stop_at_cap_) {
        done_ = true;
        return;
      }
      throw CapExceeded("more than " + std::to_string(options_.cap) +
                        " isomorphism classes");
    }
    found_.emplace(std::move(cert), g_);
  }

  const BoundaryDistanceMatrix& b_;
  const ConsistentOptions& options_;
  bool stop_at_cap_;
  Graph g_;
  std::vector<Vertex> hidden_;
  std::vector<int> index_;
  std::map<Certificate, Graph> found_;
  std::uint64_t nodes_ = 0;
  bool done_ = false;
};

}  // namespace

std::vector<Graph> consistent_graphs(const BoundaryDistanceMatrix& b,
                                     const ConsistentOptions& options) {
  return ConsistentSearch(b, options, false).run();
}

std::vector<Graph> consistent_graphs(const BoundaryDistanceMatrix& b,
                                     std::size_t cap) {
  ConsistentOptions options;
  options.cap = cap;
  return consistent_graphs(b, options);
}

namespace {

bool ptolemaic(const Graph& g) {
  return is_chordal(g) && is_distance_hereditary(g);
}

// Peeling state. `known` holds the non-cut vertices of the graph that is
// left; every vertex seen so far has a complete row in `dist`.
struct PeelState {
  Matrix<int> dist;
  std::vector<int> known;
  std::vector<std::pair<int, int>> removed;  // (vertex, attachment)
  std::size_t placed = 0;
};

class Peeler {
 public:
  Peeler(const BoundaryDistanceMatrix& b, std::uint64_t budget)
      : b_(b), budget_(budget) {
    std::vector<bool> on(b.n, false);
    for (Vertex v : b.boundary) on[v] = true;
    for (Vertex v = 0; v < b.n; ++v)
      if (!on[v]) hidden_.push_back(v);
  }

  std::optional<Graph> run() {
    PeelState s;
    s.dist = Matrix<int>(b_.n, b_.n, -1);
    const int k = b_.kappa();
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j)
        s.dist(b_.boundary[i], b_.boundary[j]) = b_.entries(i, j);
    s.known = b_.boundary;
    return step(s);
  }

 private:
  struct Candidate {
    std::vector<int> members;
    std::vector<int> row;  // distances to s.known, by position
    int depth = 0;
  };

  std::optional<Graph> step(const PeelState& s) {
    if (++steps_ > budget_) return std::nullopt;
    if (s.placed == hidden_.size()) return finish(s);
    const auto key = state_key(s);
    if (failed_.count(key)) return std::nullopt;
    for (const Candidate& c : candidates(s)) {
      PeelState next = s;
      const int v = hidden_[s.placed];
      ++next.placed;
      for (std::size_t i = 0; i < s.known.size(); ++i)
        next.dist(v, s.known[i]) = next.dist(s.known[i], v) = c.row[i];
      next.dist(v, v) = 0;
      for (auto it = s.removed.rbegin(); it != s.removed.rend(); ++it) {
        const auto [x, p] = *it;
        next.dist(v, x) = next.dist(x, v) = next.dist(v, p) + next.dist(p, x);
      }
      next.known.clear();
      for (int x : s.known)
        if (!std::binary_search(c.members.begin(), c.members.end(), x))
          next.known.push_back(x);
        else
          next.removed.emplace_back(x, v);
      next.known.push_back(v);
      if (auto g = step(next)) return g;
    }
    failed_.insert(key);
    return std::nullopt;
  }

  // The known vertices identified by their distances to the boundary.
  std::vector<std::vector<int>> state_key(const PeelState& s) const {
    std::vector<std::vector<int>> key;
    for (int x : s.known) {
      std::vector<int> row;
      for (Vertex v : b_.boundary) row.push_back(s.dist(x, v));
      key.push_back(std::move(row));
    }
    std::sort(key.begin(), key.end());
    return key;
  }

  std::vector<Candidate> candidates(const PeelState& s) const {
    const int m = static_cast<int>(s.known.size());
    const auto d = [&](int i, int j) { return s.dist(s.known[i], s.known[j]); };
    std::vector<int> comp(m, -1);
    int comps = 0;
    for (int i = 0; i < m; ++i) {
      if (comp[i] >= 0) continue;
      std::vector<int> queue{i};
      comp[i] = comps;
      for (std::size_t head = 0; head < queue.size(); ++head)
        for (int j = 0; j < m; ++j)
          if (comp[j] < 0 && d(queue[head], j) == 1) {
            comp[j] = comps;
            queue.push_back(j);
          }
      ++comps;
    }
    // Each component that sees the rest through a single vertex proposes
    // that vertex; components proposing the same vertex are peeled together.
    std::map<std::vector<int>, std::vector<int>> groups;
    for (int c = 0; c < comps; ++c) {
      std::vector<int> in, out;
      for (int i = 0; i < m; ++i) (comp[i] == c ? in : out).push_back(i);
      if (out.empty()) continue;
      bool single = true;
      for (int y : out)
        for (int x : in)
          single = single && d(x, y) - d(in[0], y) == d(x, out[0]) - d(in[0], out[0]);
      if (!single) continue;
      std::vector<int> row(m);
      int lowest = kUnreachable;
      for (int x : in) lowest = std::min(lowest, d(x, out[0]));
      for (int x : in) row[x] = d(x, out[0]) - lowest + 1;
      bool ok = true;
      for (int y : out) {
        int near = kUnreachable;
        for (int x : in) near = std::min(near, d(x, y));
        row[y] = near - 1;
        ok = ok && row[y] >= 1;
      }
      for (int i = 0; i < m && ok; ++i)
        for (int j = i + 1; j < m && ok; ++j)
          ok = std::abs(row[i] - row[j]) <= d(i, j) && d(i, j) <= row[i] + row[j];
      if (!ok) continue;
      auto& members = groups[row];
      for (int x : in) members.push_back(s.known[x]);
    }
    std::vector<Candidate> out;
    for (auto& [row, members] : groups) {
      Candidate c;
      c.members = members;
      std::sort(c.members.begin(), c.members.end());
      c.row = row;
      c.depth = row[0];
      out.push_back(std::move(c));
    }
    // Deepest attachment (seen from the first known vertex) first: it hangs
    // only leaf blocks besides its parent block.
    std::stable_sort(out.begin(), out.end(),
                     [](const Candidate& a, const Candidate& b) {
                       return a.depth > b.depth;
                     });
    return out;
  }

  std::optional<Graph> finish(const PeelState& s) const {
    const int n = b_.n;
    Graph g(n);
    for (int x = 0; x < n; ++x)
      for (int y = x + 1; y < n; ++y) {
        if (s.dist(x, y) < 0) return std::nullopt;
        if (s.dist(x, y) == 1) g.add_edge(x, y);
      }
    if (!is_connected(g)) return std::nullopt;
    const auto d = all_pairs_distances(g);
    if (d != s.dist) return std::nullopt;
    if (bdm(g, d) != b_ || !ptolemaic(g)) return std::nullopt;
    return g;
  }

  const BoundaryDistanceMatrix& b_;
  std::uint64_t budget_;
  std::uint64_t steps_ = 0;
  std::vector<Vertex> hidden_;
  std::set<std::vector<std::vector<int>>> failed_;
};

}  // namespace

std::optional<Graph> peel_ptolemaic(const BoundaryDistanceMatrix& b,
                                    std::uint64_t step_budget) {
  validate(b);
  return Peeler(b, step_budget).run();
}

Graph reconstruct_ptolemaic(const BoundaryDistanceMatrix& b) {
  if (auto g = peel_ptolemaic(b)) return *g;
  ConsistentOptions options;
  options.cap = 1;
  options.accept = ptolemaic;
  std::vector<Graph> found;
  try {
    found = consistent_graphs(b, options);
  } catch (const CapExceeded&) {
    throw TheoremViolation(
        "two non-isomorphic Ptolemaic graphs share this boundary matrix: " +
        format_bdm_record(b));
  }
  if (found.empty())
    throw NotRealizable("no Ptolemaic graph has this boundary matrix");
  return found.front();
}

BdmVerdict bdm_verdict(const Graph& g, const ConsistentOptions& options) {
  require_connected(g);
  BdmVerdict verdict;
  const auto b = bdm(g);
  if (b.kappa() == g.order()) {
    // Every vertex is a boundary vertex, so the unit entries are the edges.
    verdict.witnesses.push_back(g);
    return verdict;
  }
  ConsistentOptions opts = options;
  opts.cap = std::max<std::size_t>(opts.cap, 2);
  verdict.witnesses = ConsistentSearch(b, opts, true).run();
  if (verdict.witnesses.size() > 1)
    verdict.status = BdmVerdict::Status::kNotBdm;
  return verdict;
}

bool is_irrelevant_edge(const Graph& g, Vertex x, Vertex y) {
  if (x < 0 || y < 0 || x >= g.order() || y >= g.order() || !g.has_edge(x, y))
    throw InvalidGraph("is_irrelevant_edge needs an edge");
  Graph h = g;
  h.remove_edge(x, y);
  const auto d = bfs_distances(h, y);
  bool ok = true;
  g.for_each_neighbor(x, [&](Vertex z) { ok = ok && d[z] <= 2; });
  return ok;
}

}  // namespace bdmlab
