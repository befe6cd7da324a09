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

#include "bdmlab/families.hpp"

#include <algorithm>
#include <set>
#include <numeric>

#include "bdmlab/blocks.hpp"
#include "bdmlab/distance.hpp"
#include "bdmlab/error.hpp"

namespace bdmlab {

const std::vector<std::string>& family_names() {
  static const std::vector<std::string> names{
      "bipartite",  "chordal",     "split", "distance_hereditary",
      "ptolemaic",  "interval",    "block_graph", "tree", "unicyclic"};
  return names;
}

std::optional<bool> family_flag(const FamilyFlags& f, const std::string& name) {
  if (name == "bipartite") return f.bipartite;
  if (name == "chordal") return f.chordal;
  if (name == "split") return f.split;
  if (name == "distance_hereditary" || name == "dh") return f.distance_hereditary;
  if (name == "ptolemaic") return f.ptolemaic;
  if (name == "interval") return f.interval;
  if (name == "block_graph" || name == "block") return f.block_graph;
  if (name == "tree") return f.tree;
  if (name == "unicyclic") return f.unicyclic;
  return std::nullopt;
}

bool is_bipartite(const Graph& g) {
  const int n = g.order();
  std::vector<int> color(n, -1);
  for (Vertex s = 0; s < n; ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    std::vector<Vertex> queue{s};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex u = queue[head];
      bool clash = false;
      g.for_each_neighbor(u, [&](Vertex v) {
        if (color[v] < 0) {
          color[v] = 1 - color[u];
          queue.push_back(v);
        } else if (color[v] == color[u]) {
          clash = true;
        }
      });
      if (clash) return false;
    }
  }
  return true;
}

std::vector<Vertex> lex_bfs(const Graph& g) {
  const int n = g.order();
  // Labels are decreasing sequences of visit stamps; larger wins.
  std::vector<std::vector<int>> label(n);
  std::vector<bool> done(n, false);
  std::vector<Vertex> order;
  for (int step = 0; step < n; ++step) {
    Vertex pick = -1;
    for (Vertex v = 0; v < n; ++v)
      if (!done[v] && (pick < 0 || label[v] > label[pick])) pick = v;
    done[pick] = true;
    order.push_back(pick);
    g.for_each_neighbor(pick, [&](Vertex w) {
      if (!done[w]) label[w].push_back(n - step);
    });
  }
  return order;
}

std::optional<std::vector<Vertex>> perfect_elimination_order(const Graph& g) {
  const int n = g.order();
  auto order = lex_bfs(g);
  std::reverse(order.begin(), order.end());
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[order[i]] = i;
  for (int i = 0; i < n; ++i) {
    const Vertex v = order[i];
    Vertex parent = -1;
    VertexSet later;
    g.for_each_neighbor(v, [&](Vertex w) {
      if (pos[w] > i) {
        later.push_back(w);
        if (parent < 0 || pos[w] < pos[parent]) parent = w;
      }
    });
    for (Vertex w : later)
      if (w != parent && !g.has_edge(parent, w)) return std::nullopt;
  }
  return order;
}

bool is_chordal(const Graph& g) {
  return perfect_elimination_order(g).has_value();
}

std::vector<VertexSet> chordal_maximal_cliques(const Graph& g,
                                               const std::vector<Vertex>& peo) {
  const int n = g.order();
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[peo[i]] = i;
  std::vector<VertexSet> candidates;
  for (Vertex v : peo) {
    VertexSet c{v};
    g.for_each_neighbor(v, [&](Vertex w) {
      if (pos[w] > pos[v]) c.push_back(w);
    });
    std::sort(c.begin(), c.end());
    candidates.push_back(std::move(c));
  }
  std::vector<VertexSet> out;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < candidates.size() && !dominated; ++j) {
      if (i == j) continue;
      const auto& a = candidates[i];
      const auto& b = candidates[j];
      if (b.size() > a.size() || (b.size() == a.size() && j < i))
        dominated = std::includes(b.begin(), b.end(), a.begin(), a.end());
    }
    if (!dominated) out.push_back(candidates[i]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::pair<VertexSet, VertexSet>> split_partition(const Graph& g) {
  const int n = g.order();
  std::vector<Vertex> by_degree(n);
  std::iota(by_degree.begin(), by_degree.end(), 0);
  std::stable_sort(by_degree.begin(), by_degree.end(), [&](Vertex a, Vertex b) {
    return g.degree(a) > g.degree(b);
  });
  int m = 0;
  for (int i = 0; i < n; ++i)
    if (g.degree(by_degree[i]) >= i) m = i + 1;
  long long head = 0;
  long long tail = 0;
  for (int i = 0; i < n; ++i)
    (i < m ? head : tail) += g.degree(by_degree[i]);
  if (head != static_cast<long long>(m) * (m - 1) + tail) return std::nullopt;
  VertexSet clique(by_degree.begin(), by_degree.begin() + m);
  VertexSet independent(by_degree.begin() + m, by_degree.end());
  std::sort(clique.begin(), clique.end());
  std::sort(independent.begin(), independent.end());
  return std::make_pair(std::move(clique), std::move(independent));
}

bool is_distance_hereditary(const Graph& g) {
  const int n = g.order();
  std::vector<bool> alive(n, true);
  int remaining = n;
  std::vector<VertexSet> adj(n);
  for (Vertex v = 0; v < n; ++v) adj[v] = g.neighbors(v);
  const auto live_nbrs = [&](Vertex v) {
    VertexSet out;
    for (Vertex w : adj[v])
      if (alive[w]) out.push_back(w);
    return out;
  };
  while (remaining > 1) {
    Vertex drop = -1;
    for (Vertex v = 0; v < n && drop < 0; ++v)
      if (alive[v] && live_nbrs(v).size() == 1) drop = v;
    for (Vertex u = 0; u < n && drop < 0; ++u) {
      if (!alive[u]) continue;
      const VertexSet nu = live_nbrs(u);
      for (Vertex v = u + 1; v < n && drop < 0; ++v) {
        if (!alive[v]) continue;
        VertexSet nv = live_nbrs(v);
        if (nu == nv) {
          drop = v;  // false twins
          continue;
        }
        VertexSet cu = nu;
        cu.push_back(u);
        std::sort(cu.begin(), cu.end());
        nv.push_back(v);
        std::sort(nv.begin(), nv.end());
        if (cu == nv) drop = v;  // true twins
      }
    }
    if (drop < 0) return false;
    alive[drop] = false;
    --remaining;
  }
  return true;
}

bool is_asteroidal_triple_free(const Graph& g) {
  const int n = g.order();
  // comp[z][v]: component of v in G - N[z], or -1 inside N[z].
  std::vector<std::vector<int>> comp(n, std::vector<int>(n, -1));
  for (Vertex z = 0; z < n; ++z) {
    std::vector<bool> blocked(n, false);
    blocked[z] = true;
    g.for_each_neighbor(z, [&](Vertex w) { blocked[w] = true; });
    int next = 0;
    for (Vertex s = 0; s < n; ++s) {
      if (blocked[s] || comp[z][s] >= 0) continue;
      comp[z][s] = next;
      std::vector<Vertex> queue{s};
      for (std::size_t head = 0; head < queue.size(); ++head)
        g.for_each_neighbor(queue[head], [&](Vertex w) {
          if (!blocked[w] && comp[z][w] < 0) {
            comp[z][w] = next;
            queue.push_back(w);
          }
        });
      ++next;
    }
  }
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b) {
      if (g.has_edge(a, b) || comp[a][b] < 0) continue;
      for (Vertex c = b + 1; c < n; ++c) {
        if (g.has_edge(a, c) || g.has_edge(b, c)) continue;
        if (comp[c][a] == comp[c][b] && comp[b][a] == comp[b][c] &&
            comp[a][b] == comp[a][c])
          return false;
      }
    }
  return true;
}

bool is_interval(const Graph& g) {
  return is_chordal(g) && is_asteroidal_triple_free(g);
}

namespace {

struct CliqueOrderSearch {
  const std::vector<VertexSet>& cliques;
  std::vector<int> total;       // cliques containing each vertex
  std::vector<int> seen_count;  // of those, already placed
  std::vector<int> order;
  std::vector<bool> used;
  std::set<std::pair<std::vector<bool>, int>> failed;

  bool extend(int last) {
    if (order.size() == cliques.size()) return true;
    if (failed.count({used, last})) return false;
    for (int c = 0; c < static_cast<int>(cliques.size()); ++c) {
      if (used[c]) continue;
      const auto in = [&](int k, Vertex v) {
        return std::binary_search(cliques[k].begin(), cliques[k].end(), v);
      };
      // A vertex already seen must continue from the previous clique, and a
      // vertex left behind must have all of its cliques placed.
      bool ok = true;
      for (Vertex v : cliques[c])
        if (seen_count[v] > 0 && (last < 0 || !in(last, v))) ok = false;
      if (ok && last >= 0)
        for (Vertex v : cliques[last])
          if (!in(c, v) && seen_count[v] < total[v]) ok = false;
      if (!ok) continue;
      used[c] = true;
      order.push_back(c);
      for (Vertex v : cliques[c]) ++seen_count[v];
      if (extend(c)) return true;
      for (Vertex v : cliques[c]) --seen_count[v];
      order.pop_back();
      used[c] = false;
    }
    failed.insert({used, last});
    return false;
  }
};

}  // namespace

std::optional<std::vector<VertexSet>> interval_clique_order(const Graph& g) {
  if (!is_interval(g)) return std::nullopt;
  const auto cliques =
      chordal_maximal_cliques(g, *perfect_elimination_order(g));
  CliqueOrderSearch search{cliques, std::vector<int>(g.order(), 0),
                           std::vector<int>(g.order(), 0), {},
                           std::vector<bool>(cliques.size(), false), {}};
  for (const auto& c : cliques)
    for (Vertex v : c) ++search.total[v];
  if (!search.extend(-1))
    throw Error("interval_clique_order: no consecutive clique order found");
  std::vector<VertexSet> out;
  for (int c : search.order) out.push_back(cliques[c]);
  return out;
}

FamilyFlags recognize(const Graph& g) {
  require_connected(g);
  FamilyFlags f;
  const int n = g.order();
  const int m = g.size();
  f.bipartite = is_bipartite(g);
  const auto peo = perfect_elimination_order(g);
  f.chordal = peo.has_value();
  f.split = split_partition(g).has_value();
  f.distance_hereditary = is_distance_hereditary(g);
  f.ptolemaic = f.chordal && f.distance_hereditary;
  f.interval = f.chordal && is_asteroidal_triple_free(g);
  f.tree = m == n - 1;
  f.unicyclic = m == n;
  f.block_graph = true;
  for (const auto& block : block_cut_tree(g).blocks) {
    const auto k = static_cast<long long>(block.size());
    long long inside = 0;
    for (Vertex v : block)
      for (Vertex w : block) inside += v < w && g.has_edge(v, w);
    if (inside != k * (k - 1) / 2) {
      f.block_graph = false;
      break;
    }
  }
  return f;
}

VertexSet fan3_centers(const Graph& g) {
  require_connected(g);
  VertexSet out;
  for (Vertex u = 0; u < g.order(); ++u) {
    const VertexSet nu = g.neighbors(u);
    const auto in_nu = [&](Vertex x) {
      return std::binary_search(nu.begin(), nu.end(), x);
    };
    bool found = false;
    // Induced path a-b-c-d inside N(u).
    for (Vertex b : nu) {
      for (Vertex c : nu) {
        if (found || c == b || !g.has_edge(b, c)) continue;
        for (Vertex a : nu) {
          if (found || a == b || a == c || !g.has_edge(a, b) || g.has_edge(a, c))
            continue;
          g.for_each_neighbor(c, [&](Vertex d) {
            if (found || !in_nu(d) || d == a || d == b) return;
            if (!g.has_edge(b, d) && !g.has_edge(a, d)) found = true;
          });
        }
      }
      if (found) break;
    }
    if (found) out.push_back(u);
  }
  return out;
}

Graph generate_ptolemaic(int n, Rng& rng) {
  if (n < 1) throw InvalidGraph("generate_ptolemaic needs n >= 1");
  std::vector<Edge> edges;
  Graph g(1);
  for (int k = 1; k < n; ++k) {
    // Vertices whose neighborhood is a nonempty clique.
    VertexSet simplicial;
    for (Vertex v = 0; v < k; ++v) {
      const VertexSet nv = g.neighbors(v);
      if (nv.empty()) continue;
      bool clique = true;
      for (std::size_t i = 0; i < nv.size() && clique; ++i)
        for (std::size_t j = i + 1; j < nv.size() && clique; ++j)
          clique = g.has_edge(nv[i], nv[j]);
      if (clique) simplicial.push_back(v);
    }
    const int ops = simplicial.empty() ? 2 : 3;
    const int op = std::uniform_int_distribution<int>(0, ops - 1)(rng);
    Vertex target;
    VertexSet nbrs;
    switch (op) {
      case 0:  // leaf
        target = std::uniform_int_distribution<int>(0, k - 1)(rng);
        nbrs = {target};
        break;
      case 1:  // true twin
        target = std::uniform_int_distribution<int>(0, k - 1)(rng);
        nbrs = g.neighbors(target);
        nbrs.push_back(target);
        break;
      default:  // false twin
        target = simplicial[std::uniform_int_distribution<std::size_t>(
            0, simplicial.size() - 1)(rng)];
        nbrs = g.neighbors(target);
        break;
    }
    g = g.with_vertex(nbrs);
  }
  return g;
}

Graph generate_ptolemaic(int n, std::uint64_t seed) {
  Rng rng(seed);
  return generate_ptolemaic(n, rng);
}

}  // namespace bdmlab
