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

#include "bdmlab/hunter.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <thread>
#include <unordered_map>

#include "bdmlab/canonical.hpp"
#include "bdmlab/distance.hpp"
#include "bdmlab/enumerate.hpp"
#include "bdmlab/error.hpp"
#include "bdmlab/graph6.hpp"
#include "nlohmann/json.hpp"
#include "parallel.hpp"

namespace bdmlab {

std::uint64_t fnv1a64(std::string_view bytes, std::uint64_t seed) {
  std::uint64_t h = seed;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::vector<std::uint8_t> CollisionKey::bytes() const {
  std::vector<std::uint8_t> out{
      static_cast<std::uint8_t>(n >> 8), static_cast<std::uint8_t>(n),
      static_cast<std::uint8_t>(kappa >> 8), static_cast<std::uint8_t>(kappa)};
  for (std::uint8_t b : form) out.push_back(b);
  return out;
}

std::string CollisionKey::hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  for (std::uint8_t b : bytes()) {
    out += kDigits[b >> 4];
    out += kDigits[b & 15];
  }
  return out;
}

Matrix<int> CollisionKey::matrix() const {
  Matrix<int> m = Matrix<int>::square(kappa);
  std::size_t at = 0;
  for (int i = 0; i < kappa; ++i)
    for (int j = i + 1; j < kappa; ++j) m(i, j) = m(j, i) = form.at(at++);
  return m;
}

CollisionKey canonical_bdm_key(const BoundaryDistanceMatrix& b) {
  const int k = b.kappa();
  Matrix<std::uint8_t> m = Matrix<std::uint8_t>::square(k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      if (b.entries(i, j) < 0 || b.entries(i, j) > 255)
        throw Error("boundary distances above 255 are not supported");
      m(i, j) = static_cast<std::uint8_t>(b.entries(i, j));
    }
  CollisionKey key;
  key.n = b.n;
  key.kappa = k;
  key.form = canonical_labeling(m).form;
  return key;
}

std::uint64_t bdm_fingerprint(const BoundaryDistanceMatrix& b) {
  const int k = b.kappa();
  std::vector<std::vector<int>> rows(k);
  for (int i = 0; i < k; ++i) {
    const auto r = b.entries.row(i);
    rows[i].assign(r.begin(), r.end());
    std::sort(rows[i].begin(), rows[i].end());
  }
  std::sort(rows.begin(), rows.end());
  std::string bytes = std::to_string(b.n) + ":" + std::to_string(k) + ":";
  for (const auto& r : rows) {
    for (int v : r) bytes += static_cast<char>(v);
    bytes += '\xff';
  }
  return fnv1a64(bytes);
}

namespace {

struct Chunk {
  // Enumerator range, or stream lines (line number, text), or graph list.
  const ConnectedEnumerator* gen = nullptr;
  std::size_t begin = 0;
  std::size_t end = 0;
  std::vector<std::pair<std::uint64_t, std::string>> lines;
  const std::vector<Graph>* graphs = nullptr;
};

struct ChunkResult {
  std::vector<std::string> seen;
  std::vector<std::pair<std::uint64_t, std::string>> passed;
  std::uint64_t skipped = 0;
  std::vector<std::string> errors;
};

class Hunt {
 public:
  Hunt(std::string input, const HuntOptions& options)
      : options_(options), start_(std::chrono::steady_clock::now()) {
    report_.input = std::move(input);
    for (const auto& f : options.families) {
      if (!family_flag(FamilyFlags{}, f))
        throw Error("unknown family filter '" + f + "'");
      report_.filters.push_back(f);
    }
    if (options.diameter)
      report_.filters.push_back("diameter=" + std::to_string(*options.diameter));
    if (options.shard_dir) {
      std::filesystem::create_directories(*options.shard_dir);
      for (int s = 0; s < options.shards; ++s) {
        shard_paths_.push_back(*options.shard_dir /
                               ("shard-" + std::to_string(s) + ".txt"));
        shard_files_.emplace_back(shard_paths_.back(), std::ios::trunc);
        if (!shard_files_.back())
          throw Error("cannot write " + shard_paths_.back().string());
      }
    }
    report_.checksum = fnv1a64("");
  }

  // Processes a wave of chunks in parallel, then merges them in order.
  void wave(const std::vector<Chunk>& chunks) {
    std::vector<ChunkResult> results(chunks.size());
    parallel_for(chunks.size(), options_.jobs,
                 [&](std::size_t i) { results[i] = process(chunks[i]); });
    for (auto& r : results) {
      for (const auto& g6 : r.seen) {
        report_.checksum = fnv1a64(g6, report_.checksum);
        report_.checksum = fnv1a64("\n", report_.checksum);
      }
      report_.scanned += r.seen.size();
      report_.passed += r.passed.size();
      report_.skipped += r.skipped;
      for (auto& e : r.errors) report_.errors.push_back(std::move(e));
      for (auto& [fp, g6] : r.passed) store(fp, std::move(g6));
    }
  }

  std::size_t wave_size() const {
    return static_cast<std::size_t>(std::max(options_.jobs, 1)) * 4;
  }
  const HuntOptions& options() const { return options_; }

  HuntReport finish() {
    const auto buckets = collect_buckets();
    std::vector<std::vector<CollisionClass>> found(buckets.size());
    parallel_for(buckets.size(), options_.jobs, [&](std::size_t i) {
      found[i] = exact_groups(buckets[i]);
    });
    for (auto& list : found)
      for (auto& c : list) report_.classes.push_back(std::move(c));
    std::sort(report_.classes.begin(), report_.classes.end(),
              [](const CollisionClass& a, const CollisionClass& b) {
                if (a.key != b.key) return a.key < b.key;
                return a.members < b.members;
              });
    report_.seconds = std::chrono::duration<double>(
                          std::chrono::steady_clock::now() - start_)
                          .count();
    return std::move(report_);
  }

 private:
  ChunkResult process(const Chunk& chunk) const {
    ChunkResult r;
    if (chunk.gen) {
      chunk.gen->generate(chunk.begin, chunk.end, [&](const Graph& g) {
        consider(g, write_graph6(g), r);
      });
    } else if (chunk.graphs) {
      for (std::size_t i = chunk.begin; i < chunk.end; ++i) {
        const Graph& g = (*chunk.graphs)[i];
        consider(g, write_graph6(g), r);
      }
    } else {
      for (const auto& [line, text] : chunk.lines) {
        Graph g;
        try {
          g = parse_graph6(text);
        } catch (const ParseError& e) {
          const std::string msg =
              "line " + std::to_string(line) + ": " + e.what();
          if (!options_.skip_bad) throw ParseError(msg);
          r.seen.push_back(text);
          ++r.skipped;
          r.errors.push_back(msg);
          continue;
        }
        consider(g, text, r);
      }
    }
    return r;
  }

  void consider(const Graph& g, std::string g6, ChunkResult& r) const {
    r.seen.push_back(g6);
    if (!is_connected(g)) {
      ++r.skipped;
      return;
    }
    if (!options_.families.empty()) {
      const FamilyFlags f = recognize(g);
      for (const auto& name : options_.families)
        if (!*family_flag(f, name)) return;
    }
    const auto d = all_pairs_distances(g);
    if (options_.diameter &&
        eccentricity_profile(g, d).diameter != *options_.diameter)
      return;
    r.passed.emplace_back(bdm_fingerprint(bdm(g, d)), std::move(g6));
  }

  void store(std::uint64_t fp, std::string g6) {
    if (shard_files_.empty()) {
      buckets_[fp].push_back(std::move(g6));
      return;
    }
    char head[20];
    std::snprintf(head, sizeof head, "%016llx ",
                  static_cast<unsigned long long>(fp));
    shard_files_[fp % shard_files_.size()] << head << g6 << '\n';
  }

  std::vector<std::vector<std::string>> collect_buckets() {
    std::vector<std::vector<std::string>> out;
    const auto take = [&](auto& map) {
      for (auto& [fp, members] : map)
        if (members.size() >= 2) out.push_back(std::move(members));
    };
    if (shard_files_.empty()) {
      take(buckets_);
      return out;
    }
    for (auto& f : shard_files_) f.close();
    for (const auto& path : shard_paths_) {
      std::ifstream in(path);
      std::unordered_map<std::uint64_t, std::vector<std::string>> local;
      std::string line;
      while (std::getline(in, line)) {
        if (line.size() < 18) throw Error("corrupt shard " + path.string());
        local[std::stoull(line.substr(0, 16), nullptr, 16)].push_back(
            line.substr(17));
      }
      take(local);
    }
    return out;
  }

  static std::vector<CollisionClass> exact_groups(
      const std::vector<std::string>& members) {
    std::map<CollisionKey, std::map<Certificate, std::string>> groups;
    for (const auto& g6 : members) {
      const Graph g = parse_graph6(g6);
      auto& slot = groups[canonical_bdm_key(bdm(g))][certificate(g)];
      if (slot.empty() || g6 < slot) slot = g6;
    }
    std::vector<CollisionClass> out;
    for (auto& [key, by_cert] : groups) {
      if (by_cert.size() < 2) continue;
      CollisionClass c;
      c.key = key;
      for (auto& [cert, g6] : by_cert) c.members.push_back(g6);
      std::sort(c.members.begin(), c.members.end());
      for (const auto& g6 : c.members) {
        const Graph g = parse_graph6(g6);
        c.flags.push_back(recognize(g));
        c.diameters.push_back(
            eccentricity_profile(g, all_pairs_distances(g)).diameter);
      }
      out.push_back(std::move(c));
    }
    return out;
  }

  const HuntOptions& options_;
  std::chrono::steady_clock::time_point start_;
  HuntReport report_;
  std::unordered_map<std::uint64_t, std::vector<std::string>> buckets_;
  std::vector<std::filesystem::path> shard_paths_;
  std::vector<std::ofstream> shard_files_;
};

}  // namespace

HuntReport hunt_enumerated(int n_min, int n_max, const HuntOptions& options) {
  if (n_min < 1 || n_max < n_min) throw Error("bad order range");
  std::string input = "enumerate n=" + std::to_string(n_min);
  if (n_max != n_min) input += ".." + std::to_string(n_max);
  Hunt hunt(input, options);
  for (int n = n_min; n <= n_max; ++n) {
    const ConnectedEnumerator gen(n);
    // Small parent ranges keep the waves balanced.
    const std::size_t step = std::max<std::size_t>(
        1, gen.parent_count() / (hunt.wave_size() * 16));
    std::vector<Chunk> wave;
    for (std::size_t begin = 0; begin < gen.parent_count(); begin += step) {
      Chunk c;
      c.gen = &gen;
      c.begin = begin;
      c.end = std::min(gen.parent_count(), begin + step);
      wave.push_back(std::move(c));
      if (wave.size() == hunt.wave_size()) {
        hunt.wave(wave);
        wave.clear();
      }
    }
    if (!wave.empty()) hunt.wave(wave);
  }
  return hunt.finish();
}

HuntReport hunt_stream(std::istream& in, const std::string& description,
                       const HuntOptions& options) {
  Hunt hunt(description, options);
  std::vector<Chunk> wave;
  Chunk current;
  std::string line;
  std::uint64_t number = 0;
  const auto flush_chunk = [&] {
    if (current.lines.empty()) return;
    wave.push_back(std::move(current));
    current = Chunk{};
    if (wave.size() == hunt.wave_size()) {
      hunt.wave(wave);
      wave.clear();
    }
  };
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.rfind(">>graph6<<", 0) == 0) line.erase(0, 10);
    if (line.empty()) continue;
    current.lines.emplace_back(number, line);
    if (current.lines.size() == options.chunk) flush_chunk();
  }
  if (in.bad()) throw Error("read error on " + description);
  flush_chunk();
  if (!wave.empty()) hunt.wave(wave);
  return hunt.finish();
}

HuntReport hunt_graphs(const std::vector<Graph>& graphs,
                       const std::string& description,
                       const HuntOptions& options) {
  Hunt hunt(description, options);
  std::vector<Chunk> wave;
  for (std::size_t begin = 0; begin < graphs.size(); begin += options.chunk) {
    Chunk c;
    c.graphs = &graphs;
    c.begin = begin;
    c.end = std::min(graphs.size(), begin + options.chunk);
    wave.push_back(std::move(c));
    if (wave.size() == hunt.wave_size()) {
      hunt.wave(wave);
      wave.clear();
    }
  }
  if (!wave.empty()) hunt.wave(wave);
  return hunt.finish();
}

void write_hunt_report(const HuntReport& report, std::ostream& out) {
  using nlohmann::ordered_json;
  for (const auto& c : report.classes) {
    ordered_json j;
    j["key_hex"] = c.key.hex();
    j["n"] = c.key.n;
    j["kappa"] = c.key.kappa;
    j["members"] = c.members;
    ordered_json flags = ordered_json::array();
    for (const auto& f : c.flags) {
      ordered_json names = ordered_json::array();
      for (const auto& name : family_names())
        if (*family_flag(f, name)) names.push_back(name);
      flags.push_back(std::move(names));
    }
    j["flags"] = std::move(flags);
    j["diameters"] = c.diameters;
    const Matrix<int> m = c.key.matrix();
    ordered_json rows = ordered_json::array();
    for (int i = 0; i < m.rows(); ++i) {
      const auto r = m.row(i);
      rows.push_back(std::vector<int>(r.begin(), r.end()));
    }
    j["matrix"] = std::move(rows);
    out << j.dump() << '\n';
  }
  char checksum[17];
  std::snprintf(checksum, sizeof checksum, "%016llx",
                static_cast<unsigned long long>(report.checksum));
  ordered_json s;
  s["summary"] = true;
  s["input"] = report.input;
  s["filters"] = report.filters;
  s["scanned"] = report.scanned;
  s["passed"] = report.passed;
  s["skipped"] = report.skipped;
  s["classes"] = report.classes.size();
  s["checksum"] = checksum;
  s["errors"] = report.errors;
  out << s.dump() << '\n';
}

std::vector<KappaPair> kappa_only_hunt(int n) {
  if (n < 1 || n > 12) throw Error("kappa_only_hunt supports 1 <= n <= 12");
  const auto graphs = connected_graphs(n);
  struct Subset {
    std::size_t graph;
    VertexSet vertices;
  };
  std::map<CollisionKey, std::vector<Subset>> off_boundary;
  std::vector<CollisionKey> own;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const auto d = all_pairs_distances(graphs[i]);
    const auto b = bdm(graphs[i], d);
    own.push_back(canonical_bdm_key(b));
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
      if (std::popcount(mask) != b.kappa()) continue;
      VertexSet s;
      for (int v = 0; v < n; ++v)
        if (mask >> v & 1u) s.push_back(v);
      if (s == b.boundary) continue;
      BoundaryDistanceMatrix sub{n, s, d.principal(s)};
      off_boundary[canonical_bdm_key(sub)].push_back({i, std::move(s)});
    }
  }
  std::vector<KappaPair> out;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const auto it = off_boundary.find(own[i]);
    if (it == off_boundary.end()) continue;
    std::size_t last = graphs.size();
    for (const auto& s : it->second) {
      if (s.graph == i || s.graph == last) continue;
      last = s.graph;
      out.push_back({graphs[i], graphs[s.graph], s.vertices});
    }
  }
  return out;
}

}  // namespace bdmlab
