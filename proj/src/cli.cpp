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


#include "bdmlab/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "CLI11.hpp"
#include "bdmlab/boundary.hpp"
#include "bdmlab/distance.hpp"
#include "bdmlab/enumerate.hpp"
#include "bdmlab/error.hpp"
#include "bdmlab/families.hpp"
#include "bdmlab/graph6.hpp"
#include "bdmlab/hunter.hpp"
#include "bdmlab/random.hpp"
#include "bdmlab/reconstruct.hpp"
#include "bdmlab/verify.hpp"
#include "nlohmann/json.hpp"

namespace bdmlab::cli {
namespace {

using nlohmann::ordered_json;

class UsageError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

struct Config {
  std::vector<std::string> in;
  std::string out;
  bool dot = false;
  std::optional<int> n;
  std::optional<int> n_max;
  std::vector<std::string> filters;
  std::optional<int> diameter;
  int jobs = 1;
  std::uint64_t seed = 0;
  std::size_t cap = 64;
  std::uint64_t budget = 50'000'000;
  std::size_t count = 1;
  std::vector<std::string> claims;
  std::string shard_dir;
  int shards = 64;
  bool skip_bad = false;
  bool sv = false;
  bool tree = false;
  bool ptolemaic = false;
  bool enumerate = false;
};

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

// Calls f(line, where) for every nonblank line of every input; "-" or no
// input at all means standard input.
void for_each_line(const std::vector<std::string>& paths, std::istream& in,
                   const std::function<void(const std::string&,
                                            const std::string&)>& f) {
  auto scan = [&](std::istream& is, const std::string& name) {
    std::string line;
    std::uint64_t number = 0;
    while (std::getline(is, line)) {
      ++number;
      const std::string text = trim(line);
      if (text.empty() || text[0] == '#') continue;
      f(text, name + ":" + std::to_string(number));
    }
    if (is.bad()) throw IoError("read error on " + name);
  };
  if (paths.empty()) return scan(in, "<stdin>");
  for (const auto& path : paths) {
    if (path == "-") {
      scan(in, "<stdin>");
      continue;
    }
    std::ifstream file(path);
    if (!file) throw IoError("cannot open " + path);
    scan(file, path);
  }
}

template <typename F>
auto at(const std::string& where, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const ParseError& e) {
    throw ParseError(where + ": " + e.what());
  }
}

void for_each_graph(const Config& c, std::istream& in,
                    const std::function<void(const Graph&,
                                             const std::string&)>& f) {
  for_each_line(c.in, in, [&](const std::string& line, const std::string& where) {
    if (line.rfind(">>graph6<<", 0) == 0) {
      const std::string rest = line.substr(10);
      if (rest.empty()) return;
      return f(at(where, [&] { return parse_graph6(rest); }), rest);
    }
    f(at(where, [&] { return parse_graph6(line); }), line);
  });
}

void for_each_record(const Config& c, std::istream& in,
                     const std::function<void(const BoundaryDistanceMatrix&)>& f) {
  for_each_line(c.in, in, [&](const std::string& line, const std::string& where) {
    f(at(where, [&] { return parse_bdm_record(line); }));
  });
}

ordered_json one_based(const VertexSet& s) {
  ordered_json out = ordered_json::array();
  for (Vertex v : s) out.push_back(v + 1);
  return out;
}

ordered_json rows_json(const Matrix<int>& m) {
  ordered_json rows = ordered_json::array();
  for (int i = 0; i < m.rows(); ++i) {
    const auto r = m.row(i);
    rows.push_back(std::vector<int>(r.begin(), r.end()));
  }
  return rows;
}

// Boundary vertices are drawn black.
void write_dot(const Graph& g, std::size_t index, std::ostream& os) {
  const VertexSet boundary =
      is_connected(g) ? boundary_set(g) : VertexSet{};
  os << "graph g" << index << " {\n  node [shape=circle];\n";
  for (Vertex v = 0; v < g.order(); ++v) {
    os << "  " << v + 1;
    if (std::binary_search(boundary.begin(), boundary.end(), v))
      os << " [boundary=true, style=filled, fillcolor=black, fontcolor=white]";
    os << ";\n";
  }
  for (const auto& [u, v] : g.edges())
    os << "  " << u + 1 << " -- " << v + 1 << ";\n";
  os << "}\n";
}

class GraphWriter {
 public:
  GraphWriter(const Config& c, std::ostream& os) : dot_(c.dot), os_(os) {}
  void operator()(const Graph& g) {
    if (dot_)
      write_dot(g, ++count_, os_);
    else
      os_ << write_graph6(g) << '\n';
  }

 private:
  bool dot_;
  std::ostream& os_;
  std::size_t count_ = 0;
};

// Record `n=<int>; s=<labels>; rows=<r1;r2;...>`, 1-based labels, one row of
// n distances per vertex of s.
std::string format_sv_record(const SVMatrix& m) {
  std::string out = "n=" + std::to_string(m.n) + "; s=";
  for (std::size_t i = 0; i < m.s.size(); ++i)
    out += (i ? "," : "") + std::to_string(m.s[i] + 1);
  out += "; rows=";
  for (int i = 0; i < m.entries.rows(); ++i) {
    if (i) out += ';';
    for (int j = 0; j < m.entries.cols(); ++j)
      out += (j ? "," : "") + std::to_string(m.entries(i, j));
  }
  return out;
}

std::vector<int> parse_ints(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (item.empty() || used != item.size())
      throw ParseError("bad integer '" + item + "'");
    out.push_back(value);
  }
  return out;
}

SVMatrix parse_sv_record(const std::string& text) {
  const auto rows_at = text.find("rows=");
  if (rows_at == std::string::npos) throw ParseError("missing rows=");
  SVMatrix m;
  bool have_n = false;
  bool have_s = false;
  std::stringstream head(text.substr(0, rows_at));
  std::string field;
  while (std::getline(head, field, ';')) {
    field = trim(field);
    if (field.empty()) continue;
    if (field.rfind("n=", 0) == 0) {
      const auto v = parse_ints(field.substr(2));
      if (v.size() != 1 || v[0] < 1) throw ParseError("bad n");
      m.n = v[0];
      have_n = true;
    } else if (field.rfind("s=", 0) == 0) {
      for (int label : parse_ints(field.substr(2))) {
        if (label < 1) throw ParseError("labels are 1-based");
        m.s.push_back(label - 1);
      }
      have_s = true;
    } else {
      throw ParseError("unknown field '" + field + "'");
    }
  }
  if (!have_n || !have_s) throw ParseError("SV record needs n= and s=");
  const int k = static_cast<int>(m.s.size());
  m.entries = Matrix<int>(k, m.n);
  std::stringstream body(text.substr(rows_at + 5));
  std::string row;
  int i = 0;
  while (std::getline(body, row, ';')) {
    const auto values = parse_ints(row);
    if (i >= k || static_cast<int>(values.size()) != m.n)
      throw ParseError("SV rows do not match n and s");
    for (int j = 0; j < m.n; ++j) m.entries(i, j) = values[j];
    ++i;
  }
  if (i != k) throw ParseError("SV rows do not match s");
  for (Vertex v : m.s)
    if (v >= m.n) throw ParseError("label outside [n]");
  return m;
}

std::pair<int, int> order_range(const Config& c) {
  if (!c.n && !c.n_max) throw UsageError("give --n or --n-max");
  const int lo = c.n.value_or(1);
  const int hi = c.n_max.value_or(lo);
  if (lo < 1 || hi < lo) throw UsageError("bad order range");
  return {lo, hi};
}

std::vector<Graph> load_graphs(const Config& c, std::istream& in) {
  std::vector<Graph> graphs;
  if (c.in.empty()) {
    const auto [lo, hi] = order_range(c);
    for (int n = lo; n <= hi; ++n)
      enumerate_connected(n, [&](const Graph& g) { graphs.push_back(g); });
  } else {
    if (c.n || c.n_max) throw UsageError("--in excludes --n and --n-max");
    for_each_graph(c, in, [&](const Graph& g, const std::string&) {
      graphs.push_back(g);
    });
  }
  return graphs;
}

// Subcommands.

int do_boundary(const Config& c, std::istream& in, std::ostream& os) {
  std::size_t index = 0;
  for_each_graph(c, in, [&](const Graph& g, const std::string& g6) {
    if (c.dot) return write_dot(g, ++index, os);
    const auto b = bdm(g);
    ordered_json j;
    j["graph6"] = g6;
    j["n"] = b.n;
    j["kappa"] = b.kappa();
    j["boundary"] = one_based(b.boundary);
    j["matrix"] = rows_json(b.entries);
    os << j.dump() << '\n';
  });
  return kOk;
}

int do_bdm(const Config& c, std::istream& in, std::ostream& os) {
  for_each_graph(c, in, [&](const Graph& g, const std::string&) {
    require_connected(g);
    if (c.sv)
      os << format_sv_record(sv_matrix(g, boundary_set(g))) << '\n';
    else
      os << format_bdm_record(bdm(g)) << '\n';
  });
  return kOk;
}

int do_recognize(const Config& c, std::istream& in, std::ostream& os) {
  for_each_graph(c, in, [&](const Graph& g, const std::string& g6) {
    const FamilyFlags f = recognize(g);
    ordered_json j;
    j["graph6"] = g6;
    for (const auto& name : family_names()) j[name] = *family_flag(f, name);
    os << j.dump() << '\n';
  });
  return kOk;
}

int do_reconstruct(const Config& c, std::istream& in, std::ostream& os) {
  GraphWriter write(c, os);
  if (c.sv) {
    for_each_line(c.in, in, [&](const std::string& line, const std::string& where) {
      write(graph_from_SV(at(where, [&] { return parse_sv_record(line); })));
    });
    return kOk;
  }
  for_each_record(c, in, [&](const BoundaryDistanceMatrix& b) {
    if (c.ptolemaic) return write(reconstruct_ptolemaic(b));
    // Leaves keep their labels; internal vertices take the rest in order.
    const Graph t = tree_from_leaf_distances(b.entries, b.n);
    std::vector<int> perm(b.n);
    std::vector<bool> used(b.n, false);
    for (int i = 0; i < b.kappa(); ++i) {
      perm[i] = b.boundary[i];
      used[b.boundary[i]] = true;
    }
    int next = 0;
    for (int i = b.kappa(); i < b.n; ++i) {
      while (used[next]) ++next;
      perm[i] = next++;
    }
    write(t.relabeled(perm));
  });
  return kOk;
}

int do_consistent(const Config& c, std::istream& in, std::ostream& os) {
  ConsistentOptions options;
  options.cap = c.cap;
  options.node_budget = c.budget;
  for_each_record(c, in, [&](const BoundaryDistanceMatrix& b) {
    const auto graphs = consistent_graphs(b, options);
    ordered_json j;
    j["n"] = b.n;
    j["kappa"] = b.kappa();
    j["count"] = graphs.size();
    ordered_json list = ordered_json::array();
    for (const Graph& g : graphs) list.push_back(write_graph6(g));
    j["graphs"] = std::move(list);
    os << j.dump() << '\n';
  });
  return kOk;
}

int do_verdict(const Config& c, std::istream& in, std::ostream& os) {
  ConsistentOptions options;
  options.cap = c.cap;
  options.node_budget = c.budget;
  for_each_graph(c, in, [&](const Graph& g, const std::string& g6) {
    const auto v = bdm_verdict(g, options);
    ordered_json j;
    j["graph6"] = g6;
    j["n"] = g.order();
    j["kappa"] = boundary_set(g).size();
    j["verdict"] = v.is_bdm() ? "BDM" : "NotBDM";
    ordered_json list = ordered_json::array();
    for (const Graph& w : v.witnesses) list.push_back(write_graph6(w));
    j["witnesses"] = std::move(list);
    os << j.dump() << '\n';
  });
  return kOk;
}

int do_hunt(const Config& c, std::istream& in, std::ostream& os,
            std::ostream& err) {
  HuntOptions options;
  options.families = c.filters;
  options.diameter = c.diameter;
  options.jobs = c.jobs;
  options.skip_bad = c.skip_bad;
  options.shards = c.shards;
  if (!c.shard_dir.empty()) options.shard_dir = c.shard_dir;
  for (const auto& f : c.filters)
    if (!family_flag(FamilyFlags{}, f))
      throw UsageError("unknown family filter '" + f + "'");
  HuntReport report;
  if (c.in.empty()) {
    const auto [lo, hi] = order_range(c);
    report = hunt_enumerated(lo, hi, options);
  } else {
    if (c.n || c.n_max) throw UsageError("--in excludes --n and --n-max");
    if (c.in.size() != 1) throw UsageError("hunt reads a single --in");
    const std::string& path = c.in.front();
    if (path == "-") {
      report = hunt_stream(in, "<stdin>", options);
    } else {
      std::ifstream file(path);
      if (!file) throw IoError("cannot open " + path);
      report = hunt_stream(file, path, options);
      if (file.bad()) throw IoError("read error on " + path);
    }
  }
  write_hunt_report(report, os);
  char seconds[32];
  std::snprintf(seconds, sizeof seconds, "%.3f", report.seconds);
  err << "hunt: scanned " << report.scanned << " graphs, "
      << report.classes.size() << " classes, " << seconds << " s\n";
  return report.classes.empty() ? kOk : kFound;
}

int do_kappa_hunt(const Config& c, std::ostream& os) {
  if (!c.n) throw UsageError("kappa-hunt needs --n");
  if (*c.n < 1 || *c.n > 12) throw UsageError("kappa-hunt supports 1 <= n <= 12");
  const auto pairs = kappa_only_hunt(*c.n);
  for (const auto& p : pairs) {
    ordered_json j;
    j["g"] = write_graph6(p.g);
    j["h"] = write_graph6(p.h);
    j["g_boundary"] = one_based(boundary_set(p.g));
    j["h_boundary"] = one_based(boundary_set(p.h));
    j["h_subset"] = one_based(p.h_subset);
    os << j.dump() << '\n';
  }
  ordered_json s;
  s["summary"] = true;
  s["n"] = *c.n;
  s["pairs"] = pairs.size();
  os << s.dump() << '\n';
  return kOk;
}

int do_verify(const Config& c, std::istream& in, std::ostream& os) {
  std::vector<std::string> claims = c.claims.empty() ? claim_ids() : c.claims;
  const auto& known = claim_ids();
  for (const auto& id : claims)
    if (std::find(known.begin(), known.end(), id) == known.end())
      throw UsageError("unknown claim '" + id + "'");
  const auto graphs = load_graphs(c, in);
  bool violated = false;
  for (const auto& id : claims) {
    const auto r = verify_claim(id, graphs, c.jobs);
    ordered_json j;
    j["claim"] = id;
    j["statement"] = claim_statement(id);
    j["scanned"] = r.scanned;
    j["applicable"] = r.applicable;
    ordered_json list = ordered_json::array();
    for (const Graph& g : r.violations) list.push_back(write_graph6(g));
    j["violations"] = std::move(list);
    os << j.dump() << '\n';
    violated = violated || !r.violations.empty();
  }
  return violated ? kFound : kOk;
}

int do_gen(const Config& c, std::ostream& os) {
  GraphWriter write(c, os);
  const auto [lo, hi] = order_range(c);
  if (c.enumerate) {
    for (int n = lo; n <= hi; ++n)
      enumerate_connected(n, [&](const Graph& g) { write(g); });
    return kOk;
  }
  if (c.n_max) throw UsageError("gen --ptolemaic takes --n, not --n-max");
  Rng rng(c.seed);
  for (std::size_t i = 0; i < c.count; ++i) write(generate_ptolemaic(lo, rng));
  return kOk;
}

std::string claims_footer() {
  std::string text = "Claim ids for verify --claim:\n";
  for (const auto& id : claim_ids())
    text += "  " + id + "  " + claim_statement(id) + "\n";
  text +=
      "\nExit codes: 0 done, 2 hunt classes or claim violations found,\n"
      "1 I/O or data error, 64 usage error. BDMLAB_JOBS sets the default\n"
      "for --jobs.";
  return text;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err) {
  Config c;
  CLI::App app{"Boundary distance matrix laboratory", "bdmlab"};
  app.require_subcommand(1);
  app.footer(claims_footer());

  auto add_in = [&](CLI::App* sub) {
    sub->add_option("--in", c.in, "graph6 input files, - for stdin (default stdin)");
  };
  auto add_out = [&](CLI::App* sub) {
    sub->add_option("--out", c.out, "write the report to this file");
  };
  auto add_dot = [&](CLI::App* sub) {
    sub->add_flag("--dot", c.dot, "emit DOT with boundary vertices drawn black");
  };
  auto add_range = [&](CLI::App* sub) {
    sub->add_option("--n", c.n, "order (lower end with --n-max)");
    sub->add_option("--n-max", c.n_max, "largest order");
  };
  // CLI11 drops environment values that fail validation, so the
  // BDMLAB_JOBS fallback is read by hand after parsing.
  std::vector<std::pair<CLI::App*, CLI::Option*>> jobs_options;
  auto add_jobs = [&](CLI::App* sub) {
    jobs_options.emplace_back(
        sub, sub->add_option("--jobs", c.jobs, "worker threads (env BDMLAB_JOBS)")
                 ->check(CLI::Range(1, 4096)));
  };
  auto add_budget = [&](CLI::App* sub) {
    sub->add_option("--cap", c.cap, "most isomorphism classes to report")
        ->check(CLI::PositiveNumber);
    sub->add_option("--budget", c.budget, "search nodes before giving up")
        ->check(CLI::PositiveNumber);
  };

  auto* boundary = app.add_subcommand("boundary", "boundary set, kappa and matrix per graph");
  add_in(boundary);
  add_out(boundary);
  add_dot(boundary);

  auto* bdm_cmd = app.add_subcommand("bdm", "boundary distance matrix records");
  add_in(bdm_cmd);
  add_out(bdm_cmd);
  bdm_cmd->add_flag("--sv", c.sv, "emit distances from the boundary to all vertices");

  auto* recog = app.add_subcommand("recognize", "family membership per graph");
  add_in(recog);
  add_out(recog);

  auto* rec = app.add_subcommand("reconstruct", "rebuild graphs from distance records");
  add_in(rec);
  add_out(rec);
  add_dot(rec);
  auto* sv = rec->add_flag("--sv", c.sv, "SV records, strong resolving set");
  auto* tree = rec->add_flag("--tree", c.tree, "boundary records of trees");
  auto* ptol = rec->add_flag("--ptolemaic", c.ptolemaic, "boundary records of Ptolemaic graphs");
  sv->excludes(tree)->excludes(ptol);
  tree->excludes(ptol);

  auto* cons = app.add_subcommand("consistent", "all graphs with a given boundary matrix");
  add_in(cons);
  add_out(cons);
  add_budget(cons);

  auto* verdict = app.add_subcommand("verdict", "is the graph determined by its matrix");
  add_in(verdict);
  add_out(verdict);
  add_budget(verdict);

  auto* hunt = app.add_subcommand("hunt", "collision classes of boundary matrices");
  add_in(hunt);
  add_out(hunt);
  add_range(hunt);
  add_jobs(hunt);
  hunt->add_option("--filter", c.filters, "family filter, repeatable")
      ->check(CLI::IsMember(family_names()) | CLI::IsMember({"dh", "block"}));
  hunt->add_option("--diameter", c.diameter, "keep graphs of this diameter");
  hunt->add_option("--shard-dir", c.shard_dir, "spill buckets to shard files here");
  hunt->add_option("--shards", c.shards, "number of shard files")
      ->check(CLI::Range(1, 4096));
  hunt->add_flag("--skip-bad", c.skip_bad, "skip unparsable lines instead of failing");

  auto* khunt = app.add_subcommand("kappa-hunt", "matrices shared with a non-boundary subset");
  add_out(khunt);
  khunt->add_option("--n", c.n, "order")->required();

  auto* verify = app.add_subcommand("verify", "check catalog claims on a graph set");
  add_in(verify);
  add_out(verify);
  add_range(verify);
  add_jobs(verify);
  verify->add_option("--claim", c.claims, "claim id, repeatable (default all)");

  auto* gen = app.add_subcommand("gen", "generate graphs as graph6");
  add_out(gen);
  add_dot(gen);
  add_range(gen);
  auto* gp = gen->add_flag("--ptolemaic", c.ptolemaic, "random Ptolemaic graphs of order --n");
  auto* ge = gen->add_flag("--enumerate", c.enumerate, "every connected graph in the range");
  gp->excludes(ge);
  gen->add_option("--count", c.count, "graphs to generate (--ptolemaic)");
  gen->add_option("--seed", c.seed, "random seed (default 0)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  bool takes_jobs = false;
  bool jobs_given = false;
  for (const auto& [sub, option] : jobs_options) {
    takes_jobs = takes_jobs || sub->parsed();
    jobs_given = jobs_given || option->count() > 0;
  }
  const char* env = std::getenv("BDMLAB_JOBS");
  if (env && takes_jobs && !jobs_given) {
    const std::string text = trim(env);
    std::size_t used = 0;
    long value = 0;
    try {
      value = std::stol(text, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (text.empty() || used != text.size() || value < 1 || value > 4096) {
      err << "bdmlab: BDMLAB_JOBS must be an integer in [1, 4096]\n";
      return kUsage;
    }
    c.jobs = static_cast<int>(value);
  }

  std::ofstream file;
  if (!c.out.empty()) {
    file.open(c.out);
    if (!file) {
      err << "bdmlab: cannot open " << c.out << " for writing\n";
      return kFailure;
    }
  }
  std::ostream& os = c.out.empty() ? out : file;

  int code = kOk;
  try {
    if (*boundary) code = do_boundary(c, in, os);
    else if (*bdm_cmd) code = do_bdm(c, in, os);
    else if (*recog) code = do_recognize(c, in, os);
    else if (*rec) {
      if (!c.sv && !c.tree && !c.ptolemaic)
        throw UsageError("reconstruct needs --sv, --tree or --ptolemaic");
      code = do_reconstruct(c, in, os);
    } else if (*cons) code = do_consistent(c, in, os);
    else if (*verdict) code = do_verdict(c, in, os);
    else if (*hunt) code = do_hunt(c, in, os, err);
    else if (*khunt) code = do_kappa_hunt(c, os);
    else if (*verify) code = do_verify(c, in, os);
    else if (*gen) {
      if (!c.ptolemaic && !c.enumerate)
        throw UsageError("gen needs --ptolemaic or --enumerate");
      code = do_gen(c, os);
    }
  } catch (const UsageError& e) {
    err << "bdmlab: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "bdmlab: " << e.what() << "\n";
    return kFailure;
  }
  os.flush();
  if (!os) {
    err << "bdmlab: write error\n";
    return kFailure;
  }
  return code;
}

int run(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cin, std::cout, std::cerr);
}

}  // namespace bdmlab::cli
