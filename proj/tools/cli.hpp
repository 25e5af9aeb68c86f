// Copyright 2026 The Elite Authors.
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
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "elite/elite.hpp"

namespace elite::cli {

namespace fs = std::filesystem;

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Parsed command line. Exactly one subcommand is set.
struct Invocation {
  std::string subcommand;
  std::string model;
  std::uint32_t n = 0;
  double p = 0.0;
  std::uint32_t mprime = 10;
  std::uint32_t cq = 2;
  std::uint32_t cu = 2;
  std::uint32_t s = 2;
  double beta = 0.5;
  std::optional<std::uint64_t> seed;
  std::string input;                // sweep, axioms
  std::vector<std::string> inputs;  // report
  std::string output;
  bool directed = false;
  std::string grid = "root";
  std::optional<std::size_t> points;
  double c1min = 0.05;
  double c2min = 0.05;
  double c3min = 0.01;
};

// Files land under a temporary name and are renamed once complete, so a
// failed run leaves nothing behind.
class StagedOutputs {
 public:
  StagedOutputs() = default;
  StagedOutputs(const StagedOutputs&) = delete;
  StagedOutputs& operator=(const StagedOutputs&) = delete;
  ~StagedOutputs() {
    std::error_code ec;
    for (const auto& [tmp, final_path] : files_) fs::remove(tmp, ec);
  }

  std::ofstream open(const fs::path& final_path) {
    fs::path tmp = final_path;
    tmp += ".partial";
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw Error("cannot write " + final_path.string());
    files_.emplace_back(tmp, final_path);
    return os;
  }

  void commit() {
    for (const auto& [tmp, final_path] : files_) fs::rename(tmp, final_path);
    files_.clear();
  }

 private:
  std::vector<std::pair<fs::path, fs::path>> files_;
};

inline void close_checked(std::ofstream& os, const std::string& what) {
  os.flush();
  if (!os) throw Error("write failure on " + what);
  os.close();
}

inline GeneratorConfig generator_config(const Invocation& inv, std::uint64_t seed) {
  GeneratorConfig cfg;
  cfg.seed = seed;
  if (inv.model == "er") {
    cfg.params = ErParams{inv.n, inv.p, inv.directed};
    validate(std::get<ErParams>(cfg.params));
  } else if (inv.model == "ba") {
    cfg.params = BaParams{inv.n, inv.mprime};
    validate(std::get<BaParams>(cfg.params));
  } else if (inv.model == "affil") {
    cfg.params = AffiliationParams{inv.n, inv.cq, inv.cu, inv.s, inv.beta};
    validate(std::get<AffiliationParams>(cfg.params));
  } else {
    throw ConfigError("unknown model '" + inv.model + "' (expected er, ba or affil)");
  }
  return cfg;
}

inline int cmd_generate(const Invocation& inv, std::ostream& out) {
  std::uint64_t seed = 0;
  if (inv.seed) {
    seed = *inv.seed;
  } else {
    std::random_device rd;
    seed = (std::uint64_t{rd()} << 32) | rd();
  }
  const auto cfg = generator_config(inv, seed);
  StagedOutputs staged;
  Graph g;
  if (const auto* affil = std::get_if<AffiliationParams>(&cfg.params)) {
    auto result = generate_affiliation(*affil, seed);
    auto bip = staged.open(inv.output + ".bipartite.txt");
    bip << "# bipartite actors=" << result.bipartite.actor_count
        << " societies=" << result.bipartite.society_count
        << " memberships=" << result.bipartite.memberships.size() << '\n';
    for (auto [a, s] : result.bipartite.memberships) bip << a << '\t' << s << '\n';
    close_checked(bip, inv.output + ".bipartite.txt");
    g = std::move(result.graph);
  } else {
    g = generate(cfg);
  }
  auto os = staged.open(inv.output);
  write_edge_list(os, g);
  close_checked(os, inv.output);
  staged.commit();
  out << "n=" << g.node_count() << " m=" << g.edge_count() << " seed=" << seed << '\n';
  return kExitOk;
}

inline Graph load_graph(const std::string& path, bool directed_flag) {
  bool directed = directed_flag;
  if (const auto header = read_edge_list_header(path); header && header->directed) directed = true;
  return parse_edge_list(EdgeListSource::file(path), directed).graph;
}

inline KGrid parse_grid(const std::string& kind, std::size_t points) {
  if (kind == "root") return KGrid::root(points);
  if (kind == "linear") return KGrid::linear(points);
  if (kind == "full") return KGrid::full();
  throw ConfigError("unknown grid '" + kind + "' (expected root, linear or full)");
}

inline void echo_row(std::ostream& out, const char* label, const SweepTable& table) {
  if (table.m == 0) return;
  const auto k = static_cast<NodeId>(isqrt(table.m));
  const SweepRow* row = table.at(k);
  if (!row) return;
  out << label << " floor(sqrt(m))=" << k << " n=" << table.n << " m=" << table.m
      << " c1=" << format_real(row->c1)
      << " c2=" << (row->c2 ? format_real(*row->c2) : std::string("null"))
      << " c3=" << format_real(row->c3) << " components=" << row->components
      << " lcc=" << row->lcc_size;
  if (row->sym_ratio) out << " sym_ratio=" << format_real(*row->sym_ratio);
  out << '\n';
}

inline std::string arcs_path(const std::string& output) {
  fs::path p(output);
  const auto ext = p.extension().string();
  p.replace_extension();
  return p.string() + ".arcs" + (ext.empty() ? std::string(".csv") : ext);
}

inline int cmd_sweep(const Invocation& inv, std::ostream& out) {
  const auto grid = parse_grid(inv.grid, inv.points.value_or(200));
  const Graph g = load_graph(inv.input, inv.directed);
  const SweepInput input(g);
  StagedOutputs staged;

  const auto table = run_sweep(input, grid, Counting::edges);
  auto os = staged.open(inv.output);
  write_sweep_csv(os, table.rows);
  close_checked(os, inv.output);
  echo_row(out, g.directed() ? "[projection]" : "[undirected]", table);

  if (g.directed()) {
    const auto arcs = run_sweep(input, grid, Counting::arcs);
    const auto path = arcs_path(inv.output);
    auto as = staged.open(path);
    write_sweep_csv(as, arcs.rows);
    close_checked(as, path);
    echo_row(out, "[arcs]", arcs);
  }
  staged.commit();
  return kExitOk;
}

inline AxiomThresholds thresholds_from(const Invocation& inv) {
  AxiomThresholds thr;
  // A zero threshold switches its axiom off.
  thr.influence = inv.c1min != 0.0;
  thr.stability = inv.c2min != 0.0;
  thr.density = inv.c3min != 0.0;
  if (thr.influence) thr.c1_min = inv.c1min;
  if (thr.stability) thr.c2_min = inv.c2min;
  if (thr.density) thr.c3_min = inv.c3min;
  thr.validate();
  return thr;
}

inline int cmd_axioms(const Invocation& inv, std::ostream& out) {
  const auto thr = thresholds_from(inv);
  const auto grid = parse_grid(inv.grid, inv.points.value_or(2000));
  const Graph g = load_graph(inv.input, inv.directed);
  const SweepInput input(g);
  const auto table = run_sweep(input, grid, Counting::edges);
  const auto rep = assess_axioms(table, thr);

  StagedOutputs staged;
  auto os = staged.open(inv.output);
  os << to_json(rep).dump(2) << '\n';
  close_checked(os, inv.output);
  staged.commit();
  out << rep.verdict << '\n';
  return kExitOk;
}

inline int cmd_report(const Invocation& inv, std::ostream& out) {
  if (inv.inputs.empty()) throw ConfigError("report needs at least one --input");
  std::vector<NamedSweep> sweeps;
  for (const auto& path : inv.inputs) {
    std::ifstream is(path);
    if (!is) throw Error("cannot open " + path);
    try {
      sweeps.push_back({path, read_sweep_csv(is)});
    } catch (const ParseError& e) {
      throw Error(path + ": " + e.what());
    }
  }
  const auto data = build_plot_data(merge_sweeps(sweeps));
  fs::create_directories(inv.output);
  StagedOutputs staged;
  for (const auto& series : data.series) {
    const auto path = (fs::path(inv.output) / (series.metric + ".dat")).string();
    auto os = staged.open(path);
    write_plot_series(os, data, series);
    close_checked(os, path);
  }
  staged.commit();
  out << "n=" << data.n << " m=" << data.m << " series=" << data.series.size()
      << " sociability_argmax_k=" << data.sociability.argmax_k << '\n';
  return kExitOk;
}

/// Parses `args` (without the program name) and runs the subcommand.
/// Returns the process exit code.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rich-club elite analysis: generate graphs, sweep k-rich-clubs, check axioms"};
  app.name("elite");
  app.require_subcommand(1);
  Invocation inv;

  auto* gen = app.add_subcommand("generate", "Synthesize an ER, BA or Affiliation graph");
  gen->add_option("--model", inv.model, "er | ba | affil")->required();
  gen->add_option("--n", inv.n, "node count (actor target for affil)")->required();
  gen->add_option("--p", inv.p, "ER edge probability");
  gen->add_option("--mprime", inv.mprime, "BA edges per new node (and seed clique size)");
  gen->add_option("--cq", inv.cq, "affil: memberships copied by a new actor");
  gen->add_option("--cu", inv.cu, "affil: members copied by a new society");
  gen->add_option("--s", inv.s, "affil: preferential-attachment edges per actor");
  gen->add_option("--beta", inv.beta, "affil: probability a step adds an actor");
  gen->add_option("--seed", inv.seed, "root seed (random and printed when absent)");
  gen->add_option("-o,--output", inv.output, "edge-list path")->required();
  gen->add_flag("--directed", inv.directed, "ER: sample ordered pairs");

  auto* sweep = app.add_subcommand("sweep", "Metrics of every k-rich-club on a grid, as CSV");
  auto* axioms = app.add_subcommand("axioms", "Axiom report at floor(sqrt(m)) plus minimal elite");
  for (auto* sub : {sweep, axioms}) {
    sub->add_option("-i,--input", inv.input, "edge-list path")->required();
    sub->add_option("-o,--output", inv.output, "output path")->required();
    sub->add_flag("--directed", inv.directed, "read arcs instead of edges");
    sub->add_option("--grid", inv.grid, "root | linear | full");
    sub->add_option("--points", inv.points, "grid resolution");
  }
  axioms->add_option("--c1min", inv.c1min, "influence threshold (0 disables)");
  axioms->add_option("--c2min", inv.c2min, "stability threshold (0 disables)");
  axioms->add_option("--c3min", inv.c3min, "density threshold (0 disables)");

  auto* report = app.add_subcommand("report", "Plot-data files from sweep CSVs");
  report->add_option("-i,--input", inv.inputs, "sweep CSV (repeatable)")->required();
  report->add_option("-o,--output", inv.output, "output directory")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (gen->parsed()) return cmd_generate(inv, out);
    if (sweep->parsed()) return cmd_sweep(inv, out);
    if (axioms->parsed()) return cmd_axioms(inv, out);
    return cmd_report(inv, out);
  } catch (const ConfigError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace elite::cli
