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

#include <cmath>
#include <cstdio>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "elite/axioms.hpp"
#include "elite/error.hpp"
#include "elite/sweep.hpp"
#include "elite/sweep_csv.hpp"

namespace elite {

/// The axiom report as JSON, with the key set fixed by the report format.
inline nlohmann::json to_json(const AxiomReport& rep) {
  using nlohmann::json;
  auto opt = [](const auto& v) -> json { return v ? json(*v) : json(nullptr); };
  json checks = json::array();
  for (const auto& c : rep.theorem_checks) {
    checks.push_back({{"name", c.name}, {"holds", c.holds}, {"lhs", c.lhs}, {"rhs", c.rhs},
                      {"relation", c.detail}});
  }
  return {
      {"k", rep.k},
      {"sqrt_m", rep.sqrt_m},
      {"constants", {{"c1", rep.c1}, {"c2", opt(rep.c2)}, {"c3", rep.c3}}},
      {"thresholds",
       {{"c1_min", rep.thresholds.influence ? json(rep.thresholds.c1_min) : json(nullptr)},
        {"c2_min", rep.thresholds.stability ? json(rep.thresholds.c2_min) : json(nullptr)},
        {"c3_min", rep.thresholds.density ? json(rep.thresholds.c3_min) : json(nullptr)}}},
      {"passes", {{"a1", opt(rep.a1)}, {"a2", opt(rep.a2)}, {"a4", opt(rep.a4)}}},
      {"minimal_k", opt(rep.minimal_k)},
      {"minimal_k_over_sqrt_m", opt(rep.minimal_k_over_sqrt_m)},
      {"theorem_checks", checks},
  };
}

/// One sweep CSV, tagged with where it came from for error messages.
struct NamedSweep {
  std::string name;
  std::vector<SweepRow> rows;
};

/// Rows merged from one or more sweeps of the same graph.
struct MergedSweep {
  NodeId n = 0;
  EdgeCount m = 0;
  std::vector<SweepRow> rows;
};

/// Every grid ends at k = n, where all edges are internal, so n and m are
/// read off the last row. Inputs disagreeing on n or m, or on a shared row,
/// are rejected by name.
inline MergedSweep merge_sweeps(const std::vector<NamedSweep>& inputs) {
  if (inputs.empty()) throw ConfigError("no sweep inputs");
  MergedSweep out;
  std::map<NodeId, SweepRow> by_k;
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    const auto& in = inputs[i];
    if (in.rows.empty()) throw Error(in.name + ": no rows");
    const auto& last = in.rows.back();
    const NodeId n = last.k;
    const EdgeCount m = last.sum_di / 2;
    if (i == 0) {
      out.n = n;
      out.m = m;
    } else if (n != out.n || m != out.m) {
      throw Error(in.name + ": sweep of a different graph (n=" + std::to_string(n) + ", m=" +
                  std::to_string(m) + "; expected n=" + std::to_string(out.n) +
                  ", m=" + std::to_string(out.m) + ")");
    }
    for (const auto& row : in.rows) {
      auto [it, inserted] = by_k.emplace(row.k, row);
      if (!inserted && !(it->second == row)) {
        throw Error(in.name + ": row k=" + std::to_string(row.k) + " disagrees with an earlier input");
      }
    }
  }
  if (out.n < 2) throw Error(inputs.front().name + ": need at least 2 nodes for a log_n axis");
  for (auto& [k, row] : by_k) out.rows.push_back(row);
  return out;
}

struct PlotSeries {
  std::string metric;
  std::vector<std::pair<double, double>> points;  // (log_n k, value)
};

struct PlotData {
  NodeId n = 0;
  EdgeCount m = 0;
  std::vector<PlotSeries> series;
  SociabilityProfile sociability;
};

inline double log_n(NodeId k, NodeId n) {
  return std::log(static_cast<double>(k)) / std::log(static_cast<double>(n));
}

inline PlotData build_plot_data(const MergedSweep& merged) {
  PlotData data;
  data.n = merged.n;
  data.m = merged.m;
  auto series = [&](std::string name, auto value) {
    PlotSeries s{std::move(name), {}};
    for (const auto& row : merged.rows) {
      const std::optional<double> y = value(row);
      if (y) s.points.emplace_back(log_n(row.k, merged.n), *y);
    }
    if (!s.points.empty()) data.series.push_back(std::move(s));
  };
  using Y = std::optional<double>;
  series("c1", [](const SweepRow& r) -> Y { return r.c1; });
  series("c2", [](const SweepRow& r) -> Y { return r.c2; });
  series("c3", [](const SweepRow& r) -> Y { return r.c3; });
  series("coverage", [](const SweepRow& r) -> Y { return r.coverage; });
  series("components", [](const SweepRow& r) -> Y { return double(r.components); });
  series("lcc_size", [](const SweepRow& r) -> Y { return double(r.lcc_size); });
  series("sym_ratio", [](const SweepRow& r) -> Y { return r.sym_ratio; });
  data.sociability = sociability_profile(merged.rows);
  PlotSeries soc{"sociability", {}};
  for (const auto& pt : data.sociability.points) soc.points.emplace_back(log_n(pt.k, data.n), pt.value);
  data.series.push_back(std::move(soc));
  return data;
}

/// Two whitespace-separated columns under a '#' annotation line.
inline void write_plot_series(std::ostream& os, const PlotData& data, const PlotSeries& s) {
  os << "# x=log_n(k) y=" << s.metric << " n=" << data.n << " m=" << data.m;
  if (data.m > 0) os << " sqrt_m_x=" << format_real(log_n(static_cast<NodeId>(isqrt(data.m)), data.n));
  if (s.metric == "sociability") {
    os << " max=1 argmax_k=" << data.sociability.argmax_k
       << " argmax_x=" << format_real(log_n(data.sociability.argmax_k, data.n))
       << " max_raw=" << format_real(data.sociability.max_raw);
  }
  os << '\n';
  for (const auto& [x, y] : s.points) os << format_real(x) << ' ' << format_real(y) << '\n';
}

}  // namespace elite
