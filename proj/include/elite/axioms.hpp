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
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "elite/error.hpp"
#include "elite/generators.hpp"
#include "elite/graph.hpp"
#include "elite/sweep.hpp"

namespace elite {

/// Lower bounds for the influence (c1), stability (c2) and density (c3)
/// constants. Inactive axioms are neither checked nor required.
struct AxiomThresholds {
  double c1_min = 0.05;
  double c2_min = 0.05;
  double c3_min = 0.01;
  bool influence = true;
  bool stability = true;
  bool density = true;

  void validate() const {
    if (!influence && !stability && !density) throw ConfigError("no axiom is active");
    if (!(c1_min > 0.0 && c1_min < 1.0)) throw ConfigError("c1_min must lie in (0, 1)");
    if (!(c2_min > 0.0 && c2_min < 1.0)) throw ConfigError("c2_min must lie in (0, 1)");
    if (!(c3_min > 0.0 && c3_min < 2.0)) throw ConfigError("c3_min must lie in (0, 2)");
  }
};

struct TheoremCheck {
  std::string name;
  bool holds = true;
  double lhs = 0.0;
  double rhs = 0.0;
  std::string detail;
};

struct AxiomReport {
  NodeId k = 0;
  EdgeCount m = 0;
  std::uint64_t sqrt_m = 0;
  double c1 = 0.0;
  std::optional<double> c2;
  double c3 = 0.0;
  AxiomThresholds thresholds;
  std::optional<bool> a1;  // influence
  std::optional<bool> a2;  // stability
  std::optional<bool> a4;  // density
  std::optional<NodeId> minimal_k;
  std::optional<double> minimal_k_over_sqrt_m;
  std::vector<TheoremCheck> theorem_checks;
  std::string verdict;

  bool all_active_pass() const {
    return a1.value_or(true) && a2.value_or(true) && a4.value_or(true);
  }
};

namespace detail {

inline void set_passes(AxiomReport& rep, const SweepRow& row, const AxiomThresholds& thr) {
  rep.k = row.k;
  rep.c1 = row.c1;
  rep.c2 = row.c2;
  rep.c3 = row.c3;
  rep.a1.reset();
  rep.a2.reset();
  rep.a4.reset();
  if (thr.influence) rep.a1 = row.c1 >= thr.c1_min;
  if (thr.stability) rep.a2 = row.c2.has_value() && *row.c2 >= thr.c2_min;
  if (thr.density) rep.a4 = row.c3 >= thr.c3_min;
}

inline bool passes(const SweepRow& row, const AxiomThresholds& thr) {
  if (thr.influence && !(row.c1 >= thr.c1_min)) return false;
  if (thr.stability && !(row.c2.has_value() && *row.c2 >= thr.c2_min)) return false;
  if (thr.density && !(row.c3 >= thr.c3_min)) return false;
  return true;
}

// Influence and stability together force |E|^2 > c1*c2*m. A violation can
// only come from a counting bug, so it raises.
inline void add_theorem_checks(AxiomReport& rep) {
  const double k = rep.k;
  if (rep.a1.value_or(false) && rep.a2.value_or(false)) {
    TheoremCheck lower{"size_lower_bound", true, k * k, rep.c1 * *rep.c2 * rep.m,
                       "k^2 > c1*c2*m"};
    lower.holds = lower.lhs > lower.rhs;
    if (!lower.holds) {
      throw Error("k^2 > c1*c2*m violated at k = " + std::to_string(rep.k));
    }
    rep.theorem_checks.push_back(lower);

    if (rep.k >= 2) {
      // Internal degree mass is at least c1*c2*m, so the club is dense with
      // at least this density constant.
      const double pairs = 0.5 * k * (k - 1);
      const double implied = rep.c1 * *rep.c2 * rep.m / pairs;
      rep.theorem_checks.push_back({"implied_density", rep.c3 >= implied * (1.0 - 1e-12),
                                    rep.c3, implied, "c3 >= c1*c2*m / C(k,2)"});
    }
    if (rep.a4.value_or(false)) {
      // c3*C(k,2) <= sum_di <= 2m bounds the club from above.
      const double c3 = rep.thresholds.c3_min;
      const double upper = 0.5 + std::sqrt(0.25 + 4.0 * rep.m / c3);
      rep.theorem_checks.push_back({"size_upper_bound", k <= upper, k, upper,
                                    "k <= 1/2 + sqrt(1/4 + 4m/c3_min)"});
    }
  }
}

inline std::string verdict_for(const AxiomReport& rep) {
  std::string text = "k=" + std::to_string(rep.k) + ":";
  auto mark = [&](const char* name, const std::optional<bool>& pass) {
    if (pass) text += std::string(" ") + name + (*pass ? " pass" : " FAIL");
  };
  mark("influence", rep.a1);
  mark("stability", rep.a2);
  mark("density", rep.a4);
  if (rep.minimal_k) {
    text += "; minimal elite k=" + std::to_string(*rep.minimal_k);
    if (rep.minimal_k_over_sqrt_m) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.3g", *rep.minimal_k_over_sqrt_m);
      text += std::string(" (") + buf + " x floor(sqrt(m)))";
    }
  } else {
    text += "; no grid point satisfies the active axioms";
  }
  return text;
}

}  // namespace detail

/// Axioms 1, 2 and 4 at club size k (which must be a grid point).
inline AxiomReport evaluate_axioms(const SweepTable& table, NodeId k, const AxiomThresholds& thr) {
  thr.validate();
  const SweepRow* row = table.at(k);
  if (!row) throw ContractError("no sweep row at k = " + std::to_string(k));
  AxiomReport rep;
  rep.m = table.m;
  rep.sqrt_m = table.m > 0 ? isqrt(table.m) : 0;
  rep.thresholds = thr;
  detail::set_passes(rep, *row, thr);
  detail::add_theorem_checks(rep);
  rep.verdict = detail::verdict_for(rep);
  return rep;
}

/// Smallest grid k at which every active axiom holds. The report is evaluated
/// there, or at floor(sqrt(m)) (else the first row) when no k qualifies.
inline AxiomReport minimal_elite(const SweepTable& table, const AxiomThresholds& thr) {
  thr.validate();
  AxiomReport rep;
  rep.m = table.m;
  rep.sqrt_m = table.m > 0 ? isqrt(table.m) : 0;
  rep.thresholds = thr;
  const SweepRow* hit = nullptr;
  for (const auto& row : table.rows) {
    if (detail::passes(row, thr)) {
      hit = &row;
      break;
    }
  }
  const SweepRow* shown = hit;
  if (!shown) shown = table.at(static_cast<NodeId>(rep.sqrt_m));
  if (!shown && !table.rows.empty()) shown = &table.rows.front();
  if (!shown) throw ContractError("sweep table has no rows");
  detail::set_passes(rep, *shown, thr);
  if (hit) {
    rep.minimal_k = hit->k;
    if (rep.sqrt_m > 0) rep.minimal_k_over_sqrt_m = static_cast<double>(hit->k) / rep.sqrt_m;
  }
  detail::add_theorem_checks(rep);
  rep.verdict = detail::verdict_for(rep);
  return rep;
}

/// Evaluation at floor(sqrt(m)) combined with the minimal-elite search.
inline AxiomReport assess_axioms(const SweepTable& table, const AxiomThresholds& thr) {
  if (table.m == 0) throw EmptyGraphError("graph has no edges");
  auto rep = evaluate_axioms(table, static_cast<NodeId>(isqrt(table.m)), thr);
  const auto minimal = minimal_elite(table, thr);
  rep.minimal_k = minimal.minimal_k;
  rep.minimal_k_over_sqrt_m = minimal.minimal_k_over_sqrt_m;
  for (const auto& check : minimal.theorem_checks) {
    auto copy = check;
    copy.name = "minimal_k." + copy.name;
    rep.theorem_checks.push_back(copy);
  }
  rep.verdict = detail::verdict_for(rep);
  return rep;
}

struct BaBoundReport {
  bool holds = true;
  std::optional<NodeId> first_violation;
  EdgeCount seed_edges = 0;   // C(m0, 2)
  double max_ratio = 0.0;     // max over k of internal_edges(k) / k
  NodeId max_ratio_k = 0;
  EdgeCount internal_at_seed_size = 0;
};

/// Checks internal_edges(k) <= m'*k + C(m0,2) at every k. Each node beyond
/// the seed clique brings at most m' edges, which is what keeps a BA
/// rich-club's edge count linear in k.
inline BaBoundReport verify_ba_bound(const SweepInput& input, const BaParams& params) {
  BaBoundReport rep;
  const EdgeCount m0 = params.mprime;
  rep.seed_edges = m0 * (m0 - 1) / 2;
  SweepState state(input);
  const NodeId n = input.node_count();
  for (NodeId r = 0; r < n; ++r) {
    state.add(r);
    const auto counts = state.counts();
    const EdgeCount bound = EdgeCount{params.mprime} * counts.k + rep.seed_edges;
    if (counts.internal_edges > bound && !rep.first_violation) {
      rep.holds = false;
      rep.first_violation = counts.k;
    }
    const double ratio = static_cast<double>(counts.internal_edges) / counts.k;
    if (ratio > rep.max_ratio) {
      rep.max_ratio = ratio;
      rep.max_ratio_k = counts.k;
    }
    if (counts.k == m0) rep.internal_at_seed_size = counts.internal_edges;
  }
  return rep;
}

struct ErDensityPoint {
  NodeId k = 0;
  EdgeCount internal_edges = 0;
  double expected = 0.0;  // p * C(k,2)
  double stddev = 0.0;    // sqrt(C(k,2) p (1-p))
  double z = 0.0;
  double c3 = 0.0;
};

struct ErDensityReport {
  double p = 0.0;
  std::vector<ErDensityPoint> points;
  bool pass = true;  // |z| <= 5 at every k >= 1000
};

/// Compares the rich-club's internal edge count with Binomial(C(k,2), p).
inline ErDensityReport estimate_er_density(const SweepInput& input, double p,
                                           const std::vector<NodeId>& ks) {
  ErDensityReport rep;
  rep.p = p;
  const auto table = run_sweep(input, KGrid::list(ks));
  for (NodeId k : ks) {
    const SweepRow* row = table.at(k);
    ErDensityPoint pt;
    pt.k = k;
    pt.internal_edges = row->internal_edges;
    const double pairs = 0.5 * static_cast<double>(k) * (static_cast<double>(k) - 1.0);
    pt.expected = p * pairs;
    pt.stddev = std::sqrt(pairs * p * (1.0 - p));
    const double diff = static_cast<double>(pt.internal_edges) - pt.expected;
    if (pt.stddev > 0.0) {
      pt.z = diff / pt.stddev;
    } else {
      pt.z = std::abs(diff) < 0.5 ? 0.0 : std::copysign(std::numeric_limits<double>::infinity(), diff);
    }
    pt.c3 = row->c3;
    if (k >= 1000 && !(std::abs(pt.z) <= 5.0)) rep.pass = false;
    rep.points.push_back(pt);
  }
  return rep;
}

}  // namespace elite
