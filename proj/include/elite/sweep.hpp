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

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "elite/error.hpp"
#include "elite/graph.hpp"

namespace elite {

/// Nodes ranked by degree, highest first, ties by ascending id. Directed graphs
/// rank by total degree (in + out).
struct DegreeOrder {
  std::vector<NodeId> node_at_rank;
  std::vector<NodeId> rank_of;

  NodeId size() const noexcept { return static_cast<NodeId>(node_at_rank.size()); }
};

inline DegreeOrder degree_order(const Graph& g) {
  const NodeId n = g.node_count();
  if (n == 0) throw EmptyGraphError("cannot rank an empty graph");
  DegreeOrder order;
  order.node_at_rank.resize(n);
  std::iota(order.node_at_rank.begin(), order.node_at_rank.end(), NodeId{0});
  std::vector<EdgeCount> deg(n);
  for (NodeId v = 0; v < n; ++v) deg[v] = g.degree(v);
  // Stable sort on a range that starts in id order breaks ties by id.
  std::stable_sort(order.node_at_rank.begin(), order.node_at_rank.end(),
                   [&](NodeId a, NodeId b) { return deg[a] > deg[b]; });
  order.rank_of.resize(n);
  for (NodeId r = 0; r < n; ++r) order.rank_of[order.node_at_rank[r]] = r;
  return order;
}

/// How internal and cut mass is counted for directed inputs. `edges` uses the
/// undirected projection (the setting the axioms are stated for); `arcs`
/// counts every arc of the directed graph. Components and coverage always use
/// the projection.
enum class Counting { edges, arcs };

/// What a sweep reads: the undirected projection, the directed original when
/// there is one, and the degree order of the input graph.
///
/// The source graph must outlive the SweepInput.
class SweepInput {
 public:
  explicit SweepInput(const Graph& g) : source_(&g), order_(degree_order(g)) {
    if (g.directed()) projection_ = underlying_undirected(g);
  }

  const Graph& undirected() const noexcept {
    return projection_ ? *projection_ : *source_;
  }
  /// Directed original, or nullptr for undirected input.
  const Graph* directed() const noexcept {
    return source_->directed() ? source_ : nullptr;
  }
  const Graph& source() const noexcept { return *source_; }
  const DegreeOrder& order() const noexcept { return order_; }
  NodeId node_count() const noexcept { return source_->node_count(); }

  /// Edge total the influence constant is normalized by.
  EdgeCount reference_edges(Counting counting) const {
    if (counting == Counting::arcs) {
      if (!directed()) throw ContractError("arc counting requires a directed graph");
      return source_->edge_count();
    }
    return undirected().edge_count();
  }

 private:
  const Graph* source_;
  std::optional<Graph> projection_;
  DegreeOrder order_;
};

/// All metrics of the k-rich-club (the subgraph induced by the k top-ranked
/// nodes). Optional fields are empty where the value is undefined.
struct SweepRow {
  NodeId k = 0;
  EdgeCount degree_at_k = 0;
  EdgeCount sum_di = 0;          // twice the internal edge count
  EdgeCount sum_do = 0;          // cut size
  EdgeCount internal_edges = 0;
  double c1 = 0.0;               // sum_do / m
  std::optional<double> c2;      // sum_di / sum_do
  double c3 = 0.0;               // sum_di / C(k,2)
  double sociability_raw = 0.0;  // internal_edges / k
  NodeId components = 0;
  NodeId lcc_size = 0;
  std::optional<double> coverage;  // covered outside nodes / (n - k)
  std::optional<EdgeCount> internal_arcs;
  std::optional<EdgeCount> reciprocal_arcs;
  std::optional<double> sym_ratio;

  bool operator==(const SweepRow&) const = default;
};

/// Raw counters of a k-rich-club; every SweepRow is derived from these.
struct ClubCounts {
  NodeId k = 0;
  NodeId n = 0;
  EdgeCount reference_edges = 0;
  EdgeCount degree_at_k = 0;
  EdgeCount sum_di = 0;
  EdgeCount sum_do = 0;
  EdgeCount internal_edges = 0;
  NodeId components = 0;
  NodeId lcc_size = 0;
  NodeId covered_outside = 0;
  bool directed = false;
  EdgeCount internal_arcs = 0;
  EdgeCount reciprocal_arcs = 0;
};

inline SweepRow make_row(const ClubCounts& c) {
  SweepRow row;
  row.k = c.k;
  row.degree_at_k = c.degree_at_k;
  row.sum_di = c.sum_di;
  row.sum_do = c.sum_do;
  row.internal_edges = c.internal_edges;
  const auto sum_di = static_cast<double>(c.sum_di);
  const auto sum_do = static_cast<double>(c.sum_do);
  row.c1 = c.reference_edges > 0 ? sum_do / static_cast<double>(c.reference_edges) : 0.0;
  if (c.sum_do > 0) row.c2 = sum_di / sum_do;
  if (c.k >= 2) {
    const double pairs = 0.5 * static_cast<double>(c.k) * static_cast<double>(c.k - 1);
    row.c3 = sum_di / pairs;
  }
  row.sociability_raw = static_cast<double>(c.internal_edges) / static_cast<double>(c.k);
  row.components = c.components;
  row.lcc_size = c.lcc_size;
  if (c.k < c.n) {
    row.coverage = static_cast<double>(c.covered_outside) / static_cast<double>(c.n - c.k);
  }
  if (c.directed) {
    row.internal_arcs = c.internal_arcs;
    row.reciprocal_arcs = c.reciprocal_arcs;
    if (c.internal_arcs > 0) {
      row.sym_ratio = static_cast<double>(c.reciprocal_arcs) / static_cast<double>(c.internal_arcs);
    }
  }
  return row;
}

/// Incremental k-rich-club state: adding the node at rank k turns the state
/// for the top-k into the state for the top-(k+1) in O(deg) amortized time.
class SweepState {
 public:
  explicit SweepState(const SweepInput& input, Counting counting = Counting::edges)
      : input_(&input),
        counting_(counting),
        reference_edges_(input.reference_edges(counting)),
        parent_(input.node_count()),
        size_(input.node_count(), 0),
        included_(input.node_count(), 0),
        covered_(input.node_count(), 0) {}

  NodeId k() const noexcept { return k_; }

  /// Adds the node at `rank`, which must be the next rank (== k()).
  void add(NodeId rank) {
    if (rank != k_ || rank >= input_->node_count()) {
      throw ContractError("sweep ranks must be added in order, one at a time");
    }
    const NodeId v = input_->order().node_at_rank[rank];
    const Graph& g = input_->undirected();
    const Graph* arcs = input_->directed();

    included_[v] = 1;
    parent_[v] = v;
    size_[v] = 1;
    ++components_;
    lcc_ = std::max<NodeId>(lcc_, 1);
    if (covered_[v]) --covered_outside_;

    for (NodeId u : g.neighbors(v)) {
      EdgeCount fwd = 0;
      EdgeCount back = 0;
      if (arcs) {
        fwd = arcs->has_edge(v, u) ? 1 : 0;
        back = arcs->has_edge(u, v) ? 1 : 0;
      }
      if (included_[u]) {
        sum_di_ += 2;
        --sum_do_;
        ++internal_edges_;
        if (arcs) {
          internal_arcs_ += fwd + back;
          if (fwd && back) reciprocal_arcs_ += 2;
          crossing_arcs_ -= fwd + back;
        }
        unite(v, u);
      } else {
        ++sum_do_;
        crossing_arcs_ += fwd + back;
        if (!covered_[u]) {
          covered_[u] = 1;
          ++covered_outside_;
        }
      }
    }
    ++k_;
  }

  void advance() { add(k_); }

  ClubCounts counts() const {
    ClubCounts c;
    c.k = k_;
    c.n = input_->node_count();
    c.reference_edges = reference_edges_;
    c.degree_at_k = k_ > 0 ? input_->source().degree(input_->order().node_at_rank[k_ - 1]) : 0;
    if (counting_ == Counting::arcs) {
      c.sum_di = 2 * internal_arcs_;
      c.sum_do = crossing_arcs_;
      c.internal_edges = internal_arcs_;
    } else {
      c.sum_di = sum_di_;
      c.sum_do = sum_do_;
      c.internal_edges = internal_edges_;
    }
    c.components = components_;
    c.lcc_size = lcc_;
    c.covered_outside = covered_outside_;
    c.directed = input_->directed() != nullptr;
    c.internal_arcs = internal_arcs_;
    c.reciprocal_arcs = reciprocal_arcs_;
    return c;
  }

  SweepRow row() const {
    if (k_ == 0) throw ContractError("no rich-club rows exist for k = 0");
    return make_row(counts());
  }

 private:
  NodeId find(NodeId x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(NodeId a, NodeId b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    lcc_ = std::max(lcc_, size_[a]);
    --components_;
  }

  const SweepInput* input_;
  Counting counting_;
  EdgeCount reference_edges_;
  NodeId k_ = 0;
  EdgeCount sum_di_ = 0;
  EdgeCount sum_do_ = 0;
  EdgeCount internal_edges_ = 0;
  EdgeCount internal_arcs_ = 0;
  EdgeCount reciprocal_arcs_ = 0;
  EdgeCount crossing_arcs_ = 0;
  NodeId components_ = 0;
  NodeId lcc_ = 0;
  NodeId covered_outside_ = 0;
  std::vector<NodeId> parent_;
  std::vector<NodeId> size_;
  std::vector<char> included_;
  std::vector<char> covered_;
};

/// Recomputes the k-rich-club from scratch: induced subgraph, cut, components
/// by traversal and coverage by a scan of every outside node. O(n + m) per
/// call; this is the reference the incremental sweep is tested against.
inline SweepRow metrics_at_k(const SweepInput& input, NodeId k,
                             Counting counting = Counting::edges) {
  const NodeId n = input.node_count();
  if (k < 1 || k > n) throw ContractError("k must lie in [1, n]");
  const Graph& g = input.undirected();
  std::vector<char> in_club(n, 0);
  for (NodeId r = 0; r < k; ++r) in_club[input.order().node_at_rank[r]] = 1;

  ClubCounts c;
  c.k = k;
  c.n = n;
  c.reference_edges = input.reference_edges(counting);
  c.degree_at_k = input.source().degree(input.order().node_at_rank[k - 1]);

  for (const auto& [u, v] : g.edges()) {
    const int inside = in_club[u] + in_club[v];
    if (inside == 2) ++c.internal_edges;
    if (inside == 1) ++c.sum_do;
  }
  c.sum_di = 2 * c.internal_edges;

  // Components of the induced subgraph by breadth-first search.
  std::vector<char> seen(n, 0);
  std::vector<NodeId> queue;
  for (NodeId r = 0; r < k; ++r) {
    const NodeId start = input.order().node_at_rank[r];
    if (seen[start]) continue;
    ++c.components;
    queue.assign(1, start);
    seen[start] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (NodeId w : g.neighbors(queue[head])) {
        if (in_club[w] && !seen[w]) {
          seen[w] = 1;
          queue.push_back(w);
        }
      }
    }
    c.lcc_size = std::max(c.lcc_size, static_cast<NodeId>(queue.size()));
  }

  for (NodeId v = 0; v < n; ++v) {
    if (in_club[v]) continue;
    const auto nb = g.neighbors(v);
    if (std::any_of(nb.begin(), nb.end(), [&](NodeId w) { return in_club[w] != 0; })) {
      ++c.covered_outside;
    }
  }

  if (const Graph* d = input.directed()) {
    c.directed = true;
    EdgeCount crossing = 0;
    for (const auto& [u, v] : d->edges()) {
      const int inside = in_club[u] + in_club[v];
      if (inside == 2) {
        ++c.internal_arcs;
        if (d->has_edge(v, u)) ++c.reciprocal_arcs;
      } else if (inside == 1) {
        ++crossing;
      }
    }
    if (counting == Counting::arcs) {
      c.internal_edges = c.internal_arcs;
      c.sum_di = 2 * c.internal_arcs;
      c.sum_do = crossing;
    }
  }
  return make_row(c);
}

/// Which club sizes a sweep reports.
struct KGrid {
  enum class Kind { root, linear, full, list };

  Kind kind = Kind::root;
  std::size_t points = 200;
  std::vector<NodeId> ks;  // for Kind::list

  /// k = round(n^(i/P)) for i = 0..P.
  static KGrid root(std::size_t points = 200) { return {Kind::root, points, {}}; }
  /// k = round(i*n/P) for i = 1..P.
  static KGrid linear(std::size_t points = 200) { return {Kind::linear, points, {}}; }
  static KGrid full() { return {Kind::full, 0, {}}; }
  static KGrid list(std::vector<NodeId> ks) { return {Kind::list, 0, std::move(ks)}; }
};

/// Sorted, deduplicated club sizes for a graph with n nodes and m edges.
/// floor(sqrt(m)) and floor(sqrt(n)) are always included.
inline std::vector<NodeId> grid_points(const KGrid& grid, NodeId n, EdgeCount m) {
  if (n == 0) throw ConfigError("grid over an empty graph");
  std::vector<NodeId> ks;
  switch (grid.kind) {
    case KGrid::Kind::root:
    case KGrid::Kind::linear: {
      if (grid.points == 0) throw ConfigError("grid needs at least one point");
      const auto p = static_cast<double>(grid.points);
      const std::size_t first = grid.kind == KGrid::Kind::root ? 0 : 1;
      for (std::size_t i = first; i <= grid.points; ++i) {
        const double x = static_cast<double>(i) / p;
        const double k = grid.kind == KGrid::Kind::root ? std::round(std::pow(n, x))
                                                        : std::round(x * n);
        ks.push_back(static_cast<NodeId>(std::clamp(k, 1.0, static_cast<double>(n))));
      }
      break;
    }
    case KGrid::Kind::full:
      ks.resize(n);
      std::iota(ks.begin(), ks.end(), NodeId{1});
      break;
    case KGrid::Kind::list:
      if (grid.ks.empty()) throw ConfigError("empty k list");
      for (NodeId k : grid.ks) {
        if (k < 1 || k > n) throw ConfigError("k = " + std::to_string(k) + " outside [1, n]");
      }
      ks = grid.ks;
      break;
  }
  if (m > 0) ks.push_back(static_cast<NodeId>(std::min<EdgeCount>(isqrt(m), n)));
  ks.push_back(static_cast<NodeId>(std::max<EdgeCount>(isqrt(n), 1)));
  std::sort(ks.begin(), ks.end());
  ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
  return ks;
}

/// Rows of one sweep plus the totals needed to interpret them.
struct SweepTable {
  NodeId n = 0;
  EdgeCount m = 0;  // undirected edges, or arcs under Counting::arcs
  bool directed = false;
  Counting counting = Counting::edges;
  std::vector<SweepRow> rows;

  /// Row at club size k, or nullptr when k is not on the grid.
  const SweepRow* at(NodeId k) const {
    auto it = std::lower_bound(rows.begin(), rows.end(), k,
                               [](const SweepRow& r, NodeId key) { return r.k < key; });
    return it != rows.end() && it->k == k ? &*it : nullptr;
  }
};

/// One pass over the degree order, emitting a row at every grid point.
inline SweepTable run_sweep(const SweepInput& input, const KGrid& grid,
                            Counting counting = Counting::edges) {
  SweepTable table;
  table.n = input.node_count();
  table.m = input.reference_edges(counting);
  table.directed = input.directed() != nullptr;
  table.counting = counting;
  const auto ks = grid_points(grid, table.n, table.m);
  if (ks.empty()) throw ConfigError("empty grid");
  table.rows.reserve(ks.size());
  SweepState state(input, counting);
  for (NodeId k : ks) {
    while (state.k() < k) state.advance();
    table.rows.push_back(state.row());
  }
  return table;
}

struct SociabilityPoint {
  NodeId k = 0;
  double value = 0.0;  // internal_edges/k over its maximum
};

struct SociabilityProfile {
  std::vector<SociabilityPoint> points;
  NodeId argmax_k = 0;
  double max_raw = 0.0;
};

/// Internal edges per member, normalized to a maximum of exactly 1. The first
/// k attaining the maximum is reported.
inline SociabilityProfile sociability_profile(const std::vector<SweepRow>& rows) {
  SociabilityProfile profile;
  for (const auto& row : rows) {
    if (row.sociability_raw > profile.max_raw) {
      profile.max_raw = row.sociability_raw;
      profile.argmax_k = row.k;
    }
  }
  if (!(profile.max_raw > 0.0)) {
    throw DegenerateProfileError("sociability is zero everywhere (no internal edges)");
  }
  profile.points.reserve(rows.size());
  for (const auto& row : rows) {
    profile.points.push_back({row.k, row.sociability_raw / profile.max_raw});
  }
  return profile;
}

struct ReciprocityCount {
  EdgeCount internal_arcs = 0;
  EdgeCount reciprocal_arcs = 0;
  std::optional<double> ratio;
};

/// Arcs with both endpoints among the top-k, and how many of them have their
/// reverse arc present.
inline ReciprocityCount reciprocity_at_k(const Graph& g, const DegreeOrder& order, NodeId k) {
  if (!g.directed()) throw ContractError("reciprocity needs a directed graph");
  if (k < 1 || k > g.node_count()) throw ContractError("k must lie in [1, n]");
  ReciprocityCount out;
  for (NodeId r = 0; r < k; ++r) {
    const NodeId u = order.node_at_rank[r];
    for (NodeId v : g.neighbors(u)) {
      if (order.rank_of[v] >= k) continue;
      ++out.internal_arcs;
      if (g.has_edge(v, u)) ++out.reciprocal_arcs;
    }
  }
  if (out.internal_arcs > 0) {
    out.ratio = static_cast<double>(out.reciprocal_arcs) / static_cast<double>(out.internal_arcs);
  }
  return out;
}

}  // namespace elite
