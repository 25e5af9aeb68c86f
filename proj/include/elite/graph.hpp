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
#include <span>
#include <utility>
#include <vector>

#include "elite/error.hpp"

namespace elite {

using NodeId = std::uint32_t;
using EdgeCount = std::uint64_t;
using Edge = std::pair<NodeId, NodeId>;

// Counts of input pairs discarded while normalizing to a simple graph.
struct NormalizationStats {
  EdgeCount self_loops = 0;
  EdgeCount duplicates = 0;
};

/// Immutable simple graph in compressed sparse row form.
///
/// Undirected graphs store every edge in both endpoint lists. Directed graphs
/// store out-neighbors and keep a separate in-degree count per node. All
/// neighbor lists are sorted ascending, so membership is a binary search.
class Graph {
 public:
  Graph() : offsets_(1, 0) {}

  /// Builds a simple graph from raw pairs: self-loops and duplicates are
  /// dropped (and counted in `stats` when given). In undirected mode (u,v) and
  /// (v,u) are the same edge. Every id must be below `n`.
  static Graph from_edges(NodeId n, std::vector<Edge> edges, bool directed,
                          NormalizationStats* stats = nullptr) {
    NormalizationStats local;
    std::vector<std::uint64_t> keys;
    keys.reserve(edges.size());
    for (auto [u, v] : edges) {
      if (u >= n || v >= n) throw ContractError("edge endpoint out of range");
      if (u == v) {
        ++local.self_loops;
        continue;
      }
      if (!directed && u > v) std::swap(u, v);
      keys.push_back((std::uint64_t{u} << 32) | v);
    }
    edges.clear();
    edges.shrink_to_fit();
    std::sort(keys.begin(), keys.end());
    const auto last = std::unique(keys.begin(), keys.end());
    local.duplicates = static_cast<EdgeCount>(keys.end() - last);
    keys.erase(last, keys.end());

    Graph g;
    g.directed_ = directed;
    g.edge_count_ = keys.size();
    g.offsets_.assign(std::size_t{n} + 1, 0);
    if (directed) g.in_degree_.assign(n, 0);
    for (auto key : keys) {
      const auto u = static_cast<NodeId>(key >> 32);
      const auto v = static_cast<NodeId>(key);
      ++g.offsets_[u + 1];
      if (directed) {
        ++g.in_degree_[v];
      } else {
        ++g.offsets_[v + 1];
      }
    }
    for (std::size_t i = 0; i < n; ++i) g.offsets_[i + 1] += g.offsets_[i];
    g.targets_.resize(g.offsets_[n]);
    std::vector<EdgeCount> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
    // Keys are sorted by (u, v), so both endpoint lists fill in ascending order.
    for (auto key : keys) {
      const auto u = static_cast<NodeId>(key >> 32);
      const auto v = static_cast<NodeId>(key);
      g.targets_[cursor[u]++] = v;
      if (!directed) g.targets_[cursor[v]++] = u;
    }
    if (stats) *stats = local;
    return g;
  }

  NodeId node_count() const noexcept {
    return static_cast<NodeId>(offsets_.size() - 1);
  }
  /// Undirected edges, or arcs in directed mode.
  EdgeCount edge_count() const noexcept { return edge_count_; }
  bool directed() const noexcept { return directed_; }

  /// Sorted neighbors (out-neighbors in directed mode).
  std::span<const NodeId> neighbors(NodeId v) const noexcept {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }

  EdgeCount out_degree(NodeId v) const noexcept {
    return offsets_[v + 1] - offsets_[v];
  }
  EdgeCount in_degree(NodeId v) const noexcept {
    return directed_ ? in_degree_[v] : out_degree(v);
  }
  /// Total degree: in + out for directed graphs.
  EdgeCount degree(NodeId v) const noexcept {
    return directed_ ? out_degree(v) + in_degree_[v] : out_degree(v);
  }

  /// Arc u->v in directed mode, edge {u,v} otherwise.
  bool has_edge(NodeId u, NodeId v) const noexcept {
    const auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
  }

  /// Every edge once: (u,v) with u<v when undirected, every arc when directed.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (NodeId u = 0; u < node_count(); ++u) {
      for (NodeId v : neighbors(u)) {
        if (directed_ || u < v) out.emplace_back(u, v);
      }
    }
    return out;
  }

  bool operator==(const Graph&) const = default;

 private:
  std::vector<EdgeCount> offsets_;
  std::vector<NodeId> targets_;
  std::vector<EdgeCount> in_degree_;
  EdgeCount edge_count_ = 0;
  bool directed_ = false;
};

/// Undirected simple graph with {u,v} present iff u->v or v->u is.
/// Undirected input is returned unchanged.
inline Graph underlying_undirected(const Graph& g) {
  if (!g.directed()) return g;
  return Graph::from_edges(g.node_count(), g.edges(), false);
}

/// Exact integer floor of sqrt(x).
inline std::uint64_t isqrt(std::uint64_t x) noexcept {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(x)));
  while (r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r;
}

/// floor(sqrt(m)), the size of the sqrt(m)-rich-club.
inline std::uint64_t floor_sqrt_edges(const Graph& g) {
  if (g.edge_count() == 0) throw EmptyGraphError("graph has no edges");
  return isqrt(g.edge_count());
}

}  // namespace elite
