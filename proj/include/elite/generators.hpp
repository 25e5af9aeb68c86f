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
#include <string>
#include <variant>
#include <vector>

#include "elite/error.hpp"
#include "elite/graph.hpp"
#include "elite/random.hpp"

namespace elite {

/// G(n, p): every pair (ordered pair when `directed`) present independently.
struct ErParams {
  NodeId n = 0;
  double p = 0.0;
  bool directed = false;
};

/// Preferential attachment grown from a clique on `mprime` nodes; every new
/// node attaches to `mprime` distinct existing nodes.
struct BaParams {
  NodeId n = 0;
  NodeId mprime = 0;
};

/// Bipartite actor/society growth model folded into an actor graph.
struct AffiliationParams {
  NodeId actors = 0;   // target actor count
  NodeId cq = 2;       // society edges copied by a new actor
  NodeId cu = 2;       // member edges copied by a new society
  NodeId s = 2;        // preferential-attachment edges per new actor
  double beta = 0.5;   // probability that a step adds an actor
};

struct GeneratorConfig {
  std::uint64_t seed = 0;
  std::variant<ErParams, BaParams, AffiliationParams> params;
};

inline void validate(const ErParams& p) {
  if (p.n < 1) throw ConfigError("ER: n must be at least 1");
  if (!(p.p > 0.0 && p.p <= 1.0)) throw ConfigError("ER: p must lie in (0, 1]");
}

inline void validate(const BaParams& p) {
  if (p.mprime < 1) throw ConfigError("BA: m' must be at least 1");
  if (p.n < p.mprime) throw ConfigError("BA: n must be at least m'");
}

inline void validate(const AffiliationParams& p) {
  if (p.actors < 2) throw ConfigError("Affiliation: actor target must be at least 2");
  if (p.cq < 1 || p.cu < 1) throw ConfigError("Affiliation: c_q and c_u must be at least 1");
  if (!(p.beta > 0.0 && p.beta < 1.0)) throw ConfigError("Affiliation: beta must lie in (0, 1)");
}

namespace streams {
inline constexpr std::uint64_t kEr = 1;
inline constexpr std::uint64_t kBa = 2;
inline constexpr std::uint64_t kAffiliationGrowth = 3;
inline constexpr std::uint64_t kAffiliationAttach = 4;
}  // namespace streams

/// Erdos-Renyi graph sampled by geometric skipping over the pair sequence
/// (0,1),(0,2),...,(1,2),... so the work is O(n + m) rather than O(n^2).
/// Directed mode walks the ordered pairs (i,j), j != i, row by row.
inline Graph generate_er(const ErParams& params, std::uint64_t seed) {
  validate(params);
  const std::uint64_t n = params.n;
  const bool directed = params.directed;
  auto row_length = [&](std::uint64_t i) { return directed ? n - 1 : n - 1 - i; };
  auto column = [&](std::uint64_t i, std::uint64_t c) {
    return directed ? (c < i ? c : c + 1) : i + 1 + c;
  };

  std::vector<Edge> edges;
  const double expected = static_cast<double>(n) * static_cast<double>(n - 1) *
                          (directed ? 1.0 : 0.5) * params.p;
  edges.reserve(static_cast<std::size_t>(expected + 6 * std::sqrt(expected) + 16));

  Rng rng = Rng::substream(seed, streams::kEr);
  const double log_q = std::log1p(-params.p);
  std::uint64_t row = 0;
  std::uint64_t col = 0;
  while (row < n) {
    double skip = 0.0;
    if (params.p < 1.0) {
      skip = std::floor(std::log(rng.uniform_open_low()) / log_q);
    }
    while (row < n && skip >= static_cast<double>(row_length(row) - col)) {
      skip -= static_cast<double>(row_length(row) - col);
      ++row;
      col = 0;
    }
    if (row >= n) break;
    col += static_cast<std::uint64_t>(skip);
    edges.emplace_back(static_cast<NodeId>(row), static_cast<NodeId>(column(row, col)));
    ++col;
  }
  return Graph::from_edges(params.n, std::move(edges), directed);
}

struct NoGrowthObserver {
  void operator()(NodeId, const std::vector<NodeId>&) const noexcept {}
};

/// Barabasi-Albert graph. Nodes 0..m'-1 form the seed clique; node t >= m'
/// draws targets with probability deg(i) / sum_j deg(j) from the endpoint list
/// and redraws on repeats until it has m' distinct targets.
///
/// `observe(t, draws)` sees every draw of step t in order, repeats included.
template <class Observer = NoGrowthObserver>
Graph generate_ba(const BaParams& params, std::uint64_t seed, Observer&& observe = {}) {
  validate(params);
  const NodeId seed_size = params.mprime;
  std::vector<Edge> edges;
  edges.reserve(std::size_t{seed_size} * (seed_size - 1) / 2 +
                std::size_t{params.n - seed_size} * params.mprime);
  std::vector<NodeId> endpoints;
  endpoints.reserve(2 * edges.capacity());
  for (NodeId u = 0; u < seed_size; ++u) {
    for (NodeId v = u + 1; v < seed_size; ++v) {
      edges.emplace_back(u, v);
      endpoints.push_back(u);
      endpoints.push_back(v);
    }
  }

  Rng rng = Rng::substream(seed, streams::kBa);
  std::vector<NodeId> targets;
  std::vector<NodeId> draws;
  for (NodeId t = seed_size; t < params.n; ++t) {
    targets.clear();
    draws.clear();
    while (targets.size() < params.mprime) {
      // An edgeless seed (m' = 1) has no endpoints yet: fall back to uniform.
      const NodeId pick = endpoints.empty()
                              ? static_cast<NodeId>(rng.below(t))
                              : endpoints[rng.below(endpoints.size())];
      draws.push_back(pick);
      if (std::find(targets.begin(), targets.end(), pick) == targets.end()) {
        targets.push_back(pick);
      }
    }
    observe(t, draws);
    for (NodeId v : targets) {
      edges.emplace_back(t, v);
      endpoints.push_back(t);
      endpoints.push_back(v);
    }
  }
  return Graph::from_edges(params.n, std::move(edges), false);
}

/// Actor/society incidence. Actors and societies are numbered independently
/// from 0.
struct BipartiteAffiliation {
  NodeId actor_count = 0;
  NodeId society_count = 0;
  std::vector<Edge> memberships;  // (actor, society), no duplicates
};

/// Actor graph with an edge between two actors iff they share a society.
inline Graph fold_bipartite(const BipartiteAffiliation& b,
                            const std::vector<Edge>& extra_edges = {}) {
  std::vector<std::vector<NodeId>> members(b.society_count);
  std::vector<std::vector<NodeId>> societies_of(b.actor_count);
  for (auto [a, s] : b.memberships) {
    if (a >= b.actor_count || s >= b.society_count) {
      throw ContractError("membership refers to an unknown actor or society");
    }
    members[s].push_back(a);
    societies_of[a].push_back(s);
  }
  std::vector<Edge> edges(extra_edges);
  std::vector<NodeId> stamp(b.actor_count, 0xffffffffu);
  for (NodeId a = 0; a < b.actor_count; ++a) {
    for (NodeId s : societies_of[a]) {
      for (NodeId other : members[s]) {
        if (other > a && stamp[other] != a) {
          stamp[other] = a;
          edges.emplace_back(a, other);
        }
      }
    }
  }
  return Graph::from_edges(b.actor_count, std::move(edges), false);
}

struct AffiliationGraph {
  BipartiteAffiliation bipartite;
  /// Actor edges added by preferential attachment, on top of the folding.
  std::vector<Edge> attachment_edges;
  Graph graph;
};

namespace detail {

// Fenwick tree over non-negative integer weights with weighted sampling.
class WeightTree {
 public:
  void push_back(std::uint64_t w) {
    tree_.push_back(0);
    weights_.push_back(0);
    // Rebuild the new node's partial sum from its covered range.
    const std::size_t i = tree_.size();
    const std::size_t low = i - (i & (~i + 1));
    std::uint64_t sum = 0;
    for (std::size_t j = i - 1; j > low; j -= (j & (~j + 1))) sum += tree_[j - 1];
    tree_[i - 1] = sum;
    add(i - 1, static_cast<std::int64_t>(w));
  }

  void set(std::size_t idx, std::uint64_t w) {
    add(idx, static_cast<std::int64_t>(w) - static_cast<std::int64_t>(weights_[idx]));
  }

  std::uint64_t total() const noexcept { return total_; }

  /// Index holding cumulative position `r` in [0, total()).
  std::size_t find(std::uint64_t r) const {
    std::size_t pos = 0;
    std::size_t step = std::size_t{1} << 62;
    while (step > tree_.size()) step >>= 1;
    for (; step > 0; step >>= 1) {
      if (pos + step <= tree_.size() && tree_[pos + step - 1] <= r) {
        pos += step;
        r -= tree_[pos - 1];
      }
    }
    return pos;
  }

 private:
  void add(std::size_t idx, std::int64_t delta) {
    weights_[idx] = static_cast<std::uint64_t>(static_cast<std::int64_t>(weights_[idx]) + delta);
    total_ = static_cast<std::uint64_t>(static_cast<std::int64_t>(total_) + delta);
    for (std::size_t i = idx + 1; i <= tree_.size(); i += (i & (~i + 1))) {
      tree_[i - 1] = static_cast<std::uint64_t>(static_cast<std::int64_t>(tree_[i - 1]) + delta);
    }
  }

  std::vector<std::uint64_t> tree_;
  std::vector<std::uint64_t> weights_;
  std::uint64_t total_ = 0;
};

// Up to `count` distinct entries of `pool` chosen uniformly (all when short).
inline std::vector<NodeId> sample_without_replacement(const std::vector<NodeId>& pool,
                                                      std::size_t count, Rng& rng) {
  std::vector<NodeId> picked(pool);
  const auto take = std::min(count, picked.size());
  for (std::size_t i = 0; i < take; ++i) {
    const auto j = i + rng.below(picked.size() - i);
    std::swap(picked[i], picked[j]);
  }
  picked.resize(take);
  return picked;
}

}  // namespace detail

/// Grows an affiliation network from the complete bipartite 2x2 seed until it
/// holds `actors` actors.
///
/// Each step adds an actor with probability beta, otherwise a society. The
/// newcomer picks a prototype on its own side with probability proportional to
/// its membership count and copies up to c_q
/// (actor) or c_u (society) of the prototype's memberships, chosen uniformly
/// without replacement. A new actor then gains `s` distinct actor-graph edges
/// to existing actors drawn proportionally to their degree in the folded
/// multigraph: sum over their societies of (size - 1), plus earlier
/// attachment edges.
inline AffiliationGraph generate_affiliation(const AffiliationParams& params,
                                             std::uint64_t seed) {
  validate(params);
  std::vector<std::vector<NodeId>> members{{0, 1}, {0, 1}};
  std::vector<std::vector<NodeId>> societies_of{{0, 1}, {0, 1}};
  detail::WeightTree society_weight;
  society_weight.push_back(2);
  society_weight.push_back(2);
  std::vector<NodeId> attachment_endpoints;
  std::vector<Edge> attachment_edges;
  // One entry per membership on each side: uniform positions are
  // degree-proportional prototype draws.
  std::vector<NodeId> actor_slots{0, 0, 1, 1};
  std::vector<NodeId> society_slots{0, 1, 0, 1};

  Rng growth = Rng::substream(seed, streams::kAffiliationGrowth);
  Rng attach = Rng::substream(seed, streams::kAffiliationAttach);

  auto join = [&](NodeId actor, NodeId society) {
    members[society].push_back(actor);
    societies_of[actor].push_back(society);
    actor_slots.push_back(actor);
    society_slots.push_back(society);
    const std::uint64_t size = members[society].size();
    society_weight.set(society, size * (size - 1));
  };

  std::vector<NodeId> chosen;
  while (societies_of.size() < params.actors) {
    if (growth.uniform() < params.beta) {
      const auto actor_count = static_cast<NodeId>(societies_of.size());
      const NodeId prototype = actor_slots[growth.below(actor_slots.size())];
      const auto copied =
          detail::sample_without_replacement(societies_of[prototype], params.cq, growth);
      const NodeId actor = actor_count;
      societies_of.emplace_back();
      for (NodeId s : copied) join(actor, s);

      // Weighted draws reject the newcomer and repeats. Early on fewer than
      // `s` actors may carry weight, so after a bounded number of attempts the
      // remaining targets are drawn uniformly.
      const std::size_t wanted = std::min<std::size_t>(params.s, actor_count);
      chosen.clear();
      std::size_t attempts = 0;
      while (chosen.size() < wanted) {
        const std::uint64_t total = society_weight.total() + attachment_endpoints.size();
        NodeId pick = 0;
        if (total == 0 || attempts >= 64 * wanted) {
          pick = static_cast<NodeId>(attach.below(actor_count));
        } else {
          ++attempts;
          const auto r = attach.below(total);
          if (r < society_weight.total()) {
            const auto& group = members[society_weight.find(r)];
            pick = group[attach.below(group.size())];
          } else {
            pick = attachment_endpoints[r - society_weight.total()];
          }
          if (pick == actor) continue;
        }
        if (std::find(chosen.begin(), chosen.end(), pick) == chosen.end()) {
          chosen.push_back(pick);
        }
      }
      for (NodeId target : chosen) {
        attachment_edges.emplace_back(actor, target);
        attachment_endpoints.push_back(actor);
        attachment_endpoints.push_back(target);
      }
    } else {
      const auto society_count = static_cast<NodeId>(members.size());
      const NodeId prototype = society_slots[growth.below(society_slots.size())];
      const auto copied =
          detail::sample_without_replacement(members[prototype], params.cu, growth);
      const NodeId society = society_count;
      members.emplace_back();
      society_weight.push_back(0);
      for (NodeId a : copied) join(a, society);
    }
  }

  AffiliationGraph out;
  out.bipartite.actor_count = static_cast<NodeId>(societies_of.size());
  out.bipartite.society_count = static_cast<NodeId>(members.size());
  for (NodeId a = 0; a < out.bipartite.actor_count; ++a) {
    for (NodeId s : societies_of[a]) out.bipartite.memberships.emplace_back(a, s);
  }
  out.attachment_edges = std::move(attachment_edges);
  out.graph = fold_bipartite(out.bipartite, out.attachment_edges);
  return out;
}

/// Dispatches on the configured model. Affiliation yields the folded graph.
inline Graph generate(const GeneratorConfig& cfg) {
  return std::visit(
      [&](const auto& p) -> Graph {
        using P = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<P, ErParams>) {
          return generate_er(p, cfg.seed);
        } else if constexpr (std::is_same_v<P, BaParams>) {
          return generate_ba(p, cfg.seed);
        } else {
          return generate_affiliation(p, cfg.seed).graph;
        }
      },
      cfg.params);
}

}  // namespace elite
