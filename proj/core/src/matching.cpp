//
// Copyright 2026 The dpdc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#include "dpdc/matching.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace dpdc {
namespace {

constexpr std::uint32_t kUnmatched = std::numeric_limits<std::uint32_t>::max();
constexpr std::uint32_t kInfDist = std::numeric_limits<std::uint32_t>::max();

// Hopcroft-Karp state. Each phase runs one BFS that layers left vertices by
// shortest alternating distance from a free vertex, then one round of DFS
// that augments along a maximal set of disjoint shortest paths.
class HopcroftKarp {
 public:
  explicit HopcroftKarp(const CopyGraph& g)
      : g_(g),
        match_left_(g.left_count(), kUnmatched),
        match_right_(g.right_count, kUnmatched),
        dist_(g.left_count(), kInfDist) {
    queue_.reserve(g.left_count());
  }

  std::size_t run() {
    std::size_t matched = 0;
    while (bfs()) {
      for (std::uint32_t u = 0; u < g_.left_count(); ++u) {
        if (match_left_[u] == kUnmatched && dfs(u)) ++matched;
      }
    }
    return matched;
  }

 private:
  bool bfs() {
    queue_.clear();
    for (std::uint32_t u = 0; u < g_.left_count(); ++u) {
      if (match_left_[u] == kUnmatched) {
        dist_[u] = 0;
        queue_.push_back(u);
      } else {
        dist_[u] = kInfDist;
      }
    }
    bool reachable_free_right = false;
    for (std::size_t head = 0; head < queue_.size(); ++head) {
      const std::uint32_t u = queue_[head];
      for (ItemId v : g_.neighbors(u)) {
        const std::uint32_t w = match_right_[v];
        if (w == kUnmatched) {
          reachable_free_right = true;
        } else if (dist_[w] == kInfDist) {
          dist_[w] = dist_[u] + 1;
          queue_.push_back(w);
        }
      }
    }
    return reachable_free_right;
  }

  bool dfs(std::uint32_t u) {
    for (ItemId v : g_.neighbors(u)) {
      const std::uint32_t w = match_right_[v];
      if (w == kUnmatched || (dist_[w] == dist_[u] + 1 && dfs(w))) {
        match_left_[u] = v;
        match_right_[v] = u;
        return true;
      }
    }
    dist_[u] = kInfDist;  // dead end; prune for the rest of this phase
    return false;
  }

  const CopyGraph& g_;
  std::vector<ItemId> match_left_;
  std::vector<std::uint32_t> match_right_;
  std::vector<std::uint32_t> dist_;
  std::vector<std::uint32_t> queue_;
};

}  // namespace

CopyGraph CopyGraph::from_adjacency(std::size_t right_count,
                                    std::vector<std::vector<ItemId>> adjacency) {
  CopyGraph g;
  g.right_count = right_count;
  g.left.reserve(adjacency.size());
  g.adj_offsets.reserve(adjacency.size() + 1);
  g.adj_offsets.push_back(0);
  for (std::size_t u = 0; u < adjacency.size(); ++u) {
    std::vector<ItemId>& nbrs = adjacency[u];
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    if (!nbrs.empty() && nbrs.back() >= right_count) {
      throw std::invalid_argument("neighbor id exceeds right_count");
    }
    g.left.push_back({static_cast<std::uint32_t>(u), 0});
    g.adj.insert(g.adj.end(), nbrs.begin(), nbrs.end());
    g.adj_offsets.push_back(g.adj.size());
  }
  return g;
}

CopyGraph build_copy_graph(const Dataset& d, std::size_t ell) {
  if (ell == 0) {
    throw std::invalid_argument("contribution bound must be >= 1");
  }
  CopyGraph g;
  g.right_count = d.vocabulary_size();

  std::size_t left_total = 0;
  std::size_t edge_total = 0;
  for (const PersonRecord& p : d.people()) {
    const std::size_t copies = std::min(ell, p.items.size());
    left_total += copies;
    edge_total += copies * p.items.size();
  }
  g.left.reserve(left_total);
  g.adj.reserve(edge_total);
  g.adj_offsets.reserve(left_total + 1);
  g.adj_offsets.push_back(0);

  std::vector<ItemId> by_id;
  for (std::size_t i = 0; i < d.person_count(); ++i) {
    const std::span<const ItemId> items = d.items_of(i);
    if (items.empty()) continue;
    const std::size_t copies = std::min(ell, items.size());
    by_id.assign(items.begin(), items.end());
    std::sort(by_id.begin(), by_id.end());
    for (std::size_t j = 0; j < copies; ++j) {
      g.left.push_back(
          {static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)});
      g.adj.insert(g.adj.end(), by_id.begin(), by_id.end());
      g.adj_offsets.push_back(g.adj.size());
    }
  }
  return g;
}

std::size_t maximum_matching_size(const CopyGraph& g) {
  if (g.left_count() == 0 || g.right_count == 0) return 0;
  return HopcroftKarp(g).run();
}

std::size_t bounded_distinct_count(const Dataset& d, std::size_t ell) {
  return maximum_matching_size(build_copy_graph(d, ell));
}

BoundedCountCurve bounded_count_curve(const Dataset& d, std::size_t ell_max) {
  if (ell_max == 0) {
    throw std::invalid_argument("ell_max must be >= 1");
  }
  BoundedCountCurve curve;
  curve.exact = true;
  curve.counts.reserve(ell_max);
  const std::size_t saturation = std::max<std::size_t>(1, d.max_contribution());
  for (std::size_t ell = 1; ell <= ell_max; ++ell) {
    if (ell > saturation) {
      curve.counts.push_back(curve.counts.back());
    } else {
      curve.counts.push_back(bounded_distinct_count(d, ell));
    }
  }
  return curve;
}

}  // namespace dpdc
