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

#ifndef DPDC_MATCHING_H_
#define DPDC_MATCHING_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "dpdc/dataset.hpp"

namespace dpdc {

// Bipartite graph with person copies on the left and items on the right.
// Person i with k items contributes min(ell, k) copies; every copy of a
// person is adjacent to exactly that person's items. Stored as CSR with
// each neighbor list sorted ascending by item id.
struct CopyGraph {
  struct LeftVertex {
    std::uint32_t person;
    std::uint32_t copy;
  };

  std::vector<LeftVertex> left;
  std::size_t right_count = 0;
  std::vector<std::size_t> adj_offsets;  // size left.size() + 1
  std::vector<ItemId> adj;

  std::size_t left_count() const { return left.size(); }
  std::size_t edge_count() const { return adj.size(); }
  std::span<const ItemId> neighbors(std::size_t u) const {
    return {adj.data() + adj_offsets[u], adj_offsets[u + 1] - adj_offsets[u]};
  }

  // Builds an arbitrary bipartite graph (one synthetic "person" per left
  // vertex). Neighbor lists are sorted and deduplicated.
  static CopyGraph from_adjacency(std::size_t right_count,
                                  std::vector<std::vector<ItemId>> adjacency);
};

// Per-bound counts indexed by ell = 1..ell_max (counts[ell - 1]). `exact`
// marks a matching-derived curve; greedy curves clear it.
struct BoundedCountCurve {
  std::vector<std::size_t> counts;
  bool exact = false;

  std::size_t ell_max() const { return counts.size(); }
  std::size_t at(std::size_t ell) const { return counts.at(ell - 1); }
};

// Person-copy graph for contribution bound `ell` (>= 1).
CopyGraph build_copy_graph(const Dataset& d, std::size_t ell);

// Size of a maximum-cardinality matching, via Hopcroft-Karp layered
// BFS/DFS phases in O(|E| sqrt(|U| + |V|)). Deterministic: vertices and
// neighbors are explored in ascending index order.
std::size_t maximum_matching_size(const CopyGraph& g);

// Largest distinct-union size over all per-person restrictions to at most
// `ell` items, computed as the maximum matching of the copy graph.
std::size_t bounded_distinct_count(const Dataset& d, std::size_t ell);

// One independent matching per ell in [1, ell_max]. Bounds beyond the
// largest contribution reuse the saturated value (the copy graph stops
// changing there).
BoundedCountCurve bounded_count_curve(const Dataset& d, std::size_t ell_max);

}  // namespace dpdc

#endif  // DPDC_MATCHING_H_
