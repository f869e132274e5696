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

#include "dpdc/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <string>

#include "dpdc/greedy.hpp"

namespace dpdc::oracle {
namespace {

constexpr std::size_t kBruteforceRecordCap = 14;
constexpr std::size_t kBruteforceVertexCap = 64;

// Recursively picks one capped subset per person, tracking the union as a
// bitmask over item ids (the record cap keeps the vocabulary <= 64 bits).
std::size_t best_union(const Dataset& d, std::size_t person, std::size_t ell,
                       std::uint64_t covered) {
  if (person == d.person_count()) {
    return static_cast<std::size_t>(std::popcount(covered));
  }
  const std::span<const ItemId> items = d.items_of(person);
  std::size_t best = 0;
  const std::uint32_t subsets = 1u << items.size();
  for (std::uint32_t mask = 0; mask < subsets; ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) > ell) continue;
    std::uint64_t next = covered;
    for (std::size_t k = 0; k < items.size(); ++k) {
      if (mask & (1u << k)) next |= std::uint64_t{1} << items[k];
    }
    best = std::max(best, best_union(d, person + 1, ell, next));
  }
  return best;
}

bool augment(const CopyGraph& g, std::size_t u, std::vector<char>& visited,
             std::vector<std::int64_t>& owner) {
  for (ItemId v : g.neighbors(u)) {
    if (visited[v]) continue;
    visited[v] = 1;
    if (owner[v] < 0 ||
        augment(g, static_cast<std::size_t>(owner[v]), visited, owner)) {
      owner[v] = static_cast<std::int64_t>(u);
      return true;
    }
  }
  return false;
}

}  // namespace

std::size_t bounded_count_bruteforce(const Dataset& d, std::size_t ell) {
  if (ell == 0) {
    throw std::invalid_argument("ell must be >= 1");
  }
  if (d.record_count() > kBruteforceRecordCap) {
    throw GuardError("bounded_count_bruteforce: more than " +
                     std::to_string(kBruteforceRecordCap) + " records");
  }
  return best_union(d, 0, ell, 0);
}

std::size_t matching_bruteforce(const CopyGraph& g) {
  if (g.left_count() + g.right_count > kBruteforceVertexCap) {
    throw GuardError("matching_bruteforce: more than " +
                     std::to_string(kBruteforceVertexCap) + " vertices");
  }
  std::vector<std::int64_t> owner(g.right_count, -1);
  std::size_t matched = 0;
  for (std::size_t u = 0; u < g.left_count(); ++u) {
    std::vector<char> visited(g.right_count, 0);
    if (augment(g, u, visited, owner)) ++matched;
  }
  return matched;
}

std::vector<double> gem_scores_naive(const GemProblem& p) {
  const std::size_t m = p.size();
  std::vector<double> scores(m);
  for (std::size_t i = 0; i < m; ++i) {
    const double vi = p.q[i] - p.t * p.delta[i];
    double best = 0.0;  // the j = i term
    for (std::size_t j = 0; j < m; ++j) {
      const double vj = p.q[j] - p.t * p.delta[j];
      best = std::min(best, (vi - vj) / (p.delta[i] + p.delta[j]));
    }
    scores[i] = best;
  }
  return scores;
}

std::size_t sensitivity_probe(const Dataset& d, std::size_t ell,
                              CountMethod counter) {
  if (d.person_count() == 0) {
    throw std::invalid_argument("sensitivity probe needs a nonempty dataset");
  }
  const auto count = [&](const Dataset& data) -> std::size_t {
    switch (counter) {
      case CountMethod::kMatching:
        return bounded_distinct_count(data, ell);
      case CountMethod::kGreedy:
        return greedy_count_at(data, ell);
      default:
        throw std::invalid_argument(
            "sensitivity probe supports matching and greedy only");
    }
  };
  const std::size_t full = count(d);
  std::size_t worst = 0;
  for (std::size_t i = 0; i < d.person_count(); ++i) {
    const std::size_t reduced = count(d.without_person(i));
    const std::size_t diff = full > reduced ? full - reduced : reduced - full;
    worst = std::max(worst, diff);
  }
  return worst;
}

Dataset random_small_dataset(RandomSource& rng, std::size_t max_people,
                             std::size_t max_items, std::size_t universe,
                             std::size_t total_cap) {
  const std::size_t n = 1 + rng.below(max_people);
  Dataset::Builder builder;
  std::size_t budget = total_cap;
  for (std::size_t i = 0; i < n; ++i) {
    const std::string person = "p" + std::to_string(i);
    builder.add_person(person);
    const std::size_t cap = std::min(max_items, std::min(budget, universe));
    const std::size_t size = cap == 0 ? 0 : rng.below(cap + 1);
    budget -= size;
    // Distinct draws via a partial shuffle of the universe.
    std::vector<std::size_t> ids(universe);
    for (std::size_t k = 0; k < universe; ++k) ids[k] = k;
    for (std::size_t k = 0; k < size; ++k) {
      const std::size_t j = k + rng.below(universe - k);
      std::swap(ids[k], ids[j]);
      builder.add(person, "i" + std::to_string(ids[k]));
    }
  }
  return std::move(builder).build();
}

CopyGraph random_small_graph(RandomSource& rng, std::size_t max_left,
                             std::size_t max_right) {
  const std::size_t nl = rng.below(max_left + 1);
  const std::size_t nr = rng.below(max_right + 1);
  const double density = rng.uniform();
  std::vector<std::vector<ItemId>> adjacency(nl);
  for (std::size_t u = 0; u < nl; ++u) {
    for (std::size_t v = 0; v < nr; ++v) {
      if (rng.uniform() < density) {
        adjacency[u].push_back(static_cast<ItemId>(v));
      }
    }
  }
  return CopyGraph::from_adjacency(nr, std::move(adjacency));
}

GemProblem random_gem_problem(RandomSource& rng, std::size_t max_m) {
  const std::size_t m = 1 + rng.below(max_m);
  std::vector<double> q(m);
  std::vector<double> delta(m);
  for (std::size_t i = 0; i < m; ++i) {
    q[i] = -1000.0 + 2000.0 * rng.uniform();
    delta[i] = std::exp(std::log(1e-3) +
                        (std::log(1e3) - std::log(1e-3)) * rng.uniform());
  }
  const double epsilon = 0.1 + 9.9 * rng.uniform();
  const double beta = 0.001 + 0.489 * rng.uniform();
  return GemProblem::with_threshold(std::move(q), std::move(delta), epsilon,
                                    beta);
}

}  // namespace dpdc::oracle
