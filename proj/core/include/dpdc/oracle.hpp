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

#ifndef DPDC_ORACLE_H_
#define DPDC_ORACLE_H_

#include <cstddef>
#include <vector>

#include "dpdc/dataset.hpp"
#include "dpdc/estimator.hpp"
#include "dpdc/matching.hpp"
#include "dpdc/mechanisms.hpp"

namespace dpdc::oracle {

// Correctness anchors: slow, independent reference implementations used by
// the test suites and the CLI selftest command. Hard size guards keep them
// from dominating a test run; exceeding a guard raises GuardError.

class GuardError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Exhaustive maximum of |union of v_i| over all per-person subsets v_i of
// u_i with |v_i| <= ell. Requires a total record count of at most 14.
std::size_t bounded_count_bruteforce(const Dataset& d, std::size_t ell);

// Maximum matching by plain repeated augmenting-path search; shares no
// traversal code with the fast matcher. Requires |U| + |V| <= 64.
std::size_t matching_bruteforce(const CopyGraph& g);

// Direct O(m^2) evaluation of the normalized-score formula.
std::vector<double> gem_scores_naive(const GemProblem& p);

// Largest |count(d) - count(d minus one person)| over all single-person
// removals; the counter must be kMatching or kGreedy.
std::size_t sensitivity_probe(const Dataset& d, std::size_t ell,
                              CountMethod counter);

// Self-check instance generators (shared by the test corpus and the CLI
// selftest command).

// Random dataset with n in [1, max_people], per-person sizes in
// [0, max_items] drawn from a universe of `universe` items; total records
// are capped at `total_cap` so brute-force enumeration stays in guard.
Dataset random_small_dataset(RandomSource& rng, std::size_t max_people,
                             std::size_t max_items, std::size_t universe,
                             std::size_t total_cap);

// Random bipartite graph with up to max_left x max_right vertices and a
// uniformly drawn edge density.
CopyGraph random_small_graph(RandomSource& rng, std::size_t max_left,
                             std::size_t max_right);

// Random scores instance: m in [1, max_m], q uniform on [-1000, 1000],
// sensitivities log-uniform on [1e-3, 1e3], threshold from a random
// epsilon and beta.
GemProblem random_gem_problem(RandomSource& rng, std::size_t max_m);

}  // namespace dpdc::oracle

#endif  // DPDC_ORACLE_H_
