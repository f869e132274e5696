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

#ifndef DPDC_ESTIMATOR_H_
#define DPDC_ESTIMATOR_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "dpdc/dataset.hpp"
#include "dpdc/greedy.hpp"
#include "dpdc/matching.hpp"
#include "dpdc/mechanisms.hpp"

namespace dpdc {

enum class CountMethod { kMatching, kGreedy, kSampling };
enum class BoundSelection {
  kMaxContribution,
  kP90Contribution,
  kExactUtility,
  kGemUtility,
};

const char* to_string(CountMethod m);
const char* to_string(BoundSelection s);

// A released private estimate: the selected contribution bound and the
// noisy lower-bound value, with enough run metadata to reproduce it.
struct DpEstimate {
  std::size_t ell_hat = 0;
  double nu_hat = 0.0;
  CountMethod method = CountMethod::kMatching;
  PrivacyParams params;
  std::uint64_t seed = 0;
};

// Utility scores q_ell = counts[ell] - (2*ell/epsilon) * log(1/(2*beta))
// for ell = 1..ell_max. Each score has sensitivity ell (the offset is
// data-independent).
struct UtilityScores {
  std::vector<double> values;
};

UtilityScores utility_scores(const BoundedCountCurve& curve,
                             const PrivacyParams& params);

// Selection and release on a precomputed curve: the bound is drawn by the
// generalized exponential mechanism at budget epsilon/2 over the utility
// scores, then nu_hat = q_{ell_hat} + Laplace(2*ell_hat/epsilon). Composes
// to an epsilon-DP release when the curve's counts have sensitivity ell.
DpEstimate dp_release_from_curve(const BoundedCountCurve& curve,
                                 CountMethod method,
                                 const PrivacyParams& params,
                                 RandomSource& rng);

// End-to-end epsilon-DP distinct-count lower bound using exact bounded
// counts (maximum matching per candidate bound).
DpEstimate dp_distinct_count(const Dataset& d, const PrivacyParams& params,
                             RandomSource& rng);

// Linear-time variant using the greedy maximal-matching counts.
DpEstimate dp_approx_distinct_count(const Dataset& d,
                                    const PrivacyParams& params,
                                    RandomSource& rng);

// Baseline counter: each person keeps a uniform ell-subset of their items
// (everything when |u_i| <= ell); returns the distinct count of the union.
// Has sensitivity ell under person addition/removal.
std::size_t sampling_count(const Dataset& d, std::size_t ell,
                           RandomSource& rng);

// Fixed-bound release: count + Laplace(ell/epsilon). The caller must have
// produced `count` with an ell-sensitivity counter at this same bound.
double dp_count_fixed_bound(std::size_t count, std::size_t ell,
                            double epsilon, RandomSource& rng);

// Contribution-bound selection strategies. Only kGemUtility is
// differentially private; the others are non-private comparison points.
// kExactUtility maximizes counts[ell] - (ell/epsilon) * log(1/(2*beta))
// (note: half the offset the DP estimators use in their scores).
// Percentile-style methods (kMaxContribution, kP90Contribution) require a
// nonempty dataset and use the nearest-rank convention; a bound of 0 (no
// items anywhere) is clamped to 1 so the result is always a valid bound.
std::size_t select_bound(const Dataset& d, BoundSelection method,
                         const PrivacyParams& params, CountMethod counter,
                         RandomSource& rng);

}  // namespace dpdc

#endif  // DPDC_ESTIMATOR_H_
