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

#include "dpdc/estimator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dpdc {
namespace {

std::vector<double> bound_sensitivities(std::size_t ell_max) {
  std::vector<double> deltas(ell_max);
  for (std::size_t ell = 1; ell <= ell_max; ++ell) {
    deltas[ell - 1] = static_cast<double>(ell);
  }
  return deltas;
}

// One count realization per ell in [1, ell_max] from the sampling baseline.
// Not a BoundedCountCurve: independent draws need not be monotone.
std::vector<std::size_t> sampling_counts(const Dataset& d,
                                         std::size_t ell_max,
                                         RandomSource& rng) {
  std::vector<std::size_t> counts(ell_max);
  for (std::size_t ell = 1; ell <= ell_max; ++ell) {
    counts[ell - 1] = sampling_count(d, ell, rng);
  }
  return counts;
}

std::size_t argmax_lowest(const std::vector<double>& values) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] > values[best]) best = i;
  }
  return best;
}

std::vector<double> scores_from_counts(const std::vector<std::size_t>& counts,
                                       const PrivacyParams& params) {
  std::vector<double> values;
  values.reserve(counts.size());
  for (std::size_t ell = 1; ell <= counts.size(); ++ell) {
    values.push_back(static_cast<double>(counts[ell - 1]) -
                     laplace_offset(ell, params.epsilon, params.beta));
  }
  return values;
}

std::vector<std::size_t> counter_counts(const Dataset& d, CountMethod counter,
                                        std::size_t ell_max,
                                        RandomSource& rng) {
  switch (counter) {
    case CountMethod::kMatching:
      return bounded_count_curve(d, ell_max).counts;
    case CountMethod::kGreedy:
      return greedy_count_curve(d, ell_max).counts;
    case CountMethod::kSampling:
      return sampling_counts(d, ell_max, rng);
  }
  throw std::invalid_argument("unknown counter");
}

}  // namespace

const char* to_string(CountMethod m) {
  switch (m) {
    case CountMethod::kMatching:
      return "matching";
    case CountMethod::kGreedy:
      return "greedy";
    case CountMethod::kSampling:
      return "sampling";
  }
  return "unknown";
}

const char* to_string(BoundSelection s) {
  switch (s) {
    case BoundSelection::kMaxContribution:
      return "max";
    case BoundSelection::kP90Contribution:
      return "p90";
    case BoundSelection::kExactUtility:
      return "utility";
    case BoundSelection::kGemUtility:
      return "gem";
  }
  return "unknown";
}

UtilityScores utility_scores(const BoundedCountCurve& curve,
                             const PrivacyParams& params) {
  params.validate();
  if (curve.ell_max() != params.ell_max) {
    throw std::invalid_argument("curve length must equal ell_max");
  }
  return {scores_from_counts(curve.counts, params)};
}

DpEstimate dp_release_from_curve(const BoundedCountCurve& curve,
                                 CountMethod method,
                                 const PrivacyParams& params,
                                 RandomSource& rng) {
  const UtilityScores scores = utility_scores(curve, params);
  const std::vector<double> deltas = bound_sensitivities(params.ell_max);
  const std::size_t idx = gem_select(scores.values, deltas,
                                     params.epsilon / 2.0, params.beta, rng);
  DpEstimate est;
  est.ell_hat = idx + 1;
  est.method = method;
  est.params = params;
  est.seed = rng.seed();
  est.nu_hat =
      scores.values[idx] +
      sample_laplace(2.0 * static_cast<double>(est.ell_hat) / params.epsilon,
                     rng);
  return est;
}

DpEstimate dp_distinct_count(const Dataset& d, const PrivacyParams& params,
                             RandomSource& rng) {
  params.validate();
  return dp_release_from_curve(bounded_count_curve(d, params.ell_max),
                               CountMethod::kMatching, params, rng);
}

DpEstimate dp_approx_distinct_count(const Dataset& d,
                                    const PrivacyParams& params,
                                    RandomSource& rng) {
  params.validate();
  return dp_release_from_curve(greedy_count_curve(d, params.ell_max),
                               CountMethod::kGreedy, params, rng);
}

std::size_t sampling_count(const Dataset& d, std::size_t ell,
                           RandomSource& rng) {
  if (ell == 0) {
    throw std::invalid_argument("ell must be >= 1");
  }
  std::vector<char> seen(d.vocabulary_size(), 0);
  std::size_t distinct = 0;
  std::vector<ItemId> pool;
  for (std::size_t i = 0; i < d.person_count(); ++i) {
    const std::span<const ItemId> items = d.items_of(i);
    if (items.size() <= ell) {
      for (ItemId id : items) {
        if (!seen[id]) {
          seen[id] = 1;
          ++distinct;
        }
      }
      continue;
    }
    // Fisher-Yates prefix: the first ell entries are a uniform ell-subset.
    pool.assign(items.begin(), items.end());
    for (std::size_t k = 0; k < ell; ++k) {
      const std::size_t j = k + rng.below(pool.size() - k);
      std::swap(pool[k], pool[j]);
      if (!seen[pool[k]]) {
        seen[pool[k]] = 1;
        ++distinct;
      }
    }
  }
  return distinct;
}

double dp_count_fixed_bound(std::size_t count, std::size_t ell,
                            double epsilon, RandomSource& rng) {
  if (ell == 0) {
    throw std::invalid_argument("ell must be >= 1");
  }
  if (!(epsilon > 0.0)) {
    throw std::invalid_argument("epsilon must be positive");
  }
  return static_cast<double>(count) +
         sample_laplace(static_cast<double>(ell) / epsilon, rng);
}

std::size_t select_bound(const Dataset& d, BoundSelection method,
                         const PrivacyParams& params, CountMethod counter,
                         RandomSource& rng) {
  params.validate();
  switch (method) {
    case BoundSelection::kMaxContribution: {
      if (d.person_count() == 0) {
        throw std::invalid_argument("max contribution needs a nonempty dataset");
      }
      return std::max<std::size_t>(1, d.max_contribution());
    }
    case BoundSelection::kP90Contribution: {
      const std::size_t n = d.person_count();
      if (n == 0) {
        throw std::invalid_argument("percentile needs a nonempty dataset");
      }
      std::vector<std::size_t> sizes;
      sizes.reserve(n);
      for (const PersonRecord& p : d.people()) sizes.push_back(p.items.size());
      std::sort(sizes.begin(), sizes.end());
      const std::size_t rank = (9 * n + 9) / 10;  // ceil(0.9 n), 1-based
      return std::max<std::size_t>(1, sizes[rank - 1]);
    }
    case BoundSelection::kExactUtility: {
      const std::vector<std::size_t> counts =
          counter_counts(d, counter, params.ell_max, rng);
      std::vector<double> values(params.ell_max);
      for (std::size_t ell = 1; ell <= params.ell_max; ++ell) {
        // Single-release offset (ell/epsilon) log(1/(2 beta)): half the one
        // used inside the DP estimators, which also budget for selection.
        values[ell - 1] = static_cast<double>(counts[ell - 1]) -
                          (static_cast<double>(ell) / params.epsilon) *
                              std::log(1.0 / (2.0 * params.beta));
      }
      return argmax_lowest(values) + 1;
    }
    case BoundSelection::kGemUtility: {
      const std::vector<double> values = scores_from_counts(
          counter_counts(d, counter, params.ell_max, rng), params);
      const std::vector<double> deltas = bound_sensitivities(params.ell_max);
      return gem_select(values, deltas, params.epsilon / 2.0, params.beta,
                        rng) +
             1;
    }
  }
  throw std::invalid_argument("unknown selection method");
}

}  // namespace dpdc
