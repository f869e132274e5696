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

#include <benchmark/benchmark.h>

#include "bench_util.hpp"
#include "dpdc/estimator.hpp"
#include "dpdc/greedy.hpp"
#include "dpdc/matching.hpp"

namespace dpdc {
namespace {

void BM_MaximumMatching(benchmark::State& state) {
  const Dataset d = bench::synthetic_dataset(state.range(0));
  const CopyGraph g = build_copy_graph(d, static_cast<std::size_t>(state.range(1)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(maximum_matching_size(g));
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(g.edge_count()));
}
BENCHMARK(BM_MaximumMatching)
    ->Args({10000, 1})
    ->Args({10000, 8})
    ->Args({100000, 8})
    ->Unit(benchmark::kMillisecond);

// Runtime of the full sweep grows roughly with |D|^1.5 * ell_max^2.
void BM_MatchingCurve(benchmark::State& state) {
  const Dataset d = bench::synthetic_dataset(state.range(0));
  const std::size_t ell_max = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(bounded_count_curve(d, ell_max));
  }
}
BENCHMARK(BM_MatchingCurve)
    ->Args({1000, 8})
    ->Args({10000, 8})
    ->Args({10000, 16})
    ->Unit(benchmark::kMillisecond);

// The greedy sweep is the linear-time path; doubling the records should
// roughly double the time, independent of ell_max.
void BM_GreedyCurve(benchmark::State& state) {
  const Dataset d = bench::synthetic_dataset(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(greedy_count_curve(d, 20));
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(d.record_count()));
}
BENCHMARK(BM_GreedyCurve)
    ->Arg(10000)
    ->Arg(100000)
    ->Arg(1000000)
    ->Unit(benchmark::kMillisecond);

void BM_SamplingCount(benchmark::State& state) {
  const Dataset d = bench::synthetic_dataset(state.range(0));
  RandomSource rng(7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sampling_count(d, 8, rng));
  }
}
BENCHMARK(BM_SamplingCount)->Arg(10000)->Arg(100000)->Unit(
    benchmark::kMillisecond);

void BM_DpDistinctCount(benchmark::State& state) {
  const Dataset d = bench::synthetic_dataset(state.range(0));
  const PrivacyParams params{1.0, 0.05, 16};
  std::uint64_t trial = 0;
  for (auto _ : state) {
    RandomSource rng(RandomSource::derive_seed(11, trial++));
    benchmark::DoNotOptimize(dp_distinct_count(d, params, rng));
  }
}
BENCHMARK(BM_DpDistinctCount)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_DpApproxDistinctCount(benchmark::State& state) {
  const Dataset d = bench::synthetic_dataset(state.range(0));
  const PrivacyParams params{1.0, 0.05, 16};
  std::uint64_t trial = 0;
  for (auto _ : state) {
    RandomSource rng(RandomSource::derive_seed(11, trial++));
    benchmark::DoNotOptimize(dp_approx_distinct_count(d, params, rng));
  }
}
BENCHMARK(BM_DpApproxDistinctCount)
    ->Arg(10000)
    ->Arg(1000000)
    ->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace dpdc
