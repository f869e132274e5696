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

#include <vector>

#include "dpdc/mechanisms.hpp"
#include "dpdc/oracle.hpp"

namespace dpdc {
namespace {

GemProblem problem_of_size(std::size_t m) {
  RandomSource rng(31);
  std::vector<double> q(m);
  std::vector<double> delta(m);
  for (std::size_t i = 0; i < m; ++i) {
    q[i] = 1000.0 * rng.uniform();
    delta[i] = 0.01 + 10.0 * rng.uniform();
  }
  return GemProblem::with_threshold(std::move(q), std::move(delta), 1.0, 0.05);
}

void BM_GemScoresFast(benchmark::State& state) {
  const GemProblem p = problem_of_size(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(gem_scores_fast(p));
  }
}
BENCHMARK(BM_GemScoresFast)->Range(100, 100000);

void BM_GemScoresNaive(benchmark::State& state) {
  const GemProblem p = problem_of_size(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle::gem_scores_naive(p));
  }
}
BENCHMARK(BM_GemScoresNaive)->Range(100, 4000);

void BM_BuildUpperEnvelope(benchmark::State& state) {
  const GemProblem p = problem_of_size(static_cast<std::size_t>(state.range(0)));
  std::vector<Line> lines(p.size());
  for (std::size_t j = 0; j < p.size(); ++j) {
    lines[j] = {p.delta[j], p.q[j]};
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_upper_envelope(lines));
  }
}
BENCHMARK(BM_BuildUpperEnvelope)->Range(100, 100000);

void BM_SampleLaplace(benchmark::State& state) {
  RandomSource rng(5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sample_laplace(2.0, rng));
  }
}
BENCHMARK(BM_SampleLaplace);

void BM_ExponentialMechanism(benchmark::State& state) {
  RandomSource rng(6);
  const GemProblem p = problem_of_size(static_cast<std::size_t>(state.range(0)));
  const std::vector<double> scores = gem_scores_fast(p);
  for (auto _ : state) {
    benchmark::DoNotOptimize(exponential_mechanism_sample(scores, 1.0, rng));
  }
}
BENCHMARK(BM_ExponentialMechanism)->Arg(100)->Arg(10000);

}  // namespace
}  // namespace dpdc
