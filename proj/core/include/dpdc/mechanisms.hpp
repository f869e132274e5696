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

#ifndef DPDC_MECHANISMS_H_
#define DPDC_MECHANISMS_H_

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace dpdc {

// Privacy budget epsilon, one-sided failure probability beta, and the
// largest candidate contribution bound considered by the estimators.
struct PrivacyParams {
  double epsilon = 1.0;
  double beta = 0.05;
  std::size_t ell_max = 100;

  // Throws std::invalid_argument unless epsilon > 0, 0 < beta <= 1/2 and
  // ell_max >= 1.
  void validate() const;
};

// Deterministic seeded source of uniform variates. Identical seed yields an
// identical stream; each consumer owns its source (no sharing across
// concurrent work).
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : seed_(seed), gen_(seed) {}

  // Uniform on the open interval (0, 1); never returns an endpoint.
  double uniform();
  std::uint64_t next_u64() { return gen_(); }
  // Uniform on [0, n), unbiased via rejection. n must be >= 1.
  std::uint64_t below(std::uint64_t n);

  std::uint64_t seed() const { return seed_; }

  // Counter-mixed per-trial seed derivation (splitmix64 finalizer), so one
  // master seed spawns independent reproducible streams.
  static std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

 private:
  std::uint64_t seed_;
  std::mt19937_64 gen_;
};

// Zero-mean Laplace noise with the given scale: density (1/2b) exp(-|x|/b),
// variance 2b^2, tail Pr[X >= t] = (1/2) exp(-t/b) for t > 0. Sampled by
// inverse CDF on a uniform from the open interval, so log(0) cannot occur.
double sample_laplace(double scale, RandomSource& rng);

// Noise-compensation offset (2*ell/epsilon) * log(1/(2*beta)) subtracted
// from a bounded count to form its utility score.
double laplace_offset(std::size_t ell, double epsilon, double beta);

// A line y = intercept + x * slope with positive slope.
struct Line {
  double slope = 0.0;
  double intercept = 0.0;

  double at(double x) const { return intercept + x * slope; }
};

// Upper envelope f(x) = max_j (intercept_j + x * slope_j): convex,
// increasing, piecewise linear. Pieces are ordered by strictly increasing
// slope; breakpoints[k] is where pieces[k] hands over to pieces[k+1].
struct Envelope {
  std::vector<Line> pieces;
  std::vector<double> breakpoints;

  double value_at(double x) const;
  // Index of a piece attaining the envelope at x (the lower-index piece
  // when x sits exactly on a breakpoint).
  std::size_t piece_at(double x) const;
};

// O(m log m) envelope construction: sort by slope, then sweep keeping only
// lines that realize the maximum on some interval. Exact slope ties keep
// the larger intercept (lower index on full ties).
Envelope build_upper_envelope(std::span<const Line> lines);

// A generalized-exponential-mechanism instance: query values q, per-query
// sensitivities delta (> 0), and margin threshold t.
struct GemProblem {
  std::vector<double> q;
  std::vector<double> delta;
  double t = 0.0;

  std::size_t size() const { return q.size(); }
  // Standard threshold t = (2/epsilon) * log(m/beta).
  static GemProblem with_threshold(std::vector<double> q,
                                   std::vector<double> delta, double epsilon,
                                   double beta);
};

// Normalized scores
//   s_i = min_j ((q_i - t*delta_i) - (q_j - t*delta_j)) / (delta_i + delta_j)
// in O(m log m): s_i is where the decreasing line q_i - (s + t)*delta_i
// crosses the upper envelope of the lines q_j + x*delta_j (at x = s - t);
// binary search locates the piece, the closed form above finishes against
// it. The j = i term makes every score <= 0, with equality at the maximizer
// of q_j - t*delta_j.
std::vector<double> gem_scores_fast(const GemProblem& p);

// Draws index i with probability proportional to exp(epsilon * s_i / 2).
// Weights are shifted by the maximum score before exponentiation.
std::size_t exponential_mechanism_sample(std::span<const double> scores,
                                         double epsilon, RandomSource& rng);

// Full generalized exponential mechanism at budget `epsilon`: threshold,
// normalized scores, then an exponential-mechanism draw. Returns a 0-based
// index. Satisfies epsilon-DP when q_i has sensitivity delta_i, and selects
// i with q_i >= max_j (q_j - delta_j * (4/epsilon) * log(m/beta)) with
// probability at least 1 - beta.
std::size_t gem_select(std::span<const double> q,
                       std::span<const double> delta, double epsilon,
                       double beta, RandomSource& rng);

}  // namespace dpdc

#endif  // DPDC_MECHANISMS_H_
