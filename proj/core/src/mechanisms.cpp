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

#include "dpdc/mechanisms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace dpdc {

void PrivacyParams::validate() const {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    throw std::invalid_argument("epsilon must be a positive real");
  }
  if (!(beta > 0.0) || !(beta <= 0.5)) {
    throw std::invalid_argument("beta must lie in (0, 1/2]");
  }
  if (ell_max == 0) {
    throw std::invalid_argument("ell_max must be >= 1");
  }
}

double RandomSource::uniform() {
  // 53-bit mantissa draw offset by half a step: lands strictly inside (0,1).
  return (static_cast<double>(gen_() >> 11) + 0.5) * 0x1.0p-53;
}

std::uint64_t RandomSource::below(std::uint64_t n) {
  if (n == 0) {
    throw std::invalid_argument("below(0)");
  }
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() -
      std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t x;
  do {
    x = gen_();
  } while (x >= limit);
  return x % n;
}

std::uint64_t RandomSource::derive_seed(std::uint64_t master,
                                        std::uint64_t index) {
  std::uint64_t z = master + (index + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double sample_laplace(double scale, RandomSource& rng) {
  if (!(scale > 0.0)) {
    throw std::invalid_argument("Laplace scale must be positive");
  }
  const double u = rng.uniform() - 0.5;  // (-1/2, 1/2)
  const double mag = -scale * std::log(1.0 - 2.0 * std::abs(u));
  return u < 0.0 ? -mag : mag;
}

double laplace_offset(std::size_t ell, double epsilon, double beta) {
  if (ell == 0) {
    throw std::invalid_argument("ell must be >= 1");
  }
  if (!(epsilon > 0.0)) {
    throw std::invalid_argument("epsilon must be positive");
  }
  if (!(beta > 0.0) || !(beta <= 0.5)) {
    throw std::invalid_argument("beta must lie in (0, 1/2]");
  }
  return (2.0 * static_cast<double>(ell) / epsilon) *
         std::log(1.0 / (2.0 * beta));
}

double Envelope::value_at(double x) const {
  return pieces[piece_at(x)].at(x);
}

std::size_t Envelope::piece_at(double x) const {
  const auto it =
      std::lower_bound(breakpoints.begin(), breakpoints.end(), x);
  return static_cast<std::size_t>(it - breakpoints.begin());
}

Envelope build_upper_envelope(std::span<const Line> lines) {
  if (lines.empty()) {
    throw std::invalid_argument("envelope needs at least one line");
  }
  for (const Line& l : lines) {
    if (!(l.slope > 0.0)) {
      throw std::invalid_argument("envelope slopes must be positive");
    }
  }

  // Sort by slope; among equal slopes only the largest intercept can touch
  // the envelope (lowest input index on full ties, via stable order).
  std::vector<std::size_t> order(lines.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&lines](std::size_t a, std::size_t b) {
                     if (lines[a].slope != lines[b].slope) {
                       return lines[a].slope < lines[b].slope;
                     }
                     return lines[a].intercept > lines[b].intercept;
                   });

  Envelope env;
  for (std::size_t idx : order) {
    const Line& cand = lines[idx];
    if (!env.pieces.empty() && env.pieces.back().slope == cand.slope) {
      continue;  // dominated parallel line
    }
    // x where cand overtakes the current last piece; pop pieces whose
    // active interval that crossing swallows (they never realize the max).
    double cross = 0.0;
    while (!env.pieces.empty()) {
      const Line& last = env.pieces.back();
      cross = (last.intercept - cand.intercept) / (cand.slope - last.slope);
      if (!env.breakpoints.empty() && cross <= env.breakpoints.back()) {
        env.pieces.pop_back();
        env.breakpoints.pop_back();
      } else {
        break;
      }
    }
    if (!env.pieces.empty()) env.breakpoints.push_back(cross);
    env.pieces.push_back(cand);
  }
  return env;
}

GemProblem GemProblem::with_threshold(std::vector<double> q,
                                      std::vector<double> delta,
                                      double epsilon, double beta) {
  GemProblem p;
  p.q = std::move(q);
  p.delta = std::move(delta);
  p.t = (2.0 / epsilon) *
        std::log(static_cast<double>(p.q.size()) / beta);
  return p;
}

std::vector<double> gem_scores_fast(const GemProblem& p) {
  const std::size_t m = p.size();
  if (m == 0 || p.delta.size() != m) {
    throw std::invalid_argument("q and delta must be nonempty, equal length");
  }
  std::vector<Line> lines(m);
  for (std::size_t j = 0; j < m; ++j) {
    if (!(p.delta[j] > 0.0)) {
      throw std::invalid_argument("sensitivities must be positive");
    }
    lines[j] = {p.delta[j], p.q[j]};
  }
  const Envelope env = build_upper_envelope(lines);

  std::vector<double> scores(m);
  const double t = p.t;
  for (std::size_t i = 0; i < m; ++i) {
    const double qi = p.q[i];
    const double di = p.delta[i];
    // Solve q_i - (x + 2t) d_i = f(x) for x = s_i - t. The left side
    // strictly decreases and f increases, so the sign of
    // h(x) = q_i - (x + 2t) d_i - f(x) at a breakpoint tells which side the
    // crossing is on; h > 0 means the crossing lies further right.
    const auto h_positive = [&](double x) {
      return qi - (x + 2.0 * t) * di - env.value_at(x) > 0.0;
    };
    std::size_t lo = 0;
    std::size_t hi = env.breakpoints.size();
    while (lo < hi) {
      const std::size_t mid = lo + (hi - lo) / 2;
      if (h_positive(env.breakpoints[mid])) {
        lo = mid + 1;
      } else {
        hi = mid;
      }
    }
    // Closed form against the located piece. The j = i term of the min is
    // exactly zero, so cap there; evaluating the neighboring pieces too
    // absorbs rounding at the piece boundary.
    double best = 0.0;
    const std::size_t first = lo > 0 ? lo - 1 : 0;
    const std::size_t last = std::min(lo + 1, env.pieces.size() - 1);
    for (std::size_t k = first; k <= last; ++k) {
      const Line& piece = env.pieces[k];
      const double s = ((qi - t * di) - (piece.intercept - t * piece.slope)) /
                       (di + piece.slope);
      best = std::min(best, s);
    }
    scores[i] = best;
  }
  return scores;
}

std::size_t exponential_mechanism_sample(std::span<const double> scores,
                                         double epsilon, RandomSource& rng) {
  if (scores.empty()) {
    throw std::invalid_argument("need at least one score");
  }
  if (!(epsilon > 0.0)) {
    throw std::invalid_argument("epsilon must be positive");
  }
  const double shift = *std::max_element(scores.begin(), scores.end());
  std::vector<double> weights(scores.size());
  double total = 0.0;
  for (std::size_t i = 0; i < scores.size(); ++i) {
    weights[i] = std::exp(0.5 * epsilon * (scores[i] - shift));
    total += weights[i];
  }
  const double target = rng.uniform() * total;
  double cumulative = 0.0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    cumulative += weights[i];
    if (target <= cumulative) return i;
  }
  return weights.size() - 1;  // guard against accumulated rounding
}

std::size_t gem_select(std::span<const double> q,
                       std::span<const double> delta, double epsilon,
                       double beta, RandomSource& rng) {
  if (q.size() != delta.size()) {
    throw std::invalid_argument("q and delta must have equal length");
  }
  if (q.empty()) {
    throw std::invalid_argument("need at least one candidate");
  }
  if (!(epsilon > 0.0)) {
    throw std::invalid_argument("epsilon must be positive");
  }
  if (!(beta > 0.0) || !(beta < 1.0)) {
    throw std::invalid_argument("beta must lie in (0, 1)");
  }
  const GemProblem problem = GemProblem::with_threshold(
      std::vector<double>(q.begin(), q.end()),
      std::vector<double>(delta.begin(), delta.end()), epsilon, beta);
  const std::vector<double> scores = gem_scores_fast(problem);
  return exponential_mechanism_sample(scores, epsilon, rng);
}

}  // namespace dpdc
