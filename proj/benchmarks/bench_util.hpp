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

#ifndef DPDC_BENCHMARKS_BENCH_UTIL_H_
#define DPDC_BENCHMARKS_BENCH_UTIL_H_

#include <cstddef>
#include <cstdint>
#include <string>

#include "dpdc/dataset.hpp"
#include "dpdc/mechanisms.hpp"

namespace dpdc::bench {

// Synthetic workload: `records / items_per_person` persons, each holding
// `items_per_person` items drawn uniformly from a vocabulary one fifth the
// record count (so items repeat across persons).
inline Dataset synthetic_dataset(std::size_t records,
                                 std::size_t items_per_person = 10,
                                 std::uint64_t seed = 97) {
  RandomSource rng(seed);
  const std::size_t people = records / items_per_person;
  const std::size_t vocabulary = records / 5 + 1;
  Dataset::Builder builder;
  for (std::size_t i = 0; i < people; ++i) {
    const std::string key = "p" + std::to_string(i);
    for (std::size_t k = 0; k < items_per_person; ++k) {
      builder.add(key, "w" + std::to_string(rng.below(vocabulary)));
    }
  }
  return std::move(builder).build();
}

}  // namespace dpdc::bench

#endif  // DPDC_BENCHMARKS_BENCH_UTIL_H_
