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

#ifndef DPDC_GREEDY_H_
#define DPDC_GREEDY_H_

#include <cstddef>

#include "dpdc/dataset.hpp"
#include "dpdc/matching.hpp"

namespace dpdc {

// Approximate bounded counts from a greedily grown maximal matching.
//
// Round ell' = 1..ell_max sweeps persons in dataset order; a person whose
// set still has an unmatched item matches its lexicographically first one.
// counts[ell - 1] is the matched-set size after round ell. The loop nesting
// (rounds outer, persons inner) is normative: the sensitivity bound of the
// result depends on it.
//
// Runs in O(|D| + ell_max + n): per-person cursors over the pre-sorted item
// lists never retreat, and persons whose items are exhausted leave the
// active list.
BoundedCountCurve greedy_count_curve(const Dataset& d, std::size_t ell_max);

// Final entry of the curve at `ell`; equals the one-round sweep over the
// dataset replicated `ell` times.
std::size_t greedy_count_at(const Dataset& d, std::size_t ell);

}  // namespace dpdc

#endif  // DPDC_GREEDY_H_
