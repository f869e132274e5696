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

#include "dpdc/greedy.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace dpdc {
namespace {

// Matched-item membership plus per-person cursors into the string-sorted
// item lists. Cursors never retreat, so total cursor movement across all
// rounds is bounded by the record count.
struct GreedyState {
  std::vector<char> matched_items;
  std::size_t matched_size = 0;
  std::vector<std::uint32_t> cursor;
  std::vector<std::uint32_t> active;  // persons with unscanned items, in order
};

}  // namespace

BoundedCountCurve greedy_count_curve(const Dataset& d, std::size_t ell_max) {
  if (ell_max == 0) {
    throw std::invalid_argument("ell_max must be >= 1");
  }
  GreedyState st;
  st.matched_items.assign(d.vocabulary_size(), 0);
  st.cursor.assign(d.person_count(), 0);
  st.active.reserve(d.person_count());
  for (std::uint32_t i = 0; i < d.person_count(); ++i) {
    if (!d.items_of(i).empty()) st.active.push_back(i);
  }

  BoundedCountCurve curve;
  curve.exact = false;
  curve.counts.reserve(ell_max);

  for (std::size_t round = 1; round <= ell_max; ++round) {
    std::size_t write = 0;
    for (std::size_t k = 0; k < st.active.size(); ++k) {
      const std::uint32_t person = st.active[k];
      const std::span<const ItemId> items = d.items_of(person);
      std::uint32_t c = st.cursor[person];
      while (c < items.size() && st.matched_items[items[c]]) ++c;
      if (c < items.size()) {
        st.matched_items[items[c]] = 1;
        ++st.matched_size;
        ++c;
      }
      st.cursor[person] = c;
      if (c < items.size()) st.active[write++] = person;
    }
    st.active.resize(write);
    curve.counts.push_back(st.matched_size);
  }
  return curve;
}

std::size_t greedy_count_at(const Dataset& d, std::size_t ell) {
  return greedy_count_curve(d, ell).counts.back();
}

}  // namespace dpdc
