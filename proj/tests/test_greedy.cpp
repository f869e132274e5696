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

#include <string>
#include <vector>

#include "doctest.h"
#include "dpdc/oracle.hpp"
#include "testutil.hpp"

using namespace dpdc;
using testutil::make_dataset;

TEST_SUITE("greedy") {

TEST_CASE("first person blocks the second at ell = 1") {
  // Exact D_1 is 2 (p0 takes b, p1 takes a); greedy reaches only 1.
  const Dataset d = make_dataset({{"a", "b"}, {"a"}});
  CHECK(greedy_count_curve(d, 1).counts == std::vector<std::size_t>{1});
  CHECK(bounded_distinct_count(d, 1) == 2);
}

TEST_CASE("disjoint singletons are matched immediately") {
  const Dataset d = make_dataset({{"a"}, {"b"}});
  CHECK(greedy_count_curve(d, 1).counts == std::vector<std::size_t>{2});
}

TEST_CASE("one new item per round for a single person") {
  const Dataset d = make_dataset({{"a", "b", "c"}});
  const BoundedCountCurve curve = greedy_count_curve(d, 2);
  CHECK(curve.counts == std::vector<std::size_t>{1, 2});
  CHECK_FALSE(curve.exact);
}

TEST_CASE("second round recovers the blocked item") {
  CHECK(greedy_count_at(make_dataset({{"a", "b"}, {"a"}}), 2) == 2);
}

TEST_CASE("empty dataset counts zero") {
  CHECK(greedy_count_at(Dataset{}, 3) == 0);
}

TEST_CASE("lexicographic choice follows strings, not intern order") {
  // "z" interned before "a": round one must still pick "a" first, leaving
  // "z" for person two.
  const Dataset d = make_dataset({{"z", "a"}, {"z"}});
  CHECK(greedy_count_at(d, 1) == 2);
}

TEST_CASE("two-sided bound against the exact count") {
  RandomSource rng(301);
  for (int round = 0; round < 300; ++round) {
    const Dataset d = oracle::random_small_dataset(rng, 5, 4, 6, 14);
    for (std::size_t ell = 1; ell <= 4; ++ell) {
      const std::size_t exact = bounded_distinct_count(d, ell);
      const std::size_t greedy = greedy_count_at(d, ell);
      CHECK(greedy >= (exact + 1) / 2);
      CHECK(greedy <= exact);
    }
  }
}

TEST_CASE("removing one person moves the count by at most ell") {
  RandomSource rng(302);
  for (int round = 0; round < 200; ++round) {
    const Dataset d = oracle::random_small_dataset(rng, 5, 4, 6, 14);
    const std::size_t ell = 1 + rng.below(4);
    CHECK(oracle::sensitivity_probe(d, ell, CountMethod::kGreedy) <= ell);
  }
}

TEST_CASE("curve is nondecreasing and stabilizes at the max contribution") {
  RandomSource rng(303);
  for (int round = 0; round < 100; ++round) {
    const Dataset d = oracle::random_small_dataset(rng, 5, 4, 6, 14);
    const BoundedCountCurve curve = greedy_count_curve(d, 8);
    for (std::size_t ell = 2; ell <= 8; ++ell) {
      CHECK(curve.at(ell) >= curve.at(ell - 1));
    }
    const std::size_t cap = std::max<std::size_t>(1, d.max_contribution());
    for (std::size_t ell = cap; ell <= 8; ++ell) {
      CHECK(curve.at(ell) == curve.at(cap));
    }
  }
}

TEST_CASE("bound ell equals one round on the ell-fold replicated dataset") {
  RandomSource rng(304);
  for (int round = 0; round < 100; ++round) {
    const Dataset d = oracle::random_small_dataset(rng, 5, 4, 6, 14);
    const std::size_t ell = 1 + rng.below(4);
    Dataset::Builder replicated;
    for (std::size_t rep = 0; rep < ell; ++rep) {
      for (std::size_t i = 0; i < d.person_count(); ++i) {
        const std::string key =
            "r" + std::to_string(rep) + "_" + std::to_string(i);
        replicated.add_person(key);
        for (ItemId id : d.items_of(i)) {
          replicated.add(key, d.item_string(id));
        }
      }
    }
    CHECK(greedy_count_at(d, ell) ==
          greedy_count_at(std::move(replicated).build(), 1));
  }
}

TEST_CASE("deterministic for a fixed dataset") {
  const Dataset d = testutil::zipf_dataset(99, 50, 100, 1.1, 0.3, 10);
  CHECK(greedy_count_curve(d, 12).counts == greedy_count_curve(d, 12).counts);
}

}  // TEST_SUITE
