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

#include "dpdc/dataset.hpp"

#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "dpdc/oracle.hpp"
#include "testutil.hpp"

using namespace dpdc;

namespace {

Dataset from_tsv(const std::string& text) {
  std::istringstream in(text);
  return load_dataset(in, InputFormat::kTsv);
}

Dataset from_jsonl(const std::string& text) {
  std::istringstream in(text);
  return load_dataset(in, InputFormat::kJsonl);
}

std::vector<std::string> item_strings(const Dataset& d, std::size_t person) {
  std::vector<std::string> out;
  for (ItemId id : d.items_of(person)) out.push_back(d.item_string(id));
  return out;
}

}  // namespace

TEST_SUITE("ingest") {

TEST_CASE("tsv basic parse") {
  const Dataset d = from_tsv("1\ta\n1\tb\n2\ta\n");
  CHECK(d.person_count() == 2);
  CHECK(item_strings(d, 0) == std::vector<std::string>{"a", "b"});
  CHECK(item_strings(d, 1) == std::vector<std::string>{"a"});
}

TEST_CASE("tsv duplicate items collapse") {
  const Dataset d = from_tsv("1\ta\n1\ta\n");
  CHECK(d.person_count() == 1);
  CHECK(item_strings(d, 0) == std::vector<std::string>{"a"});
}

TEST_CASE("empty stream") {
  const Dataset d = from_tsv("");
  CHECK(d.person_count() == 0);
  CHECK(d.vocabulary_size() == 0);
  CHECK(distinct_count_exact(d) == 0);
}

TEST_CASE("persons keep first-occurrence order") {
  const Dataset d = from_tsv("z\ta\nb\tb\nz\tc\na\td\n");
  CHECK(d.person_key(0) == "z");
  CHECK(d.person_key(1) == "b");
  CHECK(d.person_key(2) == "a");
}

TEST_CASE("per-person items sorted by original string, not by id") {
  // "b" is interned first (id 0) but must sort after "a".
  const Dataset d = from_tsv("1\tb\n1\ta\n");
  CHECK(item_strings(d, 0) == std::vector<std::string>{"a", "b"});
  CHECK(d.items_of(0)[0] == 1);
  CHECK(d.items_of(0)[1] == 0);
}

TEST_CASE("tsv missing tab names the line") {
  CHECK_THROWS_WITH_AS(from_tsv("1\ta\nnope\n"),
                       doctest::Contains("line 2"), ParseError);
}

TEST_CASE("non-utf8 input raises encoding error") {
  std::string text = "1\ta\n1\t";
  text += static_cast<char>(0xFF);
  text += "\n";
  CHECK_THROWS_AS(from_tsv(text), EncodingError);
}

TEST_CASE("jsonl parse with zero-item person retained") {
  const Dataset d = from_jsonl(
      "{\"person\": \"u1\", \"items\": [\"b\", \"a\"]}\n"
      "{\"person\": \"u2\", \"items\": []}\n");
  CHECK(d.person_count() == 2);
  CHECK(item_strings(d, 0) == std::vector<std::string>{"a", "b"});
  CHECK(d.items_of(1).empty());
}

TEST_CASE("jsonl bad row names the line") {
  CHECK_THROWS_WITH_AS(
      from_jsonl("{\"person\": \"u\", \"items\": []}\n{broken\n"),
      doctest::Contains("line 2"), ParseError);
  CHECK_THROWS_AS(from_jsonl("{\"person\": 3, \"items\": []}\n"), ParseError);
  CHECK_THROWS_AS(from_jsonl("{\"person\": \"u\", \"items\": [1]}\n"),
                  ParseError);
}

TEST_CASE("stats of a single two-item person") {
  const StatsReport r = dataset_stats(testutil::make_dataset({{"a", "b"}}));
  CHECK(r.people == 1);
  CHECK(r.records == 2);
  CHECK(r.min_per_person == 2);
  CHECK(r.median_per_person == doctest::Approx(2.0));
  CHECK(r.max_per_person == 2);
  CHECK(r.vocabulary == 2);
}

TEST_CASE("stats median uses the midpoint convention") {
  const StatsReport r =
      dataset_stats(testutil::make_dataset({{"a"}, {"b", "c", "d"}}));
  CHECK(r.median_per_person == doctest::Approx(2.0));
}

TEST_CASE("stats of the empty dataset") {
  const StatsReport r = dataset_stats(Dataset{});
  CHECK(r.people == 0);
  CHECK(r.records == 0);
  CHECK(r.min_per_person == 0);
  CHECK(r.median_per_person == doctest::Approx(0.0));
  CHECK(r.max_per_person == 0);
  CHECK(r.vocabulary == 0);
}

TEST_CASE("distinct count of overlapping sets") {
  CHECK(distinct_count_exact(testutil::make_dataset({{"a", "b"}, {"b", "c"}})) ==
        3);
}

TEST_CASE("loading is idempotent through serialization") {
  RandomSource rng(2024);
  for (int round = 0; round < 50; ++round) {
    const Dataset d = oracle::random_small_dataset(rng, 5, 4, 6, 14);

    std::ostringstream jsonl;
    write_jsonl(d, jsonl);
    CHECK(from_jsonl(jsonl.str()).content_equals(d));

    std::ostringstream tsv;
    write_tsv(d, tsv);
    const Dataset reloaded = from_tsv(tsv.str());
    // TSV drops zero-item persons; compare against the same view.
    Dataset::Builder expect;
    for (std::size_t i = 0; i < d.person_count(); ++i) {
      for (ItemId id : d.items_of(i)) {
        expect.add(d.person_key(i), d.item_string(id));
      }
    }
    CHECK(reloaded.content_equals(std::move(expect).build()));
  }
}

TEST_CASE("distinct count is invariant under person permutation") {
  const std::string block_a = "1\ta\n1\tb\n";
  const std::string block_b = "2\tb\n2\tc\n";
  CHECK(distinct_count_exact(from_tsv(block_a + block_b)) ==
        distinct_count_exact(from_tsv(block_b + block_a)));
}

TEST_CASE("records and vocabulary ignore line order within a person") {
  const Dataset fwd = from_tsv("1\tb\n1\ta\n1\tc\n");
  const Dataset rev = from_tsv("1\tc\n1\ta\n1\tb\n");
  CHECK(fwd.record_count() == rev.record_count());
  CHECK(fwd.vocabulary_size() == rev.vocabulary_size());
  CHECK(fwd.content_equals(rev));
}

TEST_CASE("without_person preserves order and item table") {
  const Dataset d = testutil::make_dataset({{"a"}, {"b"}, {"c"}});
  const Dataset cut = d.without_person(1);
  REQUIRE(cut.person_count() == 2);
  CHECK(cut.person_key(0) == "p0");
  CHECK(cut.person_key(1) == "p2");
  CHECK(cut.item_string(cut.items_of(1)[0]) == "c");
}

}  // TEST_SUITE
