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

#ifndef DPDC_DATASET_H_
#define DPDC_DATASET_H_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace dpdc {

// Dense id of an interned item string. Ids are assigned in first-occurrence
// order over the whole input, so id order generally differs from the
// byte-lexicographic order of the strings.
using ItemId = std::uint32_t;

// One person's contributed items. Duplicate-free and sorted ascending by the
// byte-lexicographic order of the original item strings (not by id).
struct PersonRecord {
  std::vector<ItemId> items;
};

// Per-dataset summary statistics.
struct StatsReport {
  std::size_t people = 0;
  std::size_t records = 0;  // sum of per-person item counts after dedup
  std::size_t min_per_person = 0;
  double median_per_person = 0.0;  // midpoint of the two middle order stats
  std::size_t max_per_person = 0;
  std::size_t vocabulary = 0;  // number of distinct items
};

enum class InputFormat { kTsv, kJsonl };

// Raised when an input stream cannot be parsed; message names the 1-based
// line number of the offending row.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Raised when input bytes are not valid UTF-8.
class EncodingError : public ParseError {
 public:
  using ParseError::ParseError;
};

// Immutable person-keyed item table. Persons keep their input
// (first-occurrence) order; this order is significant for the greedy counter.
class Dataset {
 public:
  Dataset() = default;

  std::size_t person_count() const { return people_.size(); }
  std::size_t vocabulary_size() const { return item_strings_.size(); }
  // Total number of (person, item) records, i.e. the sum of |u_i|.
  std::size_t record_count() const;
  // Largest per-person item count; 0 for an empty dataset.
  std::size_t max_contribution() const;

  const std::vector<PersonRecord>& people() const { return people_; }
  std::span<const ItemId> items_of(std::size_t person) const {
    return people_[person].items;
  }
  const std::string& person_key(std::size_t person) const {
    return person_keys_[person];
  }
  const std::string& item_string(ItemId id) const { return item_strings_[id]; }

  // Content equality: same person keys in the same order, each holding the
  // same item strings. Internal id numbering is not compared, so a dataset
  // round-tripped through serialization compares equal to the original.
  bool content_equals(const Dataset& other) const;

  // Copy with person `index` removed and the order of the rest preserved.
  // The item table is kept unchanged so ids mean the same thing in both
  // datasets (used by neighboring-dataset probes).
  Dataset without_person(std::size_t index) const;

  class Builder {
   public:
    // Records that `person` contributed `item`. Duplicates are collapsed.
    void add(std::string_view person, std::string_view item);
    // Ensures `person` exists even with zero items.
    void add_person(std::string_view person);
    Dataset build() &&;

   private:
    std::size_t person_index(std::string_view person);
    std::unordered_map<std::string, std::size_t> person_ids_;
    std::unordered_map<std::string, ItemId> item_ids_;
    std::vector<std::string> person_keys_;
    std::vector<std::string> item_strings_;
    std::vector<std::vector<ItemId>> raw_items_;
  };

 private:
  std::vector<PersonRecord> people_;
  std::vector<std::string> person_keys_;
  std::vector<std::string> item_strings_;  // id -> original string
};

// Parses `person<TAB>item` rows (TSV) or `{"person": ..., "items": [...]}`
// rows (JSONL) into a Dataset. Persons appear in first-occurrence order,
// items are interned in first-occurrence order, per-person lists are
// deduplicated and sorted by the original strings.
Dataset load_dataset(std::istream& in, InputFormat format);
Dataset load_dataset_file(const std::string& path, InputFormat format);

StatsReport dataset_stats(const Dataset& d);

// Number of distinct items across all persons. Every interned id is
// referenced by some person, so this equals the vocabulary size.
std::size_t distinct_count_exact(const Dataset& d);

// Writes persons in order, one row per item in the person's stored order.
// TSV cannot express a person with zero items; JSONL is lossless.
void write_tsv(const Dataset& d, std::ostream& out);
void write_jsonl(const Dataset& d, std::ostream& out);

}  // namespace dpdc

#endif  // DPDC_DATASET_H_
