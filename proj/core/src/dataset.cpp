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

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>

#include "json.hpp"

namespace dpdc {
namespace {

// Validates UTF-8, including rejection of overlong encodings, surrogates,
// and code points above U+10FFFF.
bool is_valid_utf8(std::string_view s) {
  std::size_t i = 0;
  const std::size_t n = s.size();
  while (i < n) {
    const unsigned char c = static_cast<unsigned char>(s[i]);
    if (c < 0x80) {
      ++i;
      continue;
    }
    int len;
    unsigned int cp;
    if ((c & 0xE0) == 0xC0) {
      len = 2;
      cp = c & 0x1F;
    } else if ((c & 0xF0) == 0xE0) {
      len = 3;
      cp = c & 0x0F;
    } else if ((c & 0xF8) == 0xF0) {
      len = 4;
      cp = c & 0x07;
    } else {
      return false;
    }
    if (i + len > n) return false;
    for (int k = 1; k < len; ++k) {
      const unsigned char cc = static_cast<unsigned char>(s[i + k]);
      if ((cc & 0xC0) != 0x80) return false;
      cp = (cp << 6) | (cc & 0x3F);
    }
    if (len == 2 && cp < 0x80) return false;
    if (len == 3 && cp < 0x800) return false;
    if (len == 4 && cp < 0x10000) return false;
    if (cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) return false;
    i += len;
  }
  return true;
}

void check_utf8(std::string_view line, std::size_t line_no) {
  if (!is_valid_utf8(line)) {
    throw EncodingError(line_no, "invalid UTF-8");
  }
}

void strip_cr(std::string& line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
}

}  // namespace

std::size_t Dataset::record_count() const {
  std::size_t total = 0;
  for (const PersonRecord& p : people_) total += p.items.size();
  return total;
}

std::size_t Dataset::max_contribution() const {
  std::size_t best = 0;
  for (const PersonRecord& p : people_) best = std::max(best, p.items.size());
  return best;
}

bool Dataset::content_equals(const Dataset& other) const {
  if (person_count() != other.person_count()) return false;
  for (std::size_t i = 0; i < person_count(); ++i) {
    if (person_keys_[i] != other.person_keys_[i]) return false;
    const auto& a = people_[i].items;
    const auto& b = other.people_[i].items;
    if (a.size() != b.size()) return false;
    for (std::size_t k = 0; k < a.size(); ++k) {
      if (item_strings_[a[k]] != other.item_strings_[b[k]]) return false;
    }
  }
  return true;
}

Dataset Dataset::without_person(std::size_t index) const {
  Dataset out;
  out.item_strings_ = item_strings_;
  out.people_.reserve(people_.size() - 1);
  out.person_keys_.reserve(people_.size() - 1);
  for (std::size_t i = 0; i < people_.size(); ++i) {
    if (i == index) continue;
    out.people_.push_back(people_[i]);
    out.person_keys_.push_back(person_keys_[i]);
  }
  return out;
}

std::size_t Dataset::Builder::person_index(std::string_view person) {
  auto [it, inserted] =
      person_ids_.try_emplace(std::string(person), person_keys_.size());
  if (inserted) {
    person_keys_.emplace_back(person);
    raw_items_.emplace_back();
  }
  return it->second;
}

void Dataset::Builder::add_person(std::string_view person) {
  person_index(person);
}

void Dataset::Builder::add(std::string_view person, std::string_view item) {
  const std::size_t pi = person_index(person);
  auto [it, inserted] = item_ids_.try_emplace(
      std::string(item), static_cast<ItemId>(item_strings_.size()));
  if (inserted) item_strings_.emplace_back(item);
  raw_items_[pi].push_back(it->second);
}

Dataset Dataset::Builder::build() && {
  Dataset d;
  d.person_keys_ = std::move(person_keys_);
  d.item_strings_ = std::move(item_strings_);
  d.people_.resize(raw_items_.size());
  for (std::size_t i = 0; i < raw_items_.size(); ++i) {
    std::vector<ItemId>& items = raw_items_[i];
    // Sort by the original strings; duplicates intern to equal ids and end
    // up adjacent, so unique() removes them.
    std::sort(items.begin(), items.end(), [&d](ItemId a, ItemId b) {
      return d.item_strings_[a] < d.item_strings_[b];
    });
    items.erase(std::unique(items.begin(), items.end()), items.end());
    d.people_[i].items = std::move(items);
  }
  return d;
}

namespace {

Dataset load_tsv(std::istream& in) {
  Dataset::Builder builder;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    strip_cr(line);
    if (line.empty()) continue;
    check_utf8(line, line_no);
    const std::size_t tab = line.find('\t');
    if (tab == std::string::npos) {
      throw ParseError(line_no, "missing tab separator");
    }
    builder.add(std::string_view(line).substr(0, tab),
                std::string_view(line).substr(tab + 1));
  }
  return std::move(builder).build();
}

Dataset load_jsonl(std::istream& in) {
  Dataset::Builder builder;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    strip_cr(line);
    if (line.empty()) continue;
    check_utf8(line, line_no);
    nlohmann::json row;
    try {
      row = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(line_no, std::string("bad JSON: ") + e.what());
    }
    if (!row.is_object() || !row.contains("person") ||
        !row["person"].is_string() || !row.contains("items") ||
        !row["items"].is_array()) {
      throw ParseError(line_no,
                       "expected {\"person\": <string>, \"items\": [...]}");
    }
    const std::string person = row["person"].get<std::string>();
    builder.add_person(person);
    for (const nlohmann::json& item : row["items"]) {
      if (!item.is_string()) {
        throw ParseError(line_no, "items must be strings");
      }
      builder.add(person, item.get<std::string>());
    }
  }
  return std::move(builder).build();
}

}  // namespace

Dataset load_dataset(std::istream& in, InputFormat format) {
  return format == InputFormat::kTsv ? load_tsv(in) : load_jsonl(in);
}

Dataset load_dataset_file(const std::string& path, InputFormat format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open file: " + path);
  }
  return load_dataset(in, format);
}

StatsReport dataset_stats(const Dataset& d) {
  StatsReport r;
  r.people = d.person_count();
  r.records = d.record_count();
  r.vocabulary = d.vocabulary_size();
  if (r.people == 0) return r;
  std::vector<std::size_t> sizes;
  sizes.reserve(r.people);
  for (const PersonRecord& p : d.people()) sizes.push_back(p.items.size());
  std::sort(sizes.begin(), sizes.end());
  r.min_per_person = sizes.front();
  r.max_per_person = sizes.back();
  const std::size_t n = sizes.size();
  r.median_per_person =
      (n % 2 == 1) ? static_cast<double>(sizes[n / 2])
                   : (static_cast<double>(sizes[n / 2 - 1]) +
                      static_cast<double>(sizes[n / 2])) /
                         2.0;
  return r;
}

std::size_t distinct_count_exact(const Dataset& d) {
  return d.vocabulary_size();
}

void write_tsv(const Dataset& d, std::ostream& out) {
  for (std::size_t i = 0; i < d.person_count(); ++i) {
    for (ItemId id : d.items_of(i)) {
      out << d.person_key(i) << '\t' << d.item_string(id) << '\n';
    }
  }
}

void write_jsonl(const Dataset& d, std::ostream& out) {
  for (std::size_t i = 0; i < d.person_count(); ++i) {
    nlohmann::json items = nlohmann::json::array();
    for (ItemId id : d.items_of(i)) items.push_back(d.item_string(id));
    nlohmann::json row;
    row["person"] = d.person_key(i);
    row["items"] = std::move(items);
    out << row.dump() << '\n';
  }
}

}  // namespace dpdc
