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

#include "cli.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"

namespace {

using nlohmann::json;

struct RunResult {
  int status = 0;
  std::string out;
  std::string err;
};

RunResult run_cli(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  RunResult r;
  r.status = dpdc::cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::filesystem::path write_temp(const std::string& name,
                                 const std::string& content) {
  const std::filesystem::path path =
      std::filesystem::temp_directory_path() / name;
  std::ofstream f(path, std::ios::binary);
  f << content;
  return path;
}

std::vector<json> parse_ndjson(const std::string& text) {
  std::vector<json> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty()) rows.push_back(json::parse(line));
  }
  return rows;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("count-exact reports the distinct count") {
  const auto path = write_temp("dpdc_cli_count.tsv", "1\ta\n1\tb\n2\ta\n");
  const RunResult r = run_cli({"count-exact", path.string()});
  REQUIRE(r.status == 0);
  const json report = json::parse(r.out);
  CHECK(report["distinct"] == 2);
  CHECK(report["config"]["command"] == "count-exact");
  std::filesystem::remove(path);
}

TEST_CASE("stats emits the six summary fields") {
  const auto path =
      write_temp("dpdc_cli_stats.tsv", "1\ta\n1\tb\n2\tc\n3\td\n3\te\n3\tf\n");
  const RunResult r = run_cli({"stats", path.string()});
  REQUIRE(r.status == 0);
  const json report = json::parse(r.out);
  CHECK(report["people"] == 3);
  CHECK(report["records"] == 6);
  CHECK(report["min_per_person"] == 1);
  CHECK(report["median_per_person"] == doctest::Approx(2.0));
  CHECK(report["max_per_person"] == 3);
  CHECK(report["vocabulary"] == 6);
  std::filesystem::remove(path);
}

TEST_CASE("jsonl input is accepted via --format") {
  const auto path = write_temp(
      "dpdc_cli_stats.jsonl",
      "{\"person\": \"a\", \"items\": [\"x\", \"y\"]}\n"
      "{\"person\": \"b\", \"items\": []}\n");
  const RunResult r = run_cli({"stats", path.string(), "--format", "jsonl"});
  REQUIRE(r.status == 0);
  const json report = json::parse(r.out);
  CHECK(report["people"] == 2);
  CHECK(report["min_per_person"] == 0);
  std::filesystem::remove(path);
}

TEST_CASE("curve emits csv with the expected header and counts") {
  const auto path = write_temp("dpdc_cli_curve.tsv", "1\ta\n1\tb\n2\ta\n");
  const RunResult r = run_cli(
      {"curve", path.string(), "--algo", "matching", "--ell-max", "3"});
  REQUIRE(r.status == 0);
  CHECK(r.out == "ell,count\n1,2\n2,2\n3,2\n");

  const RunResult greedy = run_cli(
      {"curve", path.string(), "--algo", "greedy", "--ell-max", "2"});
  CHECK(greedy.out == "ell,count\n1,1\n2,2\n");

  const RunResult sampling = run_cli({"curve", path.string(), "--algo",
                                      "sampling", "--ell-max", "2", "--trials",
                                      "4", "--seed", "3"});
  CHECK(sampling.out.substr(0, 10) == "ell,count\n");
  std::filesystem::remove(path);
}

TEST_CASE("matching curve output keeps the exact-curve shape") {
  // Zipf-flavored input with enough overlap for a nontrivial curve.
  std::string text;
  for (int person = 0; person < 30; ++person) {
    for (int k = 0; k <= person % 5; ++k) {
      text += "p" + std::to_string(person) + "\tw" +
              std::to_string((person * 7 + k * k) % 23) + "\n";
    }
  }
  const auto path = write_temp("dpdc_cli_curve_shape.tsv", text);
  const RunResult r = run_cli(
      {"curve", path.string(), "--algo", "matching", "--ell-max", "6"});
  REQUIRE(r.status == 0);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  REQUIRE(line == "ell,count");
  std::vector<long> counts;
  std::size_t ell = 0;
  while (std::getline(in, line)) {
    ++ell;
    const auto comma = line.find(',');
    REQUIRE(comma != std::string::npos);
    CHECK(std::stoul(line.substr(0, comma)) == ell);
    counts.push_back(std::stol(line.substr(comma + 1)));
  }
  REQUIRE(counts.size() == 6);
  for (std::size_t i = 1; i < counts.size(); ++i) {
    CHECK(counts[i] >= counts[i - 1]);
    if (i >= 2) {
      CHECK(counts[i] - counts[i - 1] <= counts[i - 1] - counts[i - 2]);
    }
  }
  std::filesystem::remove(path);
}

TEST_CASE("select-bound reports the bound and privacy flag") {
  std::string text;
  for (int size = 1; size <= 10; ++size) {
    for (int k = 0; k < size; ++k) {
      text += "p" + std::to_string(size) + "\tw" + std::to_string(size) + "_" +
              std::to_string(k) + "\n";
    }
  }
  const auto path = write_temp("dpdc_cli_select.tsv", text);

  const RunResult max = run_cli(
      {"select-bound", path.string(), "--method", "max", "--seed", "4"});
  REQUIRE(max.status == 0);
  const json max_report = json::parse(max.out);
  CHECK(max_report["ell"] == 10);
  CHECK(max_report["private"] == false);

  const RunResult p90 = run_cli(
      {"select-bound", path.string(), "--method", "p90", "--seed", "4"});
  CHECK(json::parse(p90.out)["ell"] == 9);

  const RunResult gem = run_cli({"select-bound", path.string(), "--method",
                                 "gem", "--algo", "greedy", "--epsilon", "1",
                                 "--beta", "0.05", "--ell-max", "12", "--seed",
                                 "4"});
  REQUIRE(gem.status == 0);
  const json gem_report = json::parse(gem.out);
  CHECK(gem_report["private"] == true);
  CHECK(gem_report["ell"].get<std::size_t>() >= 1);
  CHECK(gem_report["ell"].get<std::size_t>() <= 12);
  CHECK(gem_report["config"]["method"] == "gem");
  std::filesystem::remove(path);
}

TEST_CASE("dp-count emits one estimate per trial with derived seeds") {
  const auto path = write_temp("dpdc_cli_dp.tsv", "1\ta\n1\tb\n2\ta\n2\tc\n");
  const RunResult r = run_cli({"dp-count", path.string(), "--algo", "greedy",
                               "--epsilon", "1", "--beta", "0.05", "--ell-max",
                               "3", "--seed", "11", "--trials", "4"});
  REQUIRE(r.status == 0);
  const std::vector<json> rows = parse_ndjson(r.out);
  REQUIRE(rows.size() == 4);
  std::vector<std::uint64_t> seeds;
  for (const json& row : rows) {
    CHECK(row["method"] == "greedy");
    CHECK(row["epsilon"] == doctest::Approx(1.0));
    CHECK(row["beta"] == doctest::Approx(0.05));
    CHECK(row["ell_max"] == 3);
    CHECK(row["ell_hat"].get<std::size_t>() >= 1);
    CHECK(row["ell_hat"].get<std::size_t>() <= 3);
    CHECK(row["nu_hat"].is_number());
    seeds.push_back(row["seed"].get<std::uint64_t>());
  }
  for (std::size_t i = 1; i < seeds.size(); ++i) {
    CHECK(seeds[i] != seeds[0]);
  }
  std::filesystem::remove(path);
}

TEST_CASE("dp-count-fixed emits a single release") {
  const auto path = write_temp("dpdc_cli_fixed.tsv", "1\ta\n2\tb\n");
  const RunResult r = run_cli({"dp-count-fixed", path.string(), "--algo",
                               "matching", "--ell", "1", "--epsilon", "2",
                               "--seed", "5"});
  REQUIRE(r.status == 0);
  const json report = json::parse(r.out);
  CHECK(report["release"].is_number());
  CHECK(report["config"]["ell"] == 1);
  CHECK(report["config"]["algo"] == "matching");
  std::filesystem::remove(path);
}

TEST_CASE("selftest passes and honors --cases") {
  const RunResult r = run_cli({"selftest", "--cases", "25", "--seed", "9"});
  CHECK(r.status == 0);
  CHECK(r.out.find("selftest: OK") != std::string::npos);
  CHECK(r.out.find("25/25") != std::string::npos);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run_cli({"no-such-command"}).status == 2);
  CHECK(run_cli({}).status == 2);
  CHECK(run_cli({"dp-count", "x.tsv", "--algo", "sampling"}).status == 2);
  CHECK(run_cli({"curve", "x.tsv", "--ell-max", "0"}).status == 2);
}

TEST_CASE("file errors exit with 1") {
  CHECK(run_cli({"count-exact", "/nonexistent/definitely_missing.tsv"})
            .status == 1);
  const auto bad = write_temp("dpdc_cli_bad.tsv", "no_tab_here\n");
  const RunResult r = run_cli({"count-exact", bad.string()});
  CHECK(r.status == 1);
  CHECK(r.err.find("line 1") != std::string::npos);
  std::filesystem::remove(bad);
}

TEST_CASE("help exits zero") {
  const RunResult r = run_cli({"--help"});
  CHECK(r.status == 0);
  CHECK(r.out.find("dp-count") != std::string::npos);
}

TEST_CASE("fixed seeds reproduce byte-identical reports") {
  const auto path =
      write_temp("dpdc_cli_repro.tsv", "1\ta\n1\tb\n2\ta\n2\tc\n3\td\n");
  const std::vector<std::vector<std::string>> commands = {
      {"stats", path.string()},
      {"count-exact", path.string()},
      {"curve", path.string(), "--algo", "sampling", "--ell-max", "3",
       "--trials", "5", "--seed", "21"},
      {"select-bound", path.string(), "--method", "gem", "--algo", "matching",
       "--ell-max", "4", "--seed", "21"},
      {"dp-count", path.string(), "--algo", "matching", "--ell-max", "4",
       "--seed", "21", "--trials", "3"},
      {"dp-count-fixed", path.string(), "--algo", "sampling", "--ell", "2",
       "--seed", "21"},
      {"selftest", "--cases", "10", "--seed", "21"},
  };
  for (const auto& command : commands) {
    const RunResult first = run_cli(command);
    const RunResult second = run_cli(command);
    CHECK(first.status == second.status);
    CHECK(first.out == second.out);
  }
  std::filesystem::remove(path);
}

TEST_CASE("output lands in --output files") {
  const auto input = write_temp("dpdc_cli_outfile.tsv", "1\ta\n");
  const auto outfile =
      std::filesystem::temp_directory_path() / "dpdc_cli_outfile.json";
  const RunResult r = run_cli(
      {"count-exact", input.string(), "--output", outfile.string()});
  REQUIRE(r.status == 0);
  CHECK(r.out.empty());
  std::ifstream f(outfile);
  json report;
  f >> report;
  CHECK(report["distinct"] == 1);
  std::filesystem::remove(input);
  std::filesystem::remove(outfile);
}

}  // TEST_SUITE
