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

#include <cmath>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "dpdc/dataset.hpp"
#include "dpdc/estimator.hpp"
#include "dpdc/greedy.hpp"
#include "dpdc/matching.hpp"
#include "dpdc/mechanisms.hpp"
#include "dpdc/oracle.hpp"

namespace dpdc::cli {
namespace {

using nlohmann::ordered_json;

struct RunConfig {
  std::string input;
  std::string format = "tsv";
  std::string algo = "matching";
  std::string method = "gem";
  double epsilon = 1.0;
  double beta = 0.05;
  std::size_t ell_max = 100;
  std::size_t ell = 1;
  std::size_t trials = 1;
  std::uint64_t seed = 1;
  std::string output;  // empty means standard output
  std::size_t cases = 1000;
};

InputFormat parse_format(const std::string& f) {
  return f == "jsonl" ? InputFormat::kJsonl : InputFormat::kTsv;
}

CountMethod parse_algo(const std::string& a) {
  if (a == "matching") return CountMethod::kMatching;
  if (a == "greedy") return CountMethod::kGreedy;
  return CountMethod::kSampling;
}

BoundSelection parse_method(const std::string& m) {
  if (m == "max") return BoundSelection::kMaxContribution;
  if (m == "p90") return BoundSelection::kP90Contribution;
  if (m == "utility") return BoundSelection::kExactUtility;
  return BoundSelection::kGemUtility;
}

// Every JSON report carries the effective configuration of its run.
ordered_json make_config(const std::string& command, const RunConfig& c,
                         bool with_algo, bool with_method, bool with_privacy,
                         bool with_ell, bool with_trials, bool with_seed) {
  ordered_json cfg;
  cfg["command"] = command;
  cfg["input"] = c.input;
  cfg["format"] = c.format;
  if (with_algo) cfg["algo"] = c.algo;
  if (with_method) cfg["method"] = c.method;
  if (with_privacy) {
    cfg["epsilon"] = c.epsilon;
    cfg["beta"] = c.beta;
    cfg["ell_max"] = c.ell_max;
  }
  if (with_ell) cfg["ell"] = c.ell;
  if (with_trials) cfg["trials"] = c.trials;
  if (with_seed) cfg["seed"] = c.seed;
  cfg["output"] = c.output.empty() ? "-" : c.output;
  return cfg;
}

void emit(const RunConfig& c, std::ostream& out, const std::string& text) {
  if (c.output.empty()) {
    out << text;
    return;
  }
  std::ofstream f(c.output, std::ios::binary);
  if (!f) {
    throw std::runtime_error("cannot open output file: " + c.output);
  }
  f << text;
}

int cmd_stats(const RunConfig& c, std::ostream& out) {
  const Dataset d = load_dataset_file(c.input, parse_format(c.format));
  const StatsReport r = dataset_stats(d);
  ordered_json report;
  report["people"] = r.people;
  report["records"] = r.records;
  report["min_per_person"] = r.min_per_person;
  report["median_per_person"] = r.median_per_person;
  report["max_per_person"] = r.max_per_person;
  report["vocabulary"] = r.vocabulary;
  report["config"] =
      make_config("stats", c, false, false, false, false, false, false);
  emit(c, out, report.dump() + "\n");
  return 0;
}

int cmd_count_exact(const RunConfig& c, std::ostream& out) {
  const Dataset d = load_dataset_file(c.input, parse_format(c.format));
  ordered_json report;
  report["distinct"] = distinct_count_exact(d);
  report["config"] =
      make_config("count-exact", c, false, false, false, false, false, false);
  emit(c, out, report.dump() + "\n");
  return 0;
}

int cmd_curve(const RunConfig& c, std::ostream& out) {
  const Dataset d = load_dataset_file(c.input, parse_format(c.format));
  std::ostringstream csv;
  csv << "ell,count\n";
  const CountMethod algo = parse_algo(c.algo);
  if (algo == CountMethod::kSampling) {
    // Mean count per ell over the requested trials.
    std::vector<double> totals(c.ell_max, 0.0);
    for (std::size_t trial = 0; trial < c.trials; ++trial) {
      RandomSource rng(RandomSource::derive_seed(c.seed, trial));
      for (std::size_t ell = 1; ell <= c.ell_max; ++ell) {
        totals[ell - 1] +=
            static_cast<double>(sampling_count(d, ell, rng));
      }
    }
    for (std::size_t ell = 1; ell <= c.ell_max; ++ell) {
      const double mean = totals[ell - 1] / static_cast<double>(c.trials);
      csv << ell << ',' << nlohmann::json(mean).dump() << '\n';
    }
  } else {
    const BoundedCountCurve curve = algo == CountMethod::kMatching
                                        ? bounded_count_curve(d, c.ell_max)
                                        : greedy_count_curve(d, c.ell_max);
    for (std::size_t ell = 1; ell <= c.ell_max; ++ell) {
      csv << ell << ',' << curve.at(ell) << '\n';
    }
  }
  emit(c, out, csv.str());
  return 0;
}

int cmd_select_bound(const RunConfig& c, std::ostream& out) {
  const Dataset d = load_dataset_file(c.input, parse_format(c.format));
  const PrivacyParams params{c.epsilon, c.beta, c.ell_max};
  RandomSource rng(c.seed);
  const BoundSelection method = parse_method(c.method);
  const std::size_t ell =
      select_bound(d, method, params, parse_algo(c.algo), rng);
  ordered_json report;
  report["ell"] = ell;
  report["private"] = method == BoundSelection::kGemUtility;
  report["config"] =
      make_config("select-bound", c, true, true, true, false, false, true);
  emit(c, out, report.dump() + "\n");
  return 0;
}

int cmd_dp_count(const RunConfig& c, std::ostream& out) {
  const Dataset d = load_dataset_file(c.input, parse_format(c.format));
  const PrivacyParams params{c.epsilon, c.beta, c.ell_max};
  params.validate();
  const CountMethod algo = parse_algo(c.algo);
  // The counts are a deterministic function of the dataset, so the curve is
  // computed once and released per trial.
  const BoundedCountCurve curve = algo == CountMethod::kMatching
                                      ? bounded_count_curve(d, c.ell_max)
                                      : greedy_count_curve(d, c.ell_max);
  std::ostringstream body;
  for (std::size_t trial = 0; trial < c.trials; ++trial) {
    RandomSource rng(RandomSource::derive_seed(c.seed, trial));
    const DpEstimate est = dp_release_from_curve(curve, algo, params, rng);
    ordered_json row;
    row["method"] = to_string(est.method);
    row["epsilon"] = est.params.epsilon;
    row["beta"] = est.params.beta;
    row["ell_max"] = est.params.ell_max;
    row["seed"] = est.seed;
    row["ell_hat"] = est.ell_hat;
    row["nu_hat"] = est.nu_hat;
    body << row.dump() << '\n';
  }
  emit(c, out, body.str());
  return 0;
}

int cmd_dp_count_fixed(const RunConfig& c, std::ostream& out) {
  const Dataset d = load_dataset_file(c.input, parse_format(c.format));
  RandomSource rng(c.seed);
  std::size_t count = 0;
  switch (parse_algo(c.algo)) {
    case CountMethod::kMatching:
      count = bounded_distinct_count(d, c.ell);
      break;
    case CountMethod::kGreedy:
      count = greedy_count_at(d, c.ell);
      break;
    case CountMethod::kSampling:
      count = sampling_count(d, c.ell, rng);
      break;
  }
  const double release = dp_count_fixed_bound(count, c.ell, c.epsilon, rng);
  ordered_json report;
  report["release"] = release;
  report["config"] =
      make_config("dp-count-fixed", c, true, false, false, true, false, true);
  report["config"]["epsilon"] = c.epsilon;
  emit(c, out, report.dump() + "\n");
  return 0;
}

struct SelfCheck {
  std::string name;
  std::size_t passed = 0;
  std::size_t total = 0;

  void record(bool ok) {
    ++total;
    if (ok) ++passed;
  }
};

int cmd_selftest(const RunConfig& c, std::ostream& out) {
  RandomSource rng(c.seed);
  SelfCheck matching_check{"matching vs exhaustive-subset oracle"};
  SelfCheck greedy_check{"greedy two-sided bound"};
  SelfCheck sensitivity_check{"sensitivity probes (matching, greedy)"};
  SelfCheck graph_check{"hopcroft-karp vs augmenting-path oracle"};
  SelfCheck gem_check{"gem scores fast vs naive"};

  for (std::size_t i = 0; i < c.cases; ++i) {
    const Dataset d = oracle::random_small_dataset(rng, 5, 4, 6, 14);
    const std::size_t ell = 1 + rng.below(4);
    const std::size_t exact = bounded_distinct_count(d, ell);
    matching_check.record(exact == oracle::bounded_count_bruteforce(d, ell));
    const std::size_t greedy = greedy_count_at(d, ell);
    greedy_check.record((exact + 1) / 2 <= greedy && greedy <= exact);
    sensitivity_check.record(
        oracle::sensitivity_probe(d, ell, CountMethod::kMatching) <= ell &&
        oracle::sensitivity_probe(d, ell, CountMethod::kGreedy) <= ell);

    const CopyGraph g = oracle::random_small_graph(rng, 8, 8);
    graph_check.record(maximum_matching_size(g) ==
                       oracle::matching_bruteforce(g));

    const GemProblem p = oracle::random_gem_problem(rng, 50);
    const std::vector<double> fast = gem_scores_fast(p);
    const std::vector<double> naive = oracle::gem_scores_naive(p);
    bool close = true;
    for (std::size_t k = 0; k < fast.size(); ++k) {
      if (std::abs(fast[k] - naive[k]) > 1e-9) close = false;
    }
    gem_check.record(close);
  }

  std::ostringstream report;
  report << "selftest: cases=" << c.cases << " seed=" << c.seed << "\n";
  bool all_ok = true;
  for (const SelfCheck* check :
       {&matching_check, &greedy_check, &sensitivity_check, &graph_check,
        &gem_check}) {
    report << "  " << check->name << ": " << check->passed << "/"
           << check->total << (check->passed == check->total ? " ok" : " FAIL")
           << "\n";
    if (check->passed != check->total) all_ok = false;
  }
  report << (all_ok ? "selftest: OK\n" : "selftest: FAILED\n");
  emit(c, out, report.str());
  return all_ok ? 0 : 3;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Differentially private lower bounds on distinct counts"};
  app.name("dpdc");
  app.require_subcommand(1);

  RunConfig cfg;
  const auto format_check =
      CLI::IsMember({"tsv", "jsonl"}, CLI::ignore_case);

  const auto add_io = [&](CLI::App* cmd) {
    cmd->add_option("input", cfg.input, "input dataset file")->required();
    cmd->add_option("--format", cfg.format, "input format")
        ->check(format_check)
        ->capture_default_str();
    cmd->add_option("-o,--output", cfg.output,
                    "output file (default: standard output)");
  };

  CLI::App* stats = app.add_subcommand("stats", "dataset summary statistics");
  add_io(stats);

  CLI::App* count_exact =
      app.add_subcommand("count-exact", "non-private distinct count");
  add_io(count_exact);

  CLI::App* curve = app.add_subcommand(
      "curve", "per-bound counts as CSV (ell,count)");
  add_io(curve);
  curve->add_option("--algo", cfg.algo, "counting algorithm")
      ->check(CLI::IsMember({"matching", "greedy", "sampling"}))
      ->capture_default_str();
  curve->add_option("--ell-max", cfg.ell_max, "largest bound to sweep")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  curve->add_option("--trials", cfg.trials, "sampling trials per bound")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  curve->add_option("--seed", cfg.seed, "master seed")->capture_default_str();

  CLI::App* select =
      app.add_subcommand("select-bound", "choose a contribution bound");
  add_io(select);
  select->add_option("--method", cfg.method, "selection strategy")
      ->check(CLI::IsMember({"max", "p90", "utility", "gem"}))
      ->capture_default_str();
  select->add_option("--algo", cfg.algo, "counting algorithm for utilities")
      ->check(CLI::IsMember({"matching", "greedy", "sampling"}))
      ->capture_default_str();
  select->add_option("--epsilon", cfg.epsilon, "privacy budget")
      ->capture_default_str();
  select->add_option("--beta", cfg.beta, "failure probability")
      ->capture_default_str();
  select->add_option("--ell-max", cfg.ell_max, "largest candidate bound")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  select->add_option("--seed", cfg.seed, "master seed")->capture_default_str();

  CLI::App* dp_count = app.add_subcommand(
      "dp-count", "private distinct-count lower bound (NDJSON per trial)");
  add_io(dp_count);
  dp_count->add_option("--algo", cfg.algo, "counting algorithm")
      ->check(CLI::IsMember({"matching", "greedy"}))
      ->capture_default_str();
  dp_count->add_option("--epsilon", cfg.epsilon, "privacy budget")
      ->capture_default_str();
  dp_count->add_option("--beta", cfg.beta, "failure probability")
      ->capture_default_str();
  dp_count->add_option("--ell-max", cfg.ell_max, "largest candidate bound")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  dp_count->add_option("--seed", cfg.seed, "master seed")
      ->capture_default_str();
  dp_count->add_option("--trials", cfg.trials, "number of released trials")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  CLI::App* dp_fixed = app.add_subcommand(
      "dp-count-fixed", "private count at a fixed contribution bound");
  add_io(dp_fixed);
  dp_fixed->add_option("--algo", cfg.algo, "counting algorithm")
      ->check(CLI::IsMember({"matching", "greedy", "sampling"}))
      ->capture_default_str();
  dp_fixed->add_option("--ell", cfg.ell, "contribution bound")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  dp_fixed->add_option("--epsilon", cfg.epsilon, "privacy budget")
      ->capture_default_str();
  dp_fixed->add_option("--seed", cfg.seed, "master seed")
      ->capture_default_str();

  CLI::App* selftest = app.add_subcommand(
      "selftest", "cross-check fast implementations against oracles");
  selftest->add_option("--cases", cfg.cases, "number of random cases")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  selftest->add_option("--seed", cfg.seed, "master seed")
      ->capture_default_str();
  selftest->add_option("-o,--output", cfg.output,
                       "output file (default: standard output)");

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("dpdc");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (stats->parsed()) return cmd_stats(cfg, out);
    if (count_exact->parsed()) return cmd_count_exact(cfg, out);
    if (curve->parsed()) return cmd_curve(cfg, out);
    if (select->parsed()) return cmd_select_bound(cfg, out);
    if (dp_count->parsed()) return cmd_dp_count(cfg, out);
    if (dp_fixed->parsed()) return cmd_dp_count_fixed(cfg, out);
    if (selftest->parsed()) return cmd_selftest(cfg, out);
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  err << "usage error: no subcommand\n";
  return 2;
}

}  // namespace dpdc::cli
