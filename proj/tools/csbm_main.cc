// Copyright 2026 The csbm Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// csbm: command-line driver for sampling, decoding, bound tables and
// phase-transition sweeps. Exit codes: 0 success, 1 validation error,
// 2 runtime error; errors are reported as one JSON object on stderr.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "csbm/bounds.h"
#include "csbm/decoder.h"
#include "csbm/error.h"
#include "csbm/graph.h"
#include "csbm/json_io.h"
#include "csbm/ldp.h"
#include "csbm/model.h"
#include "csbm/oracle.h"
#include "csbm/parallel.h"
#include "csbm/partition.h"
#include "csbm/rng.h"
#include "csbm/sampler.h"
#include "csbm/sweep.h"
#include "json.hpp"

namespace {

using nlohmann::json;

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) csbm::ThrowValidation("io", "cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

json ReadJson(const std::string& path) {
  try {
    return json::parse(ReadFile(path));
  } catch (const json::parse_error& e) {
    csbm::ThrowValidation("json_syntax", path + ": " + e.what());
  }
}

// Writes to `path`, or stdout when empty.
void Emit(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) csbm::ThrowRuntime("io", "cannot write " + path);
}

std::string Dump(const json& j) { return j.dump(2) + "\n"; }

std::string CsvCell(const json& value) {
  if (value.is_null()) return "";
  if (value.is_string()) return value.get<std::string>();
  if (value.is_boolean()) return value.get<bool>() ? "true" : "false";
  if (value.is_number_float()) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.10g", value.get<double>());
    return buf;
  }
  return value.dump();
}

// CSV header is the sorted union of row keys.
std::string RowsToCsv(const json& rows) {
  std::vector<std::string> keys;
  for (const auto& row : rows) {
    for (const auto& item : row.items()) {
      if (std::find(keys.begin(), keys.end(), item.key()) == keys.end()) {
        keys.push_back(item.key());
      }
    }
  }
  std::sort(keys.begin(), keys.end());
  std::string out;
  for (size_t i = 0; i < keys.size(); ++i) out += (i ? "," : "") + keys[i];
  out += "\n";
  for (const auto& row : rows) {
    for (size_t i = 0; i < keys.size(); ++i) {
      if (i) out += ",";
      if (row.contains(keys[i])) out += CsvCell(row.at(keys[i]));
    }
    out += "\n";
  }
  return out;
}

struct Options {
  std::string config;
  std::string output;
  std::string format = "json";
  std::optional<uint64_t> seed;
  std::optional<int64_t> trials;

  std::string graph;
  std::string partition_output;
  std::string init;
  std::string decoder = "exact";
  int max_rounds = 1000;
  double a = 0.0;
  int k = 1;
  int k_max = 10;
  double chebyshev_k = 1.0;
};

void RunSample(const Options& opt) {
  const auto params = csbm::params_from_json(ReadJson(opt.config));
  const uint64_t seed = opt.seed.value_or(0);
  const auto planted =
      csbm::Partition::RandomBalanced(params.n(), csbm::DeriveSeed(seed, 1));
  const auto graph = csbm::sample_graph(params, planted,
                                        csbm::DeriveSeed(seed, 2),
                                        csbm::WorkerThreads());
  Emit(opt.output, csbm::serialize_graph(graph));
  if (!opt.partition_output.empty()) {
    Emit(opt.partition_output, csbm::serialize_partition(planted));
  }
}

void RunDecode(const Options& opt) {
  const auto params = csbm::params_from_json(ReadJson(opt.config));
  const auto graph = csbm::parse_graph(ReadFile(opt.graph));
  if (graph.n() != params.n() || graph.m() != params.m()) {
    csbm::ThrowValidation("size_mismatch",
                          "graph header does not match params n/m");
  }
  const auto& w = params.weights();
  if (opt.decoder == "exact") {
    Emit(opt.output, Dump(csbm::to_json(csbm::ml_decode_exact(graph, w))));
    return;
  }
  if (opt.decoder != "local") {
    csbm::ThrowValidation("decoder", "decoder must be exact or local");
  }
  const auto init =
      opt.init.empty() ? csbm::Partition::Planted(graph.n())
                       : csbm::parse_partition(ReadFile(opt.init));
  const auto refined = csbm::local_refine(graph, w, init, opt.max_rounds);
  csbm::DecodeResult result{refined.canonical(),
                            csbm::score_partition(graph, w, refined),
                            /*tie=*/false, /*explored=*/0};
  json j = csbm::to_json(result);
  j["tie"] = nullptr;
  j["local_maximum"] = !csbm::best_swap(graph, w, refined).has_value();
  Emit(opt.output, Dump(j));
}

void RunDivergence(const Options& opt) {
  const auto params = csbm::params_from_json(ReadJson(opt.config));
  Emit(opt.output, Dump(csbm::to_json(csbm::divergence_report(params))));
}

void RunRate(const Options& opt) {
  const auto params = csbm::params_from_json(ReadJson(opt.config));
  const auto law = csbm::pair_diff_distribution(params).law;
  json j = csbm::to_json(csbm::rate_function(law, opt.a));
  j["mean"] = law.mean();
  Emit(opt.output, Dump(j));
}

void RunBounds(const Options& opt) {
  const auto params = csbm::params_from_json(ReadJson(opt.config));
  json rows = json::array();
  const int k_top = std::min(params.n() / 4, opt.k_max);
  for (int k = 1; k <= k_top; ++k) {
    rows.push_back(csbm::to_json(csbm::pnk_theoretical_bound(params, k)));
  }
  rows.push_back(csbm::to_json(csbm::ml_failure_union_bound(params)));
  if (params.n() >= 16) {
    rows.push_back(csbm::to_json(
        csbm::delta_complement_bound(params.n(), params.alphas())));
    rows.push_back(csbm::to_json(
        csbm::cross_sum_chebyshev_bound(params, opt.chebyshev_k)));
    rows.push_back(csbm::to_json(csbm::heavy_neighbor_lower_bound(params)));
  }
  Emit(opt.output, opt.format == "csv" ? RowsToCsv(rows) : Dump(rows));
}

void RunPnk(const Options& opt) {
  const auto params = csbm::params_from_json(ReadJson(opt.config));
  const int64_t trials = opt.trials.value_or(100000);
  const uint64_t seed = opt.seed.value_or(0);
  const auto mc = csbm::oracle::monte_carlo_pnk(params, opt.k, trials, seed,
                                                csbm::WorkerThreads());
  const auto theory = csbm::pnk_theoretical_bound(params, opt.k);
  const auto law = csbm::pair_diff_distribution(params).law;
  const auto terms = static_cast<long long>(theory.input("terms"));
  const auto cramer = csbm::cramer_upper_bound(law, terms, 0.0);

  json exact = nullptr;
  if (terms <= 5000) {
    try {
      exact = csbm::oracle::exact_sum_distribution(law.atoms(),
                                                   static_cast<int>(terms))
                  .tail_at_least(0.0);
    } catch (const csbm::Error& e) {
      if (e.tag() != "oracle_blowup") throw;
    }
  }
  const json j = {{"k", opt.k},
                  {"terms", terms},
                  {"trials", trials},
                  {"seed", seed},
                  {"mc_estimate", mc.estimate},
                  {"mc_std_error", mc.std_error},
                  {"theoretical_bound", theory.value},
                  {"cramer_bound", cramer.value},
                  {"exact_tail", exact}};
  Emit(opt.output, Dump(j));
}

void RunSweepCommand(const Options& opt) {
  auto config = csbm::sweep_config_from_json(ReadJson(opt.config));
  if (opt.seed) config.seed = *opt.seed;
  if (opt.trials) config.trials = *opt.trials;
  const auto result = csbm::run_sweep(config, csbm::WorkerThreads());
  Emit(opt.output, opt.format == "json" ? Dump(csbm::sweep_json(result))
                                        : csbm::sweep_csv(result));
}

int ReportError(const std::string& tag, const std::string& message,
                int code) {
  const json j = {{"error", tag}, {"message", message}};
  std::cerr << j.dump() << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Colored two-community SBM: sampling, ML decoding, bounds"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* cmd, bool wants_format) {
    cmd->add_option("--config", opt.config, "JSON config file")->required();
    cmd->add_option("--output", opt.output, "Output path (default stdout)");
    if (wants_format) {
      cmd->add_option("--format", opt.format, "json or csv")
          ->check(CLI::IsMember({"json", "csv"}));
    }
  };

  auto* sample = app.add_subcommand("sample", "Sample a planted graph");
  add_common(sample, false);
  sample->add_option("--seed", opt.seed, "Master seed");
  sample->add_option("--partition-output", opt.partition_output,
                     "Write the planted partition here");

  auto* decode = app.add_subcommand("decode", "Decode a graph file");
  add_common(decode, false);
  decode->add_option("--graph", opt.graph, "Graph file")->required();
  decode->add_option("--decoder", opt.decoder, "exact or local")
      ->check(CLI::IsMember({"exact", "local"}));
  decode->add_option("--init", opt.init, "Initial partition (local)");
  decode->add_option("--max-rounds", opt.max_rounds, "Swap budget (local)");

  auto* divergence = app.add_subcommand("divergence", "Divergence report");
  add_common(divergence, false);

  auto* rate = app.add_subcommand("rate", "Rate function of Z - W at a");
  add_common(rate, false);
  rate->add_option("--a", opt.a, "Evaluation point")->required();

  auto* bounds = app.add_subcommand("bounds", "Tabulate probability bounds");
  add_common(bounds, true);
  bounds->add_option("--k-max", opt.k_max, "Largest k for per-k rows");
  bounds->add_option("--K", opt.chebyshev_k, "Chebyshev slack K");

  auto* pnk = app.add_subcommand("pnk", "Monte Carlo vs theoretical P_n^(k)");
  add_common(pnk, false);
  pnk->add_option("--k", opt.k, "Swap set size")->required();
  pnk->add_option("--trials", opt.trials, "Monte Carlo trials");
  pnk->add_option("--seed", opt.seed, "Master seed");

  auto* sweep = app.add_subcommand("sweep", "Phase-transition sweep");
  add_common(sweep, true);
  sweep->add_option("--seed", opt.seed, "Override the config seed");
  sweep->add_option("--trials", opt.trials, "Override trials per cell");
  opt.format = "json";

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return ReportError("usage", e.what(), 1);
  }

  try {
    if (*sample) RunSample(opt);
    if (*decode) RunDecode(opt);
    if (*divergence) RunDivergence(opt);
    if (*rate) RunRate(opt);
    if (*bounds) RunBounds(opt);
    if (*pnk) RunPnk(opt);
    if (*sweep) {
      if (sweep->count("--format") == 0) opt.format = "csv";
      RunSweepCommand(opt);
    }
  } catch (const csbm::Error& e) {
    return ReportError(e.tag(), e.what(),
                       e.kind() == csbm::ErrorKind::kValidation ? 1 : 2);
  } catch (const std::exception& e) {
    return ReportError("internal", e.what(), 2);
  }
  return 0;
}
