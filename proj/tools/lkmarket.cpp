// Copyright 2026 The lkmarket Authors
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

// Command-line front end: `lkmarket run <config>` reproduces a whole sweep
// as a CSV/JSON table, `lkmarket analyze` reports a single market instance.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "cournot/experiments.hpp"

namespace {

struct RunOptions {
  std::string config_path;
  cournot::ConfigMap overrides;
};

struct AnalyzeOptions {
  double a = 1.0;
  double b = 1.0;
  double c = 0.25;
  double m = 0.0;
  double f = 0.5;
  int k = 1;
  std::string delta = "1";
  double tau = 1.5;
  int k_max = 20;
  std::string out;
  std::string format = "csv";
};

int run_command(const RunOptions& options) {
  cournot::ConfigMap values = cournot::read_config_file(options.config_path);
  for (const auto& [key, value] : options.overrides) {
    values[key] = value;  // flags win over file values
  }
  const cournot::ExperimentConfig config = cournot::build_config(values);
  const cournot::ResultTable table = cournot::run_experiment(config);
  const std::string path =
      config.out.empty() ? config.default_output_path() : config.out;
  cournot::write_table_to_file(table, path, config.format);
  std::cerr << "wrote " << table.rows.size() << " rows to " << path << "\n";
  return 0;
}

int analyze_command(const AnalyzeOptions& options) {
  cournot::LevelSpec spec;
  spec.k = options.k;
  if (options.delta == "inf") {
    spec.delta = cournot::LevelSpec::kInfiniteDelta;
  } else {
    try {
      spec.delta = std::stoi(options.delta);
    } catch (const std::exception&) {
      throw cournot::ConfigError("delta: expected an integer or 'inf', got '" +
                                 options.delta + "'");
    }
  }
  cournot::OutputFormat format;
  if (options.format == "csv") {
    format = cournot::OutputFormat::Csv;
  } else if (options.format == "json") {
    format = cournot::OutputFormat::Json;
  } else {
    throw cournot::ConfigError("format: expected csv or json, got '" +
                               options.format + "'");
  }
  const cournot::MarketParams params(options.a, options.b, options.c,
                                     options.m, options.f);
  const cournot::AnalysisReport report =
      cournot::analyze(params, spec, options.tau, options.k_max);
  const cournot::ResultTable table = cournot::analysis_table(report);
  if (options.out.empty()) {
    cournot::write_table(table, std::cout, format);
  } else {
    cournot::write_table_to_file(table, options.out, format);
    std::cerr << "wrote report to " << options.out << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-supplier Cournot electricity market under level-k reasoning"};
  app.require_subcommand(1);

  RunOptions run_options;
  CLI::App* run = app.add_subcommand(
      "run", "Run a configured experiment sweep and write its table");
  run->add_option("config", run_options.config_path, "Config file (key = value)")
      ->required();
  // Any config key can be overridden from the command line; overrides win.
  for (const std::string key :
       {"experiment", "a", "b", "c", "m", "f_values", "k_values",
        "delta_values", "level_sum", "tau", "k_max", "out", "format"}) {
    run->add_option_function<std::string>(
        "--" + key,
        [&run_options, key](const std::string& value) {
          run_options.overrides[key] = value;
        },
        "Override config key '" + key + "'");
  }

  AnalyzeOptions analyze_options;
  CLI::App* analyze = app.add_subcommand(
      "analyze", "Report quantities, payoffs, PoR and planner strategies "
                 "for one market instance");
  analyze->add_option("--a", analyze_options.a, "Demand slope");
  analyze->add_option("--b", analyze_options.b, "Demand intercept");
  analyze->add_option("--c", analyze_options.c, "Marginal cost");
  analyze->add_option("--m", analyze_options.m, "Utility constant");
  analyze->add_option("--f", analyze_options.f, "Flow capacity");
  analyze->add_option("--k", analyze_options.k,
                      "Rationality level of the self-interested firm");
  analyze->add_option("--delta", analyze_options.delta,
                      "Planner's relative level (integer or 'inf')");
  analyze->add_option("--tau", analyze_options.tau,
                      "Poisson mean for the stochastic strategy prior");
  analyze->add_option("--kmax", analyze_options.k_max,
                      "Poisson truncation level");
  analyze->add_option("--out", analyze_options.out,
                      "Output file (default: stdout)");
  analyze->add_option("--format", analyze_options.format, "csv or json");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) return run_command(run_options);
    return analyze_command(analyze_options);
  } catch (const std::exception& error) {
    std::cerr << "error: " << error.what() << "\n";
    return 1;
  }
}
