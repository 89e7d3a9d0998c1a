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

#pragma once

#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "cournot/level_k.hpp"
#include "cournot/market.hpp"

namespace cournot {

/// Invalid or inconsistent configuration; the message names the offending
/// field.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// File could not be read or written; the message names the path.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Experiment {
  ProductionVsF,
  PorVsF,
  WelfareVsDelta,
  FixedSumLevels,
  PorRegion,
  ValueOfInformation,
  OptimalGamma,
  PorWithDesign,
};

enum class OutputFormat { Csv, Json };

Experiment experiment_from_name(const std::string& name);
std::string experiment_name(Experiment experiment);

struct ExperimentConfig {
  Experiment experiment = Experiment::ProductionVsF;
  double a = 1.0;
  double b = 1.0;
  double c = 0.25;
  double m = 0.0;
  std::vector<double> f_values;           // sorted ascending
  std::vector<int> k_values;              // sorted ascending
  std::vector<int> delta_values;          // sorted, kInfiniteDelta last
  int level_sum = 7;                      // fixed_sum_levels only
  double tau = 1.5;                       // value_of_information only
  int k_max = 20;                         // value_of_information only
  std::string out;                        // empty: derived from experiment
  OutputFormat format = OutputFormat::Csv;

  MarketParams market_at(double f) const { return {a, b, c, m, f}; }
  std::string default_output_path() const;
};

/// Raw key = value pairs; later merged (command-line flags win) and turned
/// into a validated config.
using ConfigMap = std::map<std::string, std::string>;

/// Parses a plain-text config: one `key = value` per line, '#' comments.
ConfigMap parse_config_text(std::istream& text);
ConfigMap read_config_file(const std::string& path);

/// Validates the merged key/value map and fills experiment-specific
/// defaults for sweep fields that were not given.
ExperimentConfig build_config(const ConfigMap& values);

/// One table cell: integer, floating-point, or text (e.g. "inf" deltas).
using Cell = std::variant<long long, double, std::string>;

struct ResultTable {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

/// Computes the sweep table for the configured experiment. Rows carry the
/// full parameter tuple, are emitted in sorted sweep order, and depend on
/// nothing but the config, so identical configs yield identical tables.
ResultTable run_experiment(const ExperimentConfig& config);

void write_table(const ResultTable& table, std::ostream& out,
                 OutputFormat format);
void write_table_to_file(const ResultTable& table, const std::string& path,
                         OutputFormat format);

/// Single-instance report: realized quantities and payoffs for (k, delta),
/// plus the planner's three strategy recommendations and the optimal
/// cooperation level for k (NaN when k = 0, where no design is defined).
struct AnalysisReport {
  double a = 0.0, b = 0.0, c = 0.0, m = 0.0, f = 0.0;
  LevelSpec spec;
  double q_self = 0.0;
  double q_planner = 0.0;
  double price = 0.0;
  double profit = 0.0;
  double welfare_value = 0.0;
  double distance = 0.0;
  double por = 0.0;
  double q_optimal = 0.0;
  double q_stochastic = 0.0;  // under the truncated Poisson(tau, k_max) prior
  double q_robust = 0.0;
  double tau = 0.0;
  int k_max = 0;
  double gamma_star = 0.0;
};

AnalysisReport analyze(const MarketParams& params, const LevelSpec& spec,
                       double tau = 1.5, int k_max = 20);

/// The report as a one-row table (same formats as the experiments).
ResultTable analysis_table(const AnalysisReport& report);

}  // namespace cournot
