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

#include "cournot/experiments.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cournot/planner_strategies.hpp"
#include "cournot/utility_design.hpp"
#include "cournot/welfare_analysis.hpp"

namespace cournot {
namespace {

constexpr int kInf = LevelSpec::kInfiniteDelta;

std::string trim(const std::string& text) {
  const auto begin = text.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  const auto end = text.find_last_not_of(" \t\r\n");
  return text.substr(begin, end - begin + 1);
}

double parse_double(const std::string& key, const std::string& value) {
  double parsed = 0.0;
  const char* first = value.data();
  const char* last = value.data() + value.size();
  const auto [ptr, ec] = std::from_chars(first, last, parsed);
  if (ec != std::errc{} || ptr != last) {
    throw ConfigError(key + ": expected a number, got '" + value + "'");
  }
  return parsed;
}

int parse_int(const std::string& key, const std::string& value) {
  int parsed = 0;
  const char* first = value.data();
  const char* last = value.data() + value.size();
  const auto [ptr, ec] = std::from_chars(first, last, parsed);
  if (ec != std::errc{} || ptr != last) {
    throw ConfigError(key + ": expected an integer, got '" + value + "'");
  }
  return parsed;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string::size_type start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    parts.push_back(trim(text.substr(start, pos - start)));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return parts;
}

// Either an explicit comma list "0.3,0.5,0.7" or a range "lo:hi:n".
std::vector<double> parse_double_list(const std::string& key,
                                      const std::string& value) {
  std::vector<double> values;
  if (value.find(':') != std::string::npos) {
    const auto parts = split(value, ':');
    if (parts.size() != 3) {
      throw ConfigError(key + ": range form must be lo:hi:count");
    }
    const double lo = parse_double(key, parts[0]);
    const double hi = parse_double(key, parts[1]);
    const int count = parse_int(key, parts[2]);
    if (count < 2 || !(lo < hi)) {
      throw ConfigError(key + ": range form needs lo < hi and count >= 2");
    }
    for (int i = 0; i < count; ++i) {
      // Endpoints are taken verbatim so a grid ending at (b - c)/a stays
      // inside the feasible range.
      values.push_back(i + 1 == count ? hi : lo + i * (hi - lo) / (count - 1));
    }
  } else {
    for (const auto& part : split(value, ',')) {
      values.push_back(parse_double(key, part));
    }
  }
  return values;
}

// Either "1,2,3" (with "inf" allowed when permitted) or an inclusive
// integer range "lo:hi".
std::vector<int> parse_int_list(const std::string& key,
                                const std::string& value, bool allow_inf) {
  std::vector<int> values;
  if (value.find(':') != std::string::npos) {
    const auto parts = split(value, ':');
    if (parts.size() != 2) {
      throw ConfigError(key + ": range form must be lo:hi");
    }
    const int lo = parse_int(key, parts[0]);
    const int hi = parse_int(key, parts[1]);
    if (lo > hi) {
      throw ConfigError(key + ": range form needs lo <= hi");
    }
    for (int i = lo; i <= hi; ++i) values.push_back(i);
  } else {
    for (const auto& part : split(value, ',')) {
      if (allow_inf && part == "inf") {
        values.push_back(kInf);
      } else {
        values.push_back(parse_int(key, part));
      }
    }
  }
  return values;
}

template <typename T>
void sort_unique(std::vector<T>& values) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
}

std::vector<double> default_f_grid(double efficient_total, int count = 15) {
  std::vector<double> values;
  for (int i = 1; i <= count; ++i) {
    values.push_back(efficient_total * i / count);
  }
  return values;
}

std::vector<int> int_range(int lo, int hi) {
  std::vector<int> values;
  for (int i = lo; i <= hi; ++i) values.push_back(i);
  return values;
}

Cell num(double value) { return Cell{value}; }
Cell integer(long long value) { return Cell{value}; }

Cell delta_cell(int delta) {
  if (delta == kInf) return Cell{std::string("inf")};
  return Cell{static_cast<long long>(delta)};
}

std::string format_double(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.12g", value);
  return buffer;
}

void append_market_cells(std::vector<Cell>& row, const ExperimentConfig& cfg) {
  row.push_back(num(cfg.a));
  row.push_back(num(cfg.b));
  row.push_back(num(cfg.c));
  row.push_back(num(cfg.m));
}

double planner_quantity(int k, int delta, const MarketParams& params) {
  return delta == kInf ? params.f
                       : level_k_closed(k + delta, Firm::Planner, params);
}

ResultTable run_production_vs_f(const ExperimentConfig& cfg) {
  ResultTable table;
  table.columns = {"a", "b", "c", "m", "k", "delta", "f", "q_self", "q_planner"};
  for (int k : cfg.k_values) {
    for (int delta : cfg.delta_values) {
      if (delta != kInf && delta < -k) continue;
      for (double f : cfg.f_values) {
        const MarketParams params = cfg.market_at(f);
        std::vector<Cell> row;
        append_market_cells(row, cfg);
        row.push_back(integer(k));
        row.push_back(delta_cell(delta));
        row.push_back(num(f));
        row.push_back(num(level_k_closed(k, Firm::SelfInterested, params)));
        row.push_back(num(planner_quantity(k, delta, params)));
        table.rows.push_back(std::move(row));
      }
    }
  }
  return table;
}

ResultTable run_por_vs_f(const ExperimentConfig& cfg) {
  ResultTable table;
  table.columns = {"a", "b", "c", "m", "k", "delta", "f", "q_planner", "por"};
  for (int k : cfg.k_values) {
    for (int delta : cfg.delta_values) {
      if (delta != kInf && delta < -k) continue;
      for (double f : cfg.f_values) {
        const MarketParams params = cfg.market_at(f);
        std::vector<Cell> row;
        append_market_cells(row, cfg);
        row.push_back(integer(k));
        row.push_back(delta_cell(delta));
        row.push_back(num(f));
        row.push_back(num(planner_quantity(k, delta, params)));
        row.push_back(num(price_of_rationality({k, delta}, params)));
        table.rows.push_back(std::move(row));
      }
    }
  }
  return table;
}

ResultTable run_welfare_vs_delta(const ExperimentConfig& cfg) {
  ResultTable table;
  table.columns = {"a", "b", "c", "m", "f", "k", "delta", "welfare"};
  for (int k : cfg.k_values) {
    for (double f : cfg.f_values) {
      const MarketParams params = cfg.market_at(f);
      for (int delta : cfg.delta_values) {
        if (delta != kInf && delta < -k) continue;
        std::vector<Cell> row;
        append_market_cells(row, cfg);
        row.push_back(num(f));
        row.push_back(integer(k));
        row.push_back(delta_cell(delta));
        row.push_back(num(level_k_performance({k, delta}, params)));
        table.rows.push_back(std::move(row));
      }
    }
  }
  return table;
}

ResultTable run_fixed_sum_levels(const ExperimentConfig& cfg) {
  ResultTable table;
  table.columns = {"a", "b", "c", "m", "level_sum", "f", "k", "delta", "welfare"};
  for (int k : cfg.k_values) {
    if (k == kInf || k > cfg.level_sum) continue;  // planner level must be >= 0
    const int delta = cfg.level_sum - 2 * k;
    for (double f : cfg.f_values) {
      const MarketParams params = cfg.market_at(f);
      std::vector<Cell> row;
      append_market_cells(row, cfg);
      row.push_back(integer(cfg.level_sum));
      row.push_back(num(f));
      row.push_back(integer(k));
      row.push_back(delta_cell(delta));
      row.push_back(num(level_k_performance({k, delta}, params)));
      table.rows.push_back(std::move(row));
    }
  }
  return table;
}

ResultTable run_por_region(const ExperimentConfig& cfg) {
  ResultTable table;
  table.columns = {"k", "delta", "beta_lower", "beta_upper"};
  for (int k : cfg.k_values) {
    for (int delta : cfg.delta_values) {
      if (k + delta <= 0) continue;
      const PorRegion region = por_lt_one_region(k, delta);
      table.rows.push_back({integer(k), delta_cell(delta), num(region.lower),
                            num(region.upper)});
    }
  }
  return table;
}

ResultTable run_value_of_information(const ExperimentConfig& cfg) {
  ResultTable table;
  table.columns = {"a",         "b",           "c",        "m",
                   "tau",       "k_max",       "f",        "k",
                   "q_optimal", "q_stochastic", "q_robust",
                   "vci_stochastic", "vci_robust", "evii"};
  const RationalityDistribution prior =
      RationalityDistribution::truncated_poisson(cfg.tau, cfg.k_max);
  for (double f : cfg.f_values) {
    const MarketParams params = cfg.market_at(f);
    const double q_stochastic = stochastic_strategy(prior, params);
    const double q_robust = robust_strategy(params);
    const double evii =
        expected_value_of_incomplete_information(prior, params);
    for (int k : cfg.k_values) {
      std::vector<Cell> row;
      append_market_cells(row, cfg);
      row.push_back(num(cfg.tau));
      row.push_back(integer(cfg.k_max));
      row.push_back(num(f));
      row.push_back(integer(k));
      row.push_back(num(optimal_strategy(k, params)));
      row.push_back(num(q_stochastic));
      row.push_back(num(q_robust));
      row.push_back(num(value_of_complete_information(k, q_stochastic, params)));
      row.push_back(num(value_of_complete_information(k, q_robust, params)));
      row.push_back(num(evii));
      table.rows.push_back(std::move(row));
    }
  }
  return table;
}

ResultTable run_optimal_gamma(const ExperimentConfig& cfg) {
  ResultTable table;
  table.columns = {"a", "b", "c", "m", "k", "f", "gamma_star"};
  for (int k : cfg.k_values) {
    for (double f : cfg.f_values) {
      const MarketParams params = cfg.market_at(f);
      std::vector<Cell> row;
      append_market_cells(row, cfg);
      row.push_back(integer(k));
      row.push_back(num(f));
      row.push_back(num(optimal_cooperation_level(k, params)));
      table.rows.push_back(std::move(row));
    }
  }
  return table;
}

ResultTable run_por_with_design(const ExperimentConfig& cfg) {
  ResultTable table;
  table.columns = {"a", "b", "c", "m", "k", "f", "gamma_star", "welfare", "por"};
  for (int k : cfg.k_values) {
    for (double f : cfg.f_values) {
      const MarketParams params = cfg.market_at(f);
      const double gamma_star = optimal_cooperation_level(k, params);
      const double designed = equal_level_welfare(k, gamma_star, params);
      std::vector<Cell> row;
      append_market_cells(row, cfg);
      row.push_back(integer(k));
      row.push_back(num(f));
      row.push_back(num(gamma_star));
      row.push_back(num(designed));
      row.push_back(num(equilibrium_performance(params) / designed));
      table.rows.push_back(std::move(row));
    }
  }
  return table;
}

void write_csv(const ResultTable& table, std::ostream& out) {
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    if (i > 0) out << ',';
    out << table.columns[i];
  }
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i > 0) out << ',';
      if (const auto* d = std::get_if<double>(&row[i])) {
        out << format_double(*d);
      } else if (const auto* n = std::get_if<long long>(&row[i])) {
        out << *n;
      } else {
        out << std::get<std::string>(row[i]);
      }
    }
    out << '\n';
  }
}

void write_json(const ResultTable& table, std::ostream& out) {
  nlohmann::ordered_json records = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json record;
    for (std::size_t i = 0; i < row.size(); ++i) {
      const std::string& column = table.columns[i];
      if (const auto* d = std::get_if<double>(&row[i])) {
        if (std::isnan(*d)) {
          record[column] = nullptr;
        } else {
          record[column] = *d;
        }
      } else if (const auto* n = std::get_if<long long>(&row[i])) {
        record[column] = *n;
      } else {
        record[column] = std::get<std::string>(row[i]);
      }
    }
    records.push_back(std::move(record));
  }
  out << records.dump(2) << '\n';
}

}  // namespace

Experiment experiment_from_name(const std::string& name) {
  if (name == "production_vs_f") return Experiment::ProductionVsF;
  if (name == "por_vs_f") return Experiment::PorVsF;
  if (name == "welfare_vs_delta") return Experiment::WelfareVsDelta;
  if (name == "fixed_sum_levels") return Experiment::FixedSumLevels;
  if (name == "por_region") return Experiment::PorRegion;
  if (name == "value_of_information") return Experiment::ValueOfInformation;
  if (name == "optimal_gamma") return Experiment::OptimalGamma;
  if (name == "por_with_design") return Experiment::PorWithDesign;
  throw ConfigError("experiment: unknown name '" + name + "'");
}

std::string experiment_name(Experiment experiment) {
  switch (experiment) {
    case Experiment::ProductionVsF: return "production_vs_f";
    case Experiment::PorVsF: return "por_vs_f";
    case Experiment::WelfareVsDelta: return "welfare_vs_delta";
    case Experiment::FixedSumLevels: return "fixed_sum_levels";
    case Experiment::PorRegion: return "por_region";
    case Experiment::ValueOfInformation: return "value_of_information";
    case Experiment::OptimalGamma: return "optimal_gamma";
    case Experiment::PorWithDesign: return "por_with_design";
  }
  throw std::logic_error("unreachable experiment name");
}

std::string ExperimentConfig::default_output_path() const {
  return experiment_name(experiment) +
         (format == OutputFormat::Csv ? ".csv" : ".json");
}

ConfigMap parse_config_text(std::istream& text) {
  ConfigMap values;
  std::string line;
  int line_number = 0;
  while (std::getline(text, line)) {
    ++line_number;
    const auto comment = line.find('#');
    if (comment != std::string::npos) line.erase(comment);
    const std::string trimmed = trim(line);
    if (trimmed.empty()) continue;
    const auto eq = trimmed.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("config line " + std::to_string(line_number) +
                        ": expected 'key = value'");
    }
    const std::string key = trim(trimmed.substr(0, eq));
    const std::string value = trim(trimmed.substr(eq + 1));
    if (key.empty()) {
      throw ConfigError("config line " + std::to_string(line_number) +
                        ": empty key");
    }
    values[key] = value;
  }
  return values;
}

ConfigMap read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot read config file: " + path);
  }
  return parse_config_text(in);
}

ExperimentConfig build_config(const ConfigMap& values) {
  ExperimentConfig cfg;
  const auto it = values.find("experiment");
  if (it == values.end()) {
    throw ConfigError("experiment: missing (required)");
  }
  cfg.experiment = experiment_from_name(it->second);

  for (const auto& [key, value] : values) {
    if (key == "experiment") continue;
    if (key == "a") cfg.a = parse_double(key, value);
    else if (key == "b") cfg.b = parse_double(key, value);
    else if (key == "c") cfg.c = parse_double(key, value);
    else if (key == "m") cfg.m = parse_double(key, value);
    else if (key == "f_values") cfg.f_values = parse_double_list(key, value);
    else if (key == "k_values") cfg.k_values = parse_int_list(key, value, false);
    else if (key == "delta_values")
      cfg.delta_values = parse_int_list(key, value, true);
    else if (key == "level_sum") cfg.level_sum = parse_int(key, value);
    else if (key == "tau") cfg.tau = parse_double(key, value);
    else if (key == "k_max") cfg.k_max = parse_int(key, value);
    else if (key == "out") cfg.out = value;
    else if (key == "format") {
      if (value == "csv") cfg.format = OutputFormat::Csv;
      else if (value == "json") cfg.format = OutputFormat::Json;
      else throw ConfigError("format: expected csv or json, got '" + value + "'");
    } else {
      throw ConfigError(key + ": unknown config key");
    }
  }

  if (!(cfg.a > 0.0)) throw ConfigError("a: must be > 0");
  if (!(cfg.b > 0.0)) throw ConfigError("b: must be > 0");
  if (!(cfg.c >= 0.0 && cfg.c < cfg.b)) throw ConfigError("c: must satisfy 0 <= c < b");
  if (!(cfg.m >= 0.0)) throw ConfigError("m: must be >= 0");
  if (!(cfg.tau > 0.0)) throw ConfigError("tau: must be > 0");
  if (cfg.k_max < 0) throw ConfigError("k_max: must be >= 0");
  if (cfg.level_sum < 1) throw ConfigError("level_sum: must be >= 1");

  const double efficient = (cfg.b - cfg.c) / cfg.a;
  if (cfg.f_values.empty()) cfg.f_values = default_f_grid(efficient);
  if (cfg.k_values.empty()) {
    switch (cfg.experiment) {
      case Experiment::ProductionVsF:
      case Experiment::PorVsF: cfg.k_values = {1}; break;
      case Experiment::WelfareVsDelta: cfg.k_values = {4}; break;
      case Experiment::FixedSumLevels:
        cfg.k_values = int_range(1, cfg.level_sum - 1);
        break;
      case Experiment::PorRegion:
      case Experiment::PorWithDesign: cfg.k_values = int_range(1, 8); break;
      case Experiment::ValueOfInformation: cfg.k_values = {1, 2, 3}; break;
      case Experiment::OptimalGamma: cfg.k_values = int_range(1, 6); break;
    }
  }
  if (cfg.delta_values.empty()) {
    switch (cfg.experiment) {
      case Experiment::ProductionVsF:
      case Experiment::PorVsF:
        cfg.delta_values = {-1, 0, 1, 2, kInf};
        break;
      case Experiment::WelfareVsDelta: cfg.delta_values = int_range(-4, 6); break;
      case Experiment::PorRegion: cfg.delta_values = {1, 2, 3}; break;
      default: cfg.delta_values = {0}; break;  // unused by the other sweeps
    }
  }

  sort_unique(cfg.f_values);
  sort_unique(cfg.k_values);
  sort_unique(cfg.delta_values);

  for (double f : cfg.f_values) {
    if (!(f > 0.0 && f <= efficient)) {
      throw ConfigError("f_values: f = " + format_double(f) +
                        " outside (0, (b - c)/a]");
    }
  }
  for (int k : cfg.k_values) {
    if (k < 0) throw ConfigError("k_values: levels must be >= 0");
  }
  const bool needs_positive_k = cfg.experiment == Experiment::OptimalGamma ||
                                cfg.experiment == Experiment::PorWithDesign;
  if (needs_positive_k) {
    for (int k : cfg.k_values) {
      if (k < 1) throw ConfigError("k_values: levels must be >= 1 here");
    }
  }
  if (cfg.experiment == Experiment::PorRegion) {
    for (int delta : cfg.delta_values) {
      if (delta == kInf || delta < 0) {
        throw ConfigError("delta_values: por_region needs finite delta >= 0");
      }
    }
  }
  return cfg;
}

ResultTable run_experiment(const ExperimentConfig& cfg) {
  ResultTable table;
  switch (cfg.experiment) {
    case Experiment::ProductionVsF: table = run_production_vs_f(cfg); break;
    case Experiment::PorVsF: table = run_por_vs_f(cfg); break;
    case Experiment::WelfareVsDelta: table = run_welfare_vs_delta(cfg); break;
    case Experiment::FixedSumLevels: table = run_fixed_sum_levels(cfg); break;
    case Experiment::PorRegion: table = run_por_region(cfg); break;
    case Experiment::ValueOfInformation:
      table = run_value_of_information(cfg);
      break;
    case Experiment::OptimalGamma: table = run_optimal_gamma(cfg); break;
    case Experiment::PorWithDesign: table = run_por_with_design(cfg); break;
  }
  if (table.rows.empty()) {
    throw ConfigError("sweep: no valid (k, delta) combinations to evaluate");
  }
  return table;
}

void write_table(const ResultTable& table, std::ostream& out,
                 OutputFormat format) {
  if (format == OutputFormat::Csv) {
    write_csv(table, out);
  } else {
    write_json(table, out);
  }
}

void write_table_to_file(const ResultTable& table, const std::string& path,
                         OutputFormat format) {
  std::ofstream out(path);
  if (!out) {
    throw IoError("cannot open output file: " + path);
  }
  write_table(table, out, format);
  out.flush();
  if (!out) {
    throw IoError("failed while writing output file: " + path);
  }
}

AnalysisReport analyze(const MarketParams& params, const LevelSpec& spec,
                       double tau, int k_max) {
  if (!spec.valid()) {
    throw std::invalid_argument(
        "analyze: k must be >= 0 and delta >= -k (or infinite)");
  }
  AnalysisReport report;
  report.a = params.a;
  report.b = params.b;
  report.c = params.c;
  report.m = params.m;
  report.f = params.f;
  report.spec = spec;
  report.tau = tau;
  report.k_max = k_max;
  report.q_self = level_k_closed(spec.k, Firm::SelfInterested, params);
  report.q_planner =
      spec.planner_at_nash()
          ? params.f
          : level_k_closed(spec.planner_level(), Firm::Planner, params);
  const StrategyProfile profile{report.q_self, report.q_planner};
  report.price = inverse_demand(profile.total(), params);
  report.profit = profit_self(profile, params);
  report.welfare_value = welfare(profile, params);
  report.distance = welfare_distance(profile, params);
  report.por = price_of_rationality(spec, params);
  report.q_optimal = optimal_strategy(spec.k, params);
  report.q_stochastic = stochastic_strategy(
      RationalityDistribution::truncated_poisson(tau, k_max), params);
  report.q_robust = robust_strategy(params);
  report.gamma_star = spec.k >= 1
                          ? optimal_cooperation_level(spec.k, params)
                          : std::numeric_limits<double>::quiet_NaN();
  return report;
}

ResultTable analysis_table(const AnalysisReport& report) {
  ResultTable table;
  table.columns = {"a",         "b",        "c",          "m",
                   "f",         "k",        "delta",      "q_self",
                   "q_planner", "price",    "profit_self", "welfare",
                   "distance",  "por",      "q_optimal",  "q_stochastic",
                   "q_robust",  "tau",      "k_max",      "gamma_star"};
  std::vector<Cell> row;
  row.push_back(num(report.a));
  row.push_back(num(report.b));
  row.push_back(num(report.c));
  row.push_back(num(report.m));
  row.push_back(num(report.f));
  row.push_back(integer(report.spec.k));
  row.push_back(delta_cell(report.spec.delta));
  row.push_back(num(report.q_self));
  row.push_back(num(report.q_planner));
  row.push_back(num(report.price));
  row.push_back(num(report.profit));
  row.push_back(num(report.welfare_value));
  row.push_back(num(report.distance));
  row.push_back(num(report.por));
  row.push_back(num(report.q_optimal));
  row.push_back(num(report.q_stochastic));
  row.push_back(num(report.q_robust));
  row.push_back(num(report.tau));
  row.push_back(integer(report.k_max));
  row.push_back(num(report.gamma_star));
  table.rows.push_back(std::move(row));
  return table;
}

}  // namespace cournot
