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

#include "cournot/welfare_analysis.hpp"

#include <cmath>
#include <stdexcept>

namespace cournot {
namespace {

constexpr double kZeroWelfareTolerance = 1e-12;

StrategyProfile level_k_profile(const LevelSpec& spec,
                                const MarketParams& params) {
  if (!spec.valid()) {
    throw std::invalid_argument(
        "LevelSpec: k must be >= 0 and delta >= -k (or infinite)");
  }
  const double q_self = level_k_closed(spec.k, Firm::SelfInterested, params);
  const double q_planner =
      spec.planner_at_nash()
          ? params.f
          : level_k_closed(spec.planner_level(), Firm::Planner, params);
  return {q_self, q_planner};
}

}  // namespace

double level_k_performance(const LevelSpec& spec, const MarketParams& params) {
  return welfare(level_k_profile(spec, params), params);
}

double equilibrium_performance(const MarketParams& params) {
  return welfare(nash_equilibrium(params), params);
}

double price_of_rationality(const LevelSpec& spec, const MarketParams& params) {
  const double performance = level_k_performance(spec, params);
  if (std::fabs(performance) <= kZeroWelfareTolerance) {
    throw ZeroWelfareError("price_of_rationality: level-k welfare is zero");
  }
  return equilibrium_performance(params) / performance;
}

PorRegion por_lt_one_region(int k, int delta) {
  if (k < 0) {
    throw std::invalid_argument("por_lt_one_region: k must be >= 0");
  }
  if (delta < 0) {
    throw std::invalid_argument(
        "por_lt_one_region: delta must be >= 0 (PoR >= 1 for all delta < 0)");
  }
  if (k + delta <= 0) {
    throw std::invalid_argument("por_lt_one_region: k + delta must be > 0");
  }
  PorRegion region{0.0, 1.0, false};
  if (k % 2 == 0) {
    region.lower = 1.0 - std::ldexp(1.0, -k / 2);
    region.upper =
        delta <= 1 ? 1.0 : 1.0 - std::ldexp(1.0, -k / 2) / 3.0;
  } else {
    const double power = std::ldexp(1.0, (k + 1) / 2);  // 2^((k+1)/2)
    region.lower = 1.0 - 1.0 / (power - 1.0);
    if (delta == 0) {
      region.upper = 1.0 - 1.0 / (power + 1.0);
    } else if (delta <= 2) {
      region.upper = 1.0;
    } else {
      region.upper = 1.0 - 1.0 / (3.0 * power - 1.0);
    }
  }
  return region;
}

double TotalProductionPieces::total_at(double beta) const {
  const ProductionSegment& piece =
      beta <= t_zy ? low : (beta >= t_xy ? high : middle);
  return (piece.intercept + piece.slope * beta) * efficient_total;
}

TotalProductionPieces total_production_breakpoints(int k, int delta,
                                                   const MarketParams& params) {
  if (k < 0 || k % 2 != 0 || delta < 2) {
    throw std::invalid_argument(
        "total_production_breakpoints: requires even k >= 0 and delta >= 2");
  }
  const double s_mid = std::ldexp(1.0, -(k / 2 + 1));  // 1/2^(k/2+1)
  TotalProductionPieces pieces{};
  pieces.efficient_total = params.efficient_total();
  pieces.t_zy = 1.0 - std::ldexp(1.0, -k / 2);
  pieces.low = {0.5, 0.5};
  pieces.middle = {s_mid, 1.0};
  if ((k + delta) % 2 == 0) {
    const double w = std::ldexp(1.0, -(k + delta) / 2);  // 1/2^((k+delta)/2)
    pieces.t_xy = 1.0 - 1.0 / (std::ldexp(1.0, (k + delta) / 2 + 1) - 1.0);
    pieces.high = {1.0 - w + s_mid, 0.5 * w};
  } else {
    // Planner at an odd level: its unconstrained branch has no beta term,
    // so the high piece is flat and the threshold is where it meets y.
    const double u = std::ldexp(1.0, -(k + delta + 1) / 2);
    pieces.t_xy = 1.0 - u;
    pieces.high = {1.0 - u + s_mid, 0.0};
  }
  return pieces;
}

}  // namespace cournot
