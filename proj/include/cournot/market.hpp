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

namespace cournot {

/// Constants of one market instance: quadratic consumer utility
/// u(q) = -(a/2) q^2 + b q + m, identical linear production cost c per unit,
/// and the flow capacity f that caps the planner's output (0 <= q_planner <= f).
///
/// Validity is enforced once at construction: a > 0, b > 0, 0 <= c < b,
/// m >= 0 and 0 < f <= (b - c)/a. Every other function in this library
/// assumes a valid MarketParams.
struct MarketParams {
  double a;
  double b;
  double c;
  double m;
  double f;

  MarketParams(double a, double b, double c, double m, double f);

  /// Total quantity at which price equals marginal cost, (b - c)/a.
  /// Welfare is maximal exactly when total production hits this value.
  double efficient_total() const { return (b - c) / a; }

  /// The self-interested firm's monopoly quantity, (b - c)/(2a).
  double monopoly_quantity() const { return 0.5 * efficient_total(); }

  /// Normalized capacity beta = f / ((b - c)/a), in (0, 1].
  double beta() const { return f / efficient_total(); }
};

/// A pair of production quantities. Market clearing is structural: the
/// cleared demand is always total() = q_self + q_planner, never stored.
struct StrategyProfile {
  double q_self;     // quantity produced by the self-interested firm
  double q_planner;  // quantity produced by the benevolent social planner

  double total() const { return q_self + q_planner; }
};

/// Market price at demand q_d: p = b - a q_d. May be negative above b/a;
/// callers bound quantities.
double inverse_demand(double q_d, const MarketParams& params);

/// Social welfare W = u(q_self + q_planner) - c (q_self + q_planner).
/// This is also the planner's true payoff.
double welfare(const StrategyProfile& profile, const MarketParams& params);

/// The self-interested firm's profit (p - c) q_self.
double profit_self(const StrategyProfile& profile, const MarketParams& params);

/// Distance from the efficient total, |(b - c)/a - q_self - q_planner|.
/// Welfare is a strictly decreasing function of this distance:
/// W = -(a/2) d^2 + (b - c)^2/(2a) + m.
double welfare_distance(const StrategyProfile& profile,
                        const MarketParams& params);

/// The planner's designed utility U = W + gamma * profit_self, where gamma
/// is the cooperation level (gamma < 0: fight the self-interested firm,
/// gamma > 0: cooperate with it). Reduces to welfare at gamma = 0.
double designed_utility(const StrategyProfile& profile, double gamma,
                        const MarketParams& params);

}  // namespace cournot
