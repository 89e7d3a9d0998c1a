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

#include "cournot/market.hpp"

namespace cournot {

// Both payoffs are strictly concave in the firm's own quantity, so each best
// response is the unique maximizer: the unconstrained first-order point
// clamped to the feasible interval.

/// The self-interested firm's best response to the planner producing
/// q_planner: max{(b - c - a q_planner)/(2a), 0}. Maximizes profit_self
/// over q_self >= 0.
double br_self(double q_planner, const MarketParams& params);

/// The planner's best response to q_self under its true payoff (welfare):
/// max{min{(b - c - a q_self)/a, f}, 0}. Maximizes welfare over [0, f].
double br_planner(double q_self, const MarketParams& params);

/// The planner's best response under the designed utility with cooperation
/// level gamma: max{min{(b - c)/a - (1 + gamma) q_self, f}, 0}. Maximizes
/// designed_utility over [0, f]; reduces to br_planner at gamma = 0, and is
/// constantly f for gamma < -1 (given f <= (b - c)/a).
double br_planner_gamma(double q_self, double gamma,
                        const MarketParams& params);

}  // namespace cournot
