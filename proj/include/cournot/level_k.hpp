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

#include <limits>

#include "cournot/market.hpp"

namespace cournot {

enum class Firm { SelfInterested, Planner };

/// Rationality levels of the two firms: the self-interested firm reasons at
/// level k, the planner at level k + delta. delta == kInfiniteDelta means the
/// planner plays its Nash-equilibrium quantity (the level-infinity behavior).
struct LevelSpec {
  static constexpr int kInfiniteDelta = std::numeric_limits<int>::max();

  int k = 0;
  int delta = 0;

  bool planner_at_nash() const { return delta == kInfiniteDelta; }
  int planner_level() const { return k + delta; }  // finite delta only
  bool valid() const {
    return k >= 0 && (planner_at_nash() || delta >= -k);
  }
};

/// Closed-form level arguments above this are evaluated as their k -> infinity
/// limit (the Nash quantities). The difference drops below double resolution
/// at far smaller k; the cap only bounds the 2^(k/2) scale factors.
inline constexpr int kMaxClosedFormLevel = 1024;

/// Level-0 anchor: the midpoint of each firm's feasible interval,
/// (b - c)/(2a) for the self-interested firm and f/2 for the planner.
double level0(Firm firm, const MarketParams& params);

/// Level-k quantity by running the recursion q_i^(k) = BR_i(q_j^(k-1))
/// from the level-0 anchors. Exact reference path, O(k) best-response calls.
double level_k_iterative(int k, Firm firm, const MarketParams& params);

/// Level-k quantity from the parity-split closed forms. Agrees with
/// level_k_iterative for every k; O(1) up to exponentiation.
double level_k_closed(int k, Firm firm, const MarketParams& params);

/// Level-k quantity when the planner best-responds under the designed
/// utility with cooperation level gamma (the self-interested firm remains a
/// profit maximizer). Dispatches on gamma < -1, -1 <= gamma <= 1, gamma > 1;
/// each branch is the closed form of the corresponding recursion, with the
/// 0^0 = 1 convention so that k = 0 recovers the level-0 anchors.
/// Reduces to level_k_closed at gamma = 0.
double level_k_gamma(int k, double gamma, Firm firm,
                     const MarketParams& params);

/// The unique Nash equilibrium ((b - c)/(2a) - f/2, f); also the limit of the
/// level-k behaviors as k grows.
StrategyProfile nash_equilibrium(const MarketParams& params);

}  // namespace cournot
