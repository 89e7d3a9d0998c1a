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

/// Welfare when both firms reason at the same level k and the planner
/// best-responds under the designed utility with cooperation level gamma.
double equal_level_welfare(int k, double gamma, const MarketParams& params);

/// A cooperation level maximizing equal_level_welfare(k, .) over all real
/// gamma, in closed form. Requires k >= 1; always lies in [-1, 1].
double optimal_cooperation_level(int k, const MarketParams& params);

/// For odd k: whether every gamma <= -1 attains the same (optimal) welfare
/// as optimal_cooperation_level(k); this happens when the capacity is small
/// enough that fighting hard cannot change the outcome. Requires odd k >= 1.
bool has_multiple_optima(int k, const MarketParams& params);

/// Price of rationality when the planner uses the optimal cooperation level;
/// at most 1 for every k >= 1 (designed play never underperforms the
/// equilibrium). Throws ZeroWelfareError if the designed welfare is zero
/// within 1e-12.
double por_with_design(int k, const MarketParams& params);

}  // namespace cournot
