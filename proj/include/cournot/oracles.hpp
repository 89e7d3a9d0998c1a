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

#include <functional>

#include "cournot/market.hpp"

// Brute-force verifiers used by the test suites to check the closed forms.
// They stay deliberately dumb: uniform grids, exhaustive scans, and the
// iterative best-response recursion instead of any closed-form shortcut.
// Production code never calls into this namespace.

namespace cournot::oracles {

/// Uniform grid of n points on [lo, hi]: lo + i (hi - lo)/(n - 1).
struct GridSpec {
  double lo;
  double hi;
  int n;

  GridSpec(double lo, double hi, int n);
  double point(int i) const { return lo + i * (hi - lo) / (n - 1); }
};

struct GridResult {
  double x;
  double value;
};

/// Grid point maximizing the objective; ties break toward the smallest x.
GridResult grid_argmax(const std::function<double(double)>& objective,
                       const GridSpec& grid);

/// Exhaustive maximin: over the planner-quantity grid, maximize the minimum
/// welfare across opponent levels in [level_lo, level_hi] plus the
/// level-infinity limit point (b - c)/(2a) - f/2. Opponent quantities come
/// from the iterative recursion, not the closed forms.
GridResult grid_maximin(const GridSpec& planner_grid, int level_lo,
                        int level_hi, const MarketParams& params);

struct GammaSweepResult {
  double gamma;
  double welfare;
};

/// Exhaustive scan of equal-level welfare over a cooperation-level grid,
/// with the level-k pair rebuilt by iterating the two best responses from
/// the level-0 anchors. Ties break toward the smallest gamma.
GammaSweepResult gamma_sweep(int k, const GridSpec& gamma_grid,
                             const MarketParams& params);

}  // namespace cournot::oracles
