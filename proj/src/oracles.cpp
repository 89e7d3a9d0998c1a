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

#include "cournot/oracles.hpp"

#include <stdexcept>
#include <vector>

#include "cournot/best_response.hpp"
#include "cournot/level_k.hpp"

namespace cournot::oracles {

GridSpec::GridSpec(double lo, double hi, int n) : lo(lo), hi(hi), n(n) {
  if (!(lo < hi)) {
    throw std::invalid_argument("GridSpec: lo must be < hi");
  }
  if (n < 2) {
    throw std::invalid_argument("GridSpec: n must be >= 2");
  }
}

GridResult grid_argmax(const std::function<double(double)>& objective,
                       const GridSpec& grid) {
  GridResult best{grid.point(0), objective(grid.point(0))};
  for (int i = 1; i < grid.n; ++i) {
    const double x = grid.point(i);
    const double value = objective(x);
    if (value > best.value) {
      best = {x, value};
    }
  }
  return best;
}

GridResult grid_maximin(const GridSpec& planner_grid, int level_lo,
                        int level_hi, const MarketParams& params) {
  if (level_lo < 0 || level_hi < level_lo) {
    throw std::invalid_argument("grid_maximin: bad level range");
  }
  // Candidate opponent quantities: the level range plus the limit point.
  std::vector<double> opponent;
  opponent.reserve(static_cast<std::size_t>(level_hi - level_lo) + 2);
  for (int k = level_lo; k <= level_hi; ++k) {
    opponent.push_back(level_k_iterative(k, Firm::SelfInterested, params));
  }
  opponent.push_back(params.monopoly_quantity() - 0.5 * params.f);

  const auto worst_case = [&](double q_planner) {
    double worst = welfare({opponent.front(), q_planner}, params);
    for (std::size_t i = 1; i < opponent.size(); ++i) {
      const double w = welfare({opponent[i], q_planner}, params);
      if (w < worst) worst = w;
    }
    return worst;
  };
  return grid_argmax(worst_case, planner_grid);
}

GammaSweepResult gamma_sweep(int k, const GridSpec& gamma_grid,
                             const MarketParams& params) {
  if (k < 0) {
    throw std::invalid_argument("gamma_sweep: k must be >= 0");
  }
  const auto welfare_at = [&](double gamma) {
    double q_self = level0(Firm::SelfInterested, params);
    double q_planner = level0(Firm::Planner, params);
    for (int level = 1; level <= k; ++level) {
      const double next_self = br_self(q_planner, params);
      const double next_planner = br_planner_gamma(q_self, gamma, params);
      q_self = next_self;
      q_planner = next_planner;
    }
    return welfare({q_self, q_planner}, params);
  };
  const GridResult best = grid_argmax(welfare_at, gamma_grid);
  return {best.x, best.value};
}

}  // namespace cournot::oracles
