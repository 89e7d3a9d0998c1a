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

#include "cournot/utility_design.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cournot/level_k.hpp"
#include "cournot/welfare_analysis.hpp"

namespace cournot {

double equal_level_welfare(int k, double gamma, const MarketParams& params) {
  const StrategyProfile profile{
      level_k_gamma(k, gamma, Firm::SelfInterested, params),
      level_k_gamma(k, gamma, Firm::Planner, params)};
  return welfare(profile, params);
}

double optimal_cooperation_level(int k, const MarketParams& params) {
  if (k < 1) {
    throw std::invalid_argument("optimal_cooperation_level: k must be >= 1");
  }
  const double total = params.efficient_total();
  if (k % 2 == 0) {
    const double ratio = (total - params.f) / (total - 0.5 * params.f);
    return 2.0 * std::pow(ratio, 2.0 / k) - 1.0;
  }
  const double interior = -0.5 * params.f / total;
  const double boundary =
      2.0 * std::pow((total - params.f) / total, 2.0 / (k + 1)) - 1.0;
  return std::max(interior, boundary);
}

bool has_multiple_optima(int k, const MarketParams& params) {
  if (k < 1 || k % 2 == 0) {
    throw std::invalid_argument("has_multiple_optima: k must be odd and >= 1");
  }
  const double total = params.efficient_total();
  if (k == 1) {
    // At k = 1 any gamma <= -1 yields total production (b - c)/(2a) + 3f/4,
    // which matches the capped optimum exactly when f <= 2(b - c)/(3a).
    return params.f <= 2.0 * total / 3.0;
  }
  const double capped = std::pow((total - params.f) / (total - 0.5 * params.f),
                                 2.0 / (k - 1));
  const double interior = std::pow((total - params.f) / total, 2.0 / (k + 1));
  return capped >= interior;
}

double por_with_design(int k, const MarketParams& params) {
  const double designed =
      equal_level_welfare(k, optimal_cooperation_level(k, params), params);
  if (std::fabs(designed) <= 1e-12) {
    throw ZeroWelfareError("por_with_design: designed welfare is zero");
  }
  return equilibrium_performance(params) / designed;
}

}  // namespace cournot
