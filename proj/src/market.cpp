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

#include "cournot/market.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace cournot {

MarketParams::MarketParams(double a, double b, double c, double m, double f)
    : a(a), b(b), c(c), m(m), f(f) {
  if (!(std::isfinite(a) && std::isfinite(b) && std::isfinite(c) &&
        std::isfinite(m) && std::isfinite(f))) {
    throw std::invalid_argument("MarketParams: all parameters must be finite");
  }
  if (!(a > 0.0)) {
    throw std::invalid_argument("MarketParams: demand slope a must be > 0");
  }
  if (!(b > 0.0)) {
    throw std::invalid_argument("MarketParams: demand intercept b must be > 0");
  }
  if (!(c >= 0.0 && c < b)) {
    throw std::invalid_argument(
        "MarketParams: marginal cost c must satisfy 0 <= c < b");
  }
  if (!(m >= 0.0)) {
    throw std::invalid_argument("MarketParams: utility constant m must be >= 0");
  }
  if (!(f > 0.0 && f <= efficient_total())) {
    throw std::invalid_argument(
        "MarketParams: flow capacity f must satisfy 0 < f <= (b - c)/a, got " +
        std::to_string(f));
  }
}

double inverse_demand(double q_d, const MarketParams& params) {
  return params.b - params.a * q_d;
}

double welfare(const StrategyProfile& profile, const MarketParams& params) {
  const double q_d = profile.total();
  const double utility = -0.5 * params.a * q_d * q_d + params.b * q_d + params.m;
  return utility - params.c * q_d;
}

double profit_self(const StrategyProfile& profile, const MarketParams& params) {
  return (inverse_demand(profile.total(), params) - params.c) * profile.q_self;
}

double welfare_distance(const StrategyProfile& profile,
                        const MarketParams& params) {
  return std::fabs(params.efficient_total() - profile.total());
}

double designed_utility(const StrategyProfile& profile, double gamma,
                        const MarketParams& params) {
  return welfare(profile, params) + gamma * profit_self(profile, params);
}

}  // namespace cournot
