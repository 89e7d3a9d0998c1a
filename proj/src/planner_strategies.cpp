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

#include "cournot/planner_strategies.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cournot {
namespace {

constexpr double kMassSumTolerance = 1e-12;

}  // namespace

RationalityDistribution::RationalityDistribution(std::vector<Mass> masses)
    : masses_(std::move(masses)) {
  if (masses_.empty()) {
    throw std::invalid_argument("RationalityDistribution: no masses given");
  }
  std::sort(masses_.begin(), masses_.end(),
            [](const Mass& lhs, const Mass& rhs) { return lhs.level < rhs.level; });
  double sum = 0.0;
  int previous_level = -1;
  for (const Mass& mass : masses_) {
    if (mass.level < 0) {
      throw std::invalid_argument("RationalityDistribution: level must be >= 0");
    }
    if (mass.level == previous_level) {
      throw std::invalid_argument("RationalityDistribution: duplicate level");
    }
    if (!(mass.probability >= 0.0)) {
      throw std::invalid_argument(
          "RationalityDistribution: probabilities must be >= 0");
    }
    sum += mass.probability;
    previous_level = mass.level;
  }
  if (std::fabs(sum - 1.0) > kMassSumTolerance) {
    throw std::invalid_argument(
        "RationalityDistribution: probabilities must sum to 1");
  }
}

RationalityDistribution RationalityDistribution::degenerate(int level) {
  return RationalityDistribution({{level, 1.0}});
}

RationalityDistribution RationalityDistribution::truncated_poisson(double tau,
                                                                   int k_max) {
  if (!(tau > 0.0)) {
    throw std::invalid_argument("truncated_poisson: tau must be > 0");
  }
  if (k_max < 0) {
    throw std::invalid_argument("truncated_poisson: k_max must be >= 0");
  }
  std::vector<Mass> masses;
  masses.reserve(static_cast<std::size_t>(k_max) + 1);
  double weight = std::exp(-tau);  // tau^k e^-tau / k!, built up iteratively
  double total = 0.0;
  for (int k = 0; k <= k_max; ++k) {
    if (k > 0) weight *= tau / k;
    masses.push_back({k, weight});
    total += weight;
  }
  for (Mass& mass : masses) {
    mass.probability /= total;
  }
  return RationalityDistribution(std::move(masses));
}

double optimal_strategy(int k, const MarketParams& params) {
  if (k < 0) {
    throw std::invalid_argument("optimal_strategy: k must be >= 0");
  }
  return level_k_closed(k + 1, Firm::Planner, params);
}

double stochastic_strategy(const RationalityDistribution& dist,
                           const MarketParams& params) {
  const double expected_self = dist.expected([&](int level) {
    return level_k_closed(level, Firm::SelfInterested, params);
  });
  return std::min(params.efficient_total() - expected_self, params.f);
}

double robust_strategy(const MarketParams& params) {
  return level_k_closed(2, Firm::Planner, params);
}

double value_of_complete_information(int k, double strategy_q_planner,
                                     const MarketParams& params) {
  if (k < 0) {
    throw std::invalid_argument(
        "value_of_complete_information: k must be >= 0");
  }
  if (!(strategy_q_planner >= 0.0 && strategy_q_planner <= params.f)) {
    throw std::invalid_argument(
        "value_of_complete_information: strategy must lie in [0, f]");
  }
  const double q_self = level_k_closed(k, Firm::SelfInterested, params);
  const double best = optimal_strategy(k, params);
  return welfare({q_self, best}, params) -
         welfare({q_self, strategy_q_planner}, params);
}

double expected_value_of_incomplete_information(
    const RationalityDistribution& dist, const MarketParams& params) {
  const double q_stochastic = stochastic_strategy(dist, params);
  const double q_robust = robust_strategy(params);
  // Summing per-level differences keeps the result exactly zero when the two
  // strategies coincide (both clamped to f).
  return dist.expected([&](int level) {
    const double q_self = level_k_closed(level, Firm::SelfInterested, params);
    return welfare({q_self, q_stochastic}, params) -
           welfare({q_self, q_robust}, params);
  });
}

}  // namespace cournot
