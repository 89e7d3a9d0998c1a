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

#include <vector>

#include "cournot/level_k.hpp"
#include "cournot/market.hpp"

namespace cournot {

/// Probability distribution over the self-interested firm's rationality
/// level K. Masses are validated at construction: probabilities are
/// non-negative, sum to 1 within 1e-12, and levels are distinct (stored
/// sorted ascending).
class RationalityDistribution {
 public:
  struct Mass {
    int level;
    double probability;
  };

  explicit RationalityDistribution(std::vector<Mass> masses);

  /// All probability on a single level.
  static RationalityDistribution degenerate(int level);

  /// Poisson(tau) masses truncated at k_max and renormalized. At the
  /// default k_max = 20 the truncation error for tau around 1.5 is far
  /// below double resolution.
  static RationalityDistribution truncated_poisson(double tau, int k_max = 20);

  const std::vector<Mass>& masses() const { return masses_; }

  /// Expectation of value_of_level(K) under the distribution.
  template <typename F>
  double expected(F&& value_of_level) const {
    double sum = 0.0;
    for (const Mass& mass : masses_) {
      sum += mass.probability * value_of_level(mass.level);
    }
    return sum;
  }

 private:
  std::vector<Mass> masses_;
};

/// With the opponent's level k known, the planner's best play is its
/// level-(k+1) behavior (best response to level k).
double optimal_strategy(int k, const MarketParams& params);

/// Planner quantity maximizing expected welfare when the opponent's level is
/// random with the given distribution: min{(b - c)/a - E[q_self^(K)], f}.
double stochastic_strategy(const RationalityDistribution& dist,
                           const MarketParams& params);

/// Planner quantity maximizing worst-case welfare over all opponent levels:
/// min{(b - c)/(2a) + f/4, f}, which is exactly its level-2 behavior.
double robust_strategy(const MarketParams& params);

/// Welfare gap between playing optimally against a known level k and playing
/// strategy_q_planner: W(q_self^(k), q_planner^(k+1)) - W(q_self^(k),
/// strategy_q_planner). Non-negative for any strategy_q_planner in [0, f].
double value_of_complete_information(int k, double strategy_q_planner,
                                     const MarketParams& params);

/// Expected welfare gap between the stochastic and robust strategies under
/// the given level distribution; non-negative since the stochastic strategy
/// maximizes the expectation. Exactly zero when both strategies clamp to f.
double expected_value_of_incomplete_information(
    const RationalityDistribution& dist, const MarketParams& params);

}  // namespace cournot
