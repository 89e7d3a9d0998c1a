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

#include "cournot/level_k.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cournot/best_response.hpp"

namespace cournot {
namespace {

void require_level(int k) {
  if (k < 0) {
    throw std::invalid_argument("rationality level k must be >= 0");
  }
}

}  // namespace

double level0(Firm firm, const MarketParams& params) {
  return firm == Firm::SelfInterested ? params.monopoly_quantity()
                                      : 0.5 * params.f;
}

double level_k_iterative(int k, Firm firm, const MarketParams& params) {
  require_level(k);
  double q_self = level0(Firm::SelfInterested, params);
  double q_planner = level0(Firm::Planner, params);
  for (int level = 1; level <= k; ++level) {
    const double next_self = br_self(q_planner, params);
    const double next_planner = br_planner(q_self, params);
    q_self = next_self;
    q_planner = next_planner;
  }
  return firm == Firm::SelfInterested ? q_self : q_planner;
}

double level_k_closed(int k, Firm firm, const MarketParams& params) {
  require_level(k);
  if (k == 0) {
    return level0(firm, params);
  }
  const double total = params.efficient_total();
  const double half = 0.5 * total;
  const double nash_self = half - 0.5 * params.f;
  if (k > kMaxClosedFormLevel) {
    // Far beyond double resolution of the geometric terms; return the limit.
    return firm == Firm::SelfInterested ? nash_self : params.f;
  }
  if (firm == Firm::SelfInterested) {
    if (k % 2 == 0) {
      return std::max(std::ldexp(half, -k / 2), nash_self);
    }
    return std::max(std::ldexp(total - 0.5 * params.f, -(k + 1) / 2),
                    nash_self);
  }
  if (k % 2 == 0) {
    return std::min(total - std::ldexp(total - 0.5 * params.f, -k / 2),
                    params.f);
  }
  return std::min(total - std::ldexp(total, -(k + 1) / 2), params.f);
}

double level_k_gamma(int k, double gamma, Firm firm,
                     const MarketParams& params) {
  require_level(k);
  if (k == 0) {
    return level0(firm, params);
  }
  const double total = params.efficient_total();
  const double half = 0.5 * total;
  const double residual = total - 0.5 * params.f;  // (b - c)/a - f/2

  if (gamma < -1.0) {
    // The planner's best response degenerates to f, so the levels settle
    // after two rounds.
    if (firm == Firm::SelfInterested) {
      if (k == 1) return half - 0.25 * params.f;
      return half - 0.5 * params.f;
    }
    return params.f;  // k >= 1
  }

  const double base = 0.5 * (1.0 + gamma);
  if (gamma <= 1.0) {
    if (k % 2 == 0) {
      const double scale = std::pow(base, k / 2);
      if (firm == Firm::SelfInterested) {
        return std::max(scale * half, half - 0.5 * params.f);
      }
      return std::min(total - scale * residual, params.f);
    }
    const double scale_self = std::pow(base, (k - 1) / 2);
    if (firm == Firm::SelfInterested) {
      return std::max(0.5 * scale_self * residual, half - 0.5 * params.f);
    }
    const double scale_planner = std::pow(base, (k + 1) / 2);
    return std::min((1.0 - scale_planner) * total, params.f);
  }

  // gamma > 1: the planner chases the self-interested firm's profit.
  if (k % 2 == 0) {
    if (firm == Firm::SelfInterested) {
      return half;
    }
    const double scale = std::pow(base, k / 2);
    return std::max(total - scale * residual, 0.0);
  }
  if (firm == Firm::SelfInterested) {
    const double scale_self = std::pow(base, (k - 1) / 2);
    return std::min(0.5 * scale_self * residual, half);
  }
  return 0.0;
}

StrategyProfile nash_equilibrium(const MarketParams& params) {
  return {params.monopoly_quantity() - 0.5 * params.f, params.f};
}

}  // namespace cournot
