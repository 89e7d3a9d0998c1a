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

#include "cournot/best_response.hpp"

#include <algorithm>

namespace cournot {

double br_self(double q_planner, const MarketParams& params) {
  const double interior =
      (params.b - params.c - params.a * q_planner) / (2.0 * params.a);
  return std::max(interior, 0.0);
}

double br_planner(double q_self, const MarketParams& params) {
  const double interior = (params.b - params.c - params.a * q_self) / params.a;
  return std::max(std::min(interior, params.f), 0.0);
}

double br_planner_gamma(double q_self, double gamma,
                        const MarketParams& params) {
  const double interior = params.efficient_total() - (1.0 + gamma) * q_self;
  return std::max(std::min(interior, params.f), 0.0);
}

}  // namespace cournot
