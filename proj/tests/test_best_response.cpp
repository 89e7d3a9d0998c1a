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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "cournot/best_response.hpp"
#include "cournot/market.hpp"
#include "test_util.hpp"

using namespace cournot;
using cournot::testing::near;
using cournot::testing::study_params;

TEST_CASE("closed-form best responses at spot points") {
  const MarketParams p = study_params();
  CHECK(br_self(p.efficient_total(), p) == 0.0);
  CHECK(near(br_self(0.0, p), 0.375, 1e-15));
  CHECK(near(br_self(0.5, p), 0.125, 1e-15));

  CHECK(br_planner(p.efficient_total(), p) == 0.0);
  CHECK(br_planner(1.2, p) == 0.0);  // beyond saturation still clamps
  CHECK(near(br_planner(0.0, p), 0.5, 1e-15));  // interior 0.75 clipped to f
  CHECK(near(br_planner(0.375, p), 0.375, 1e-15));

  CHECK(br_planner_gamma(0.2, 0.0, p) == br_planner(0.2, p));
  CHECK(near(br_planner_gamma(0.375, 1.0, p), 0.0, 1e-15));
  for (double q_self : {0.0, 0.2, 0.5, 1.0}) {
    CHECK(br_planner_gamma(q_self, -1.5, p) == p.f);
    CHECK(br_planner_gamma(q_self, -8.0, p) == p.f);
  }
}

TEST_CASE("best responses maximize their payoffs on a grid") {
  const MarketParams p = study_params();
  const int kOuter = 200;
  const int kInner = 2001;
  const double q_max = p.b / p.a;
  for (int i = 0; i <= kOuter; ++i) {
    const double q_planner = p.f * i / kOuter;
    const double best = br_self(q_planner, p);
    const double best_profit = profit_self({best, q_planner}, p);
    for (int j = 0; j < kInner; ++j) {
      const double q = q_max * j / (kInner - 1);
      CHECK(best_profit >= profit_self({q, q_planner}, p) - 1e-9);
    }
  }
  for (int i = 0; i <= kOuter; ++i) {
    const double q_self = p.efficient_total() * i / kOuter;
    const double best_w = br_planner(q_self, p);
    const double best_welfare = welfare({q_self, best_w}, p);
    for (double gamma : {-2.0, -1.0, 0.0, 0.5, 1.0, 2.0}) {
      const double best_u = br_planner_gamma(q_self, gamma, p);
      const double best_utility = designed_utility({q_self, best_u}, gamma, p);
      for (int j = 0; j < kInner; ++j) {
        const double q = p.f * j / (kInner - 1);
        if (gamma == 0.0) {
          CHECK(best_welfare >= welfare({q_self, q}, p) - 1e-9);
        }
        CHECK(best_utility >= designed_utility({q_self, q}, gamma, p) - 1e-9);
      }
    }
  }
}

TEST_CASE("best responses are monotone and stay in the feasible box") {
  const MarketParams p = study_params(0.6);
  double previous_self = br_self(0.0, p);
  double previous_planner = br_planner(0.0, p);
  double previous_gamma = br_planner_gamma(0.0, 0.5, p);
  for (int i = 0; i <= 400; ++i) {
    const double q = 1.2 * i / 400;
    const double bs = br_self(std::min(q, p.f), p);
    CHECK(bs >= 0.0);
    CHECK(bs <= p.monopoly_quantity());
    CHECK(bs <= previous_self + 1e-15);
    previous_self = bs;

    const double bp = br_planner(q, p);
    CHECK(bp >= 0.0);
    CHECK(bp <= p.f);
    CHECK(bp <= previous_planner + 1e-15);
    previous_planner = bp;

    const double bg = br_planner_gamma(q, 0.5, p);
    CHECK(bg >= 0.0);
    CHECK(bg <= p.f);
    CHECK(bg <= previous_gamma + 1e-15);
    previous_gamma = bg;

    CHECK(br_planner_gamma(q, -1.25, p) == p.f);
  }
}
