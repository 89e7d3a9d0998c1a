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

#include <stdexcept>

#include "cournot/level_k.hpp"
#include "cournot/market.hpp"

namespace cournot {

/// Thrown when a welfare ratio would divide by a (near-)zero welfare.
class ZeroWelfareError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Open interval of normalized capacities beta = f a/(b - c) on which the
/// price of rationality is strictly below 1 for a given (k, delta). The
/// bounds are strict; behavior at the endpoints is not covered.
struct PorRegion {
  double lower;
  double upper;
  bool empty;  // never set for valid (k, delta); kept for table consumers
};

/// Welfare of the profile (q_self^(k), q_planner^(k+delta)) computed from the
/// closed forms; delta = infinity maps the planner to its Nash quantity f.
double level_k_performance(const LevelSpec& spec, const MarketParams& params);

/// Welfare at the Nash equilibrium.
double equilibrium_performance(const MarketParams& params);

/// Price of rationality: equilibrium welfare divided by level-k welfare.
/// Values above 1 mean the bounded-rational outcome underperforms the
/// equilibrium. Throws ZeroWelfareError if the level-k welfare is zero
/// within 1e-12.
double price_of_rationality(const LevelSpec& spec, const MarketParams& params);

/// The beta interval on which PoR(k, k + delta) < 1, by parity of k and the
/// delta case split. Requires k >= 0, delta >= 0 and k + delta > 0; delta < 0
/// always yields PoR >= 1 and is rejected.
PorRegion por_lt_one_region(int k, int delta);

/// One linear piece of total production as a function of beta, in units of
/// the efficient total: total(beta) = (intercept + slope * beta) * (b - c)/a.
struct ProductionSegment {
  double intercept;
  double slope;
};

/// Piecewise-linear description of q_self^(k) + q_planner^(k+delta) as a
/// function of beta, valid for even k and delta >= 2. Three pieces meet at
/// the thresholds t_zy <= t_xy; the low piece coincides with the Nash total.
struct TotalProductionPieces {
  double t_zy;
  double t_xy;
  ProductionSegment low;     // beta <= t_zy
  ProductionSegment middle;  // t_zy <= beta <= t_xy
  ProductionSegment high;    // beta >= t_xy
  double efficient_total;    // (b - c)/a scale factor

  /// Total production at normalized capacity beta, selecting the piece.
  double total_at(double beta) const;
};

/// Breakpoints and segments of the total-production piecewise function.
/// Requires even k >= 0 and delta >= 2 (the other cases reduce to the
/// por_lt_one_region intervals directly).
TotalProductionPieces total_production_breakpoints(int k, int delta,
                                                   const MarketParams& params);

}  // namespace cournot
