// Copyright 2026 The linguse Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <string>
#include <vector>

#include "linguse/aggregation.hpp"

namespace linguse {

/// Row-major alternatives x criteria reals.
struct WeightedValueMatrix {
  int alternatives = 0;
  int criteria = 0;
  std::vector<double> values;

  double at(int i, int j) const { return values[static_cast<std::size_t>(i) * criteria + j]; }
};

struct IdealSolutions {
  std::vector<double> positive;
  std::vector<double> negative;
};

struct ClosenessResult {
  std::vector<double> d_plus;
  std::vector<double> d_minus;
  std::vector<double> rc;
  std::vector<int> ranking;  // alternative indices, best first
};

/// v_ij = beta_ij * wc_j, absent cells as 0.
WeightedValueMatrix weighted_values(const UnifiedDecisionMatrix& matrix, const std::vector<double>& wc);

/// Column max / min; every criterion is a benefit.
IdealSolutions ideal_solutions(const WeightedValueMatrix& matrix);

/// Euclidean separations and RC = D- / (D+ + D-). A zero denominator means
/// every alternative sits on both ideals, so RC is 1. Ties keep declaration
/// order.
ClosenessResult separations_and_closeness(const WeightedValueMatrix& matrix, const IdealSolutions& ideals);

struct ScopedRanking {
  std::string scope;  // role id or "global"
  WeightedValueMatrix values;
  IdealSolutions ideals;
  ClosenessResult closeness;
};

/// One ranking per role matrix followed by the global one.
std::vector<ScopedRanking> rank_all(const std::vector<std::pair<std::string, UnifiedDecisionMatrix>>& roles,
                                    const UnifiedDecisionMatrix& global, const std::vector<double>& wc);

ScopedRanking rank_scope(const std::string& scope, const UnifiedDecisionMatrix& matrix, const std::vector<double>& wc);

}  // namespace linguse
