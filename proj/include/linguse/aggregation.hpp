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

#include <optional>
#include <vector>

#include "linguse/linguistic.hpp"
#include "linguse/scoring.hpp"

namespace linguse {

/// Alternatives x criteria grid on S9 with possibly absent cells.
class UnifiedDecisionMatrix {
 public:
  UnifiedDecisionMatrix(int alternatives, int criteria);

  int alternatives() const noexcept { return alternatives_; }
  int criteria() const noexcept { return criteria_; }
  const std::optional<TwoTuple>& at(int alternative, int criterion) const;
  void set(int alternative, int criterion, std::optional<TwoTuple> value);

  friend bool operator==(const UnifiedDecisionMatrix&, const UnifiedDecisionMatrix&) = default;

 private:
  std::size_t index(int alternative, int criterion) const;
  int alternatives_;
  int criteria_;
  std::vector<std::optional<TwoTuple>> cells_;
};

/// Every present cell moved to S9; absent stays absent.
UnifiedDecisionMatrix unify_matrix(const IndividualDecisionMatrix& id);

/// Scales non-negative weights to sum 1. Throws DomainError on a zero total.
std::vector<double> normalize_weights(const std::vector<double>& raw);

/// WU_k for users that played the role, 0 for the rest, normalized. Throws
/// DomainError when nobody played it.
std::vector<double> role_user_weights(const std::vector<double>& wu, const std::vector<bool>& participated);

/// Cell-wise 2TWA of the users' unified matrices. A user whose cell is absent
/// drops out of that cell and the remaining weights are renormalized.
UnifiedDecisionMatrix aggregate_role(const std::vector<UnifiedDecisionMatrix>& uids, const std::vector<double>& weights);

/// Delta(sum_j beta_ij * wc_j) per alternative; absent cells count as 0.
std::vector<TwoTuple> ucd_vector(const UnifiedDecisionMatrix& matrix, const std::vector<double>& wc);

/// Role matrices combined with role weights, same per-cell absent rule as
/// aggregate_role.
UnifiedDecisionMatrix aggregate_global(const std::vector<UnifiedDecisionMatrix>& roles, const std::vector<double>& wr);

}  // namespace linguse
