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
#include "linguse/aggregation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "linguse/errors.hpp"

namespace linguse {

UnifiedDecisionMatrix::UnifiedDecisionMatrix(int alternatives, int criteria)
    : alternatives_(alternatives), criteria_(criteria) {
  if (alternatives < 0 || criteria < 0) throw DomainError("negative matrix dimension");
  cells_.resize(static_cast<std::size_t>(alternatives) * criteria);
}

std::size_t UnifiedDecisionMatrix::index(int alternative, int criterion) const {
  if (alternative < 0 || alternative >= alternatives_ || criterion < 0 || criterion >= criteria_) {
    throw DomainError("unified matrix cell (" + std::to_string(alternative) + ", " + std::to_string(criterion) +
                      ") out of range");
  }
  return static_cast<std::size_t>(alternative) * criteria_ + criterion;
}

const std::optional<TwoTuple>& UnifiedDecisionMatrix::at(int alternative, int criterion) const {
  return cells_[index(alternative, criterion)];
}

void UnifiedDecisionMatrix::set(int alternative, int criterion, std::optional<TwoTuple> value) {
  if (value && value->granularity() != unification_terms().granularity()) {
    throw DomainError("unified cells must be on S9");
  }
  cells_[index(alternative, criterion)] = value;
}

UnifiedDecisionMatrix unify_matrix(const IndividualDecisionMatrix& id) {
  const int m = static_cast<int>(id.criteria().size());
  UnifiedDecisionMatrix out(id.alternatives(), m);
  for (int i = 0; i < id.alternatives(); ++i) {
    for (int j = 0; j < m; ++j) {
      const auto& cell = id.at(i, j);
      if (!cell) continue;
      if (const auto* sus = std::get_if<UnbalancedSusValue>(&*cell)) {
        out.set(i, j, unify_to_s9(*sus));
      } else {
        out.set(i, j, transform_level(std::get<TwoTuple>(*cell), kUnificationLevel));
      }
    }
  }
  return out;
}

std::vector<double> normalize_weights(const std::vector<double>& raw) {
  double total = 0.0;
  for (double w : raw) {
    if (!(w >= 0.0) || !std::isfinite(w)) throw DomainError("weights must be finite and non-negative");
    total += w;
  }
  if (total <= 0.0) throw DomainError("weights sum to zero");
  std::vector<double> out;
  out.reserve(raw.size());
  for (double w : raw) out.push_back(w / total);
  return out;
}

std::vector<double> role_user_weights(const std::vector<double>& wu, const std::vector<bool>& participated) {
  if (wu.size() != participated.size()) {
    throw DomainError("role_user_weights: " + std::to_string(wu.size()) + " user weights but " +
                      std::to_string(participated.size()) + " participation flags");
  }
  std::vector<double> w(wu.size(), 0.0);
  for (std::size_t k = 0; k < wu.size(); ++k) {
    if (wu[k] < 0.0 || wu[k] > 1.0) throw DomainError("user weights must lie in [0, 1]");
    if (participated[k]) w[k] = wu[k];
  }
  if (std::accumulate(w.begin(), w.end(), 0.0) <= 0.0) throw DomainError("role has no weighted participants");
  return normalize_weights(w);
}

namespace {

UnifiedDecisionMatrix weighted_cellwise(const std::vector<UnifiedDecisionMatrix>& inputs,
                                        const std::vector<double>& weights, const char* what) {
  if (inputs.empty()) throw DomainError(std::string(what) + ": nothing to aggregate");
  if (inputs.size() != weights.size()) {
    throw DomainError(std::string(what) + ": " + std::to_string(inputs.size()) + " matrices but " +
                      std::to_string(weights.size()) + " weights");
  }
  const int n = inputs.front().alternatives();
  const int m = inputs.front().criteria();
  for (const auto& u : inputs) {
    if (u.alternatives() != n || u.criteria() != m) throw DomainError(std::string(what) + ": shape mismatch");
  }
  UnifiedDecisionMatrix out(n, m);
  std::vector<TwoTuple> values;
  std::vector<double> w;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) {
      values.clear();
      w.clear();
      for (std::size_t k = 0; k < inputs.size(); ++k) {
        const auto& cell = inputs[k].at(i, j);
        if (cell && weights[k] > 0.0) {
          values.push_back(*cell);
          w.push_back(weights[k]);
        }
      }
      if (!values.empty()) out.set(i, j, weighted_average(values, w));
    }
  }
  return out;
}

}  // namespace

UnifiedDecisionMatrix aggregate_role(const std::vector<UnifiedDecisionMatrix>& uids, const std::vector<double>& weights) {
  return weighted_cellwise(uids, weights, "aggregate_role");
}

UnifiedDecisionMatrix aggregate_global(const std::vector<UnifiedDecisionMatrix>& roles, const std::vector<double>& wr) {
  return weighted_cellwise(roles, wr, "aggregate_global");
}

std::vector<TwoTuple> ucd_vector(const UnifiedDecisionMatrix& matrix, const std::vector<double>& wc) {
  if (static_cast<int>(wc.size()) != matrix.criteria()) {
    throw DomainError("ucd_vector: " + std::to_string(wc.size()) + " criteria weights for " +
                      std::to_string(matrix.criteria()) + " criteria");
  }
  const int g = unification_terms().granularity();
  std::vector<TwoTuple> out;
  for (int i = 0; i < matrix.alternatives(); ++i) {
    double beta = 0.0;
    for (int j = 0; j < matrix.criteria(); ++j) {
      if (const auto& cell = matrix.at(i, j)) beta += cell->beta() * wc[j];
    }
    out.push_back(delta(std::min(beta, static_cast<double>(g - 1)), g));
  }
  return out;
}

}  // namespace linguse
