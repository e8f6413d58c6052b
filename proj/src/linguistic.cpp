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
#include "linguse/linguistic.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "linguse/errors.hpp"

namespace linguse {

TermSet::TermSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.size() < 2) {
    throw DomainError("term set needs at least 2 labels, got " + std::to_string(labels_.size()));
  }
}

TermSet TermSet::uniform(int granularity) {
  if (granularity < 2) {
    throw DomainError("term set granularity must be >= 2, got " + std::to_string(granularity));
  }
  std::vector<std::string> labels;
  labels.reserve(granularity);
  for (int i = 0; i < granularity; ++i) labels.push_back("s" + std::to_string(i));
  return TermSet(std::move(labels));
}

const std::string& TermSet::label(int index) const {
  if (index < 0 || index > max_index()) {
    throw DomainError("label index " + std::to_string(index) + " outside S" +
                      std::to_string(granularity()));
  }
  return labels_[index];
}

int TermSet::index_of(std::string_view label) const noexcept {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  return it == labels_.end() ? -1 : static_cast<int>(it - labels_.begin());
}

const TermSet& accessibility_terms() {
  static const TermSet set({"A", "AA", "AAA"});
  return set;
}

const TermSet& satisfaction_terms() {
  static const TermSet set({"Unsatisfied", "Dissatisfied", "Indifferent", "Satisfied", "Very satisfied"});
  return set;
}

const TermSet& unification_terms() {
  static const TermSet set = TermSet::uniform(9);
  return set;
}

TwoTuple::TwoTuple(int index, double alpha, int granularity)
    : index_(index), alpha_(alpha), granularity_(granularity) {
  if (granularity < 2) {
    throw DomainError("2-tuple granularity must be >= 2, got " + std::to_string(granularity));
  }
  if (index < 0 || index >= granularity) {
    throw DomainError("2-tuple index " + std::to_string(index) + " outside S" +
                      std::to_string(granularity));
  }
  if (!(alpha >= -0.5 && alpha < 0.5)) {
    std::ostringstream os;
    os << "2-tuple alpha " << alpha << " outside [-0.5, 0.5)";
    throw DomainError(os.str());
  }
  const double b = index + alpha;
  if (b < -kBetaSlack || b > (granularity - 1) + kBetaSlack) {
    std::ostringstream os;
    os << "2-tuple (s" << index << ", " << alpha << ") leaves [0, " << granularity - 1 << "]";
    throw DomainError(os.str());
  }
}

TwoTuple delta(double beta, int granularity) {
  const int g = granularity - 1;
  if (granularity < 2) {
    throw DomainError("delta: granularity must be >= 2, got " + std::to_string(granularity));
  }
  if (std::isnan(beta) || beta < -kBetaSlack || beta > g + kBetaSlack) {
    std::ostringstream os;
    os << "delta: beta " << beta << " outside [0, " << g << "] for S" << granularity;
    throw DomainError(os.str());
  }
  beta = std::clamp(beta, 0.0, static_cast<double>(g));
  // floor + fraction is exact in binary floating point, unlike floor(beta + 0.5).
  const double whole = std::floor(beta);
  const double frac = beta - whole;
  int index = static_cast<int>(whole);
  double alpha = frac;
  if (frac >= 0.5) {
    ++index;
    alpha = frac - 1.0;
  }
  return TwoTuple(index, alpha, granularity);
}

LinguisticHierarchy::LinguisticHierarchy(int base_granularity, int levels) {
  if (base_granularity < 2 || levels < 1) {
    throw DomainError("hierarchy needs base granularity >= 2 and at least one level");
  }
  int n = base_granularity;
  for (int t = 0; t < levels; ++t) {
    granularities_.push_back(n);
    n = 2 * n - 1;
  }
}

int LinguisticHierarchy::granularity(int level) const {
  if (level < 1 || level > levels()) {
    throw DomainError("unknown hierarchy level " + std::to_string(level));
  }
  return granularities_[level - 1];
}

int LinguisticHierarchy::level_of(int granularity) const noexcept {
  for (int t = 0; t < levels(); ++t) {
    if (granularities_[t] == granularity) return t + 1;
  }
  return 0;
}

TwoTuple LinguisticHierarchy::transform(const TwoTuple& value, int target_level) const {
  const int source_level = level_of(value.granularity());
  if (source_level == 0) {
    throw DomainError("S" + std::to_string(value.granularity()) + " is not a hierarchy level");
  }
  const int target_granularity = granularity(target_level);
  if (source_level == target_level) return value;
  // Level granularities differ by powers of two in (n - 1), so the scale is exact.
  const double scale = static_cast<double>(target_granularity - 1) / (value.granularity() - 1);
  return delta(value.beta() * scale, target_granularity);
}

const LinguisticHierarchy& standard_hierarchy() {
  static const LinguisticHierarchy hierarchy(3, 3);
  return hierarchy;
}

TwoTuple transform_level(const TwoTuple& value, int target_level) {
  return standard_hierarchy().transform(value, target_level);
}

TwoTuple weighted_average(std::span<const TwoTuple> values, std::span<const double> weights) {
  if (values.empty()) throw DomainError("weighted_average: no values");
  if (values.size() != weights.size()) {
    throw DomainError("weighted_average: " + std::to_string(values.size()) + " values but " +
                      std::to_string(weights.size()) + " weights");
  }
  const int granularity = values.front().granularity();
  double num = 0.0;
  double den = 0.0;
  double lo = values.front().beta();
  double hi = lo;
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (values[k].granularity() != granularity) {
      throw DomainError("weighted_average: mixed term sets S" + std::to_string(granularity) +
                        " and S" + std::to_string(values[k].granularity()));
    }
    if (!(weights[k] >= 0.0) || !std::isfinite(weights[k])) {
      throw DomainError("weighted_average: weights must be finite and non-negative");
    }
    num += values[k].beta() * weights[k];
    den += weights[k];
    lo = std::min(lo, values[k].beta());
    hi = std::max(hi, values[k].beta());
  }
  if (den <= 0.0) throw DomainError("weighted_average: all weights are zero");
  // Clamp away rounding that would otherwise step outside the input range.
  return delta(std::clamp(num / den, lo, hi), granularity);
}

}  // namespace linguse
