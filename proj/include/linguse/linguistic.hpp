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

#include <span>
#include <string_view>
#include <string>
#include <vector>

namespace linguse {

/// Absolute tolerance used when a computed beta drifts past a domain bound
/// by floating-point error.
inline constexpr double kBetaSlack = 1e-9;

/// An ordered set of linguistic labels s_0..s_g. Granularity is the number
/// of labels (g + 1).
class TermSet {
 public:
  explicit TermSet(std::vector<std::string> labels);

  /// Term set with generated labels "s0".."s{granularity-1}".
  static TermSet uniform(int granularity);

  int granularity() const noexcept { return static_cast<int>(labels_.size()); }
  int max_index() const noexcept { return granularity() - 1; }
  const std::string& label(int index) const;
  /// Index of `label`, or -1 when the set has no such label.
  int index_of(std::string_view label) const noexcept;
  const std::vector<std::string>& labels() const noexcept { return labels_; }

 private:
  std::vector<std::string> labels_;
};

/// {A, AA, AAA}: accessibility conformance verdicts.
const TermSet& accessibility_terms();
/// {Unsatisfied, Dissatisfied, Indifferent, Satisfied, Very satisfied}.
const TermSet& satisfaction_terms();
/// The nine-label unification set.
const TermSet& unification_terms();

/// Linguistic 2-tuple (s_i, alpha) on a term set of the given granularity.
/// alpha lies in [-0.5, 0.5) and i + alpha stays inside [0, g].
class TwoTuple {
 public:
  TwoTuple(int index, double alpha, int granularity);

  int index() const noexcept { return index_; }
  double alpha() const noexcept { return alpha_; }
  int granularity() const noexcept { return granularity_; }
  int max_index() const noexcept { return granularity_ - 1; }
  double beta() const noexcept { return index_ + alpha_; }

  friend bool operator==(const TwoTuple&, const TwoTuple&) = default;

 private:
  int index_;
  double alpha_;
  int granularity_;
};

/// Delta: maps beta in [0, g] to the closest term plus symbolic translation.
/// Halves round up. Throws DomainError outside [0, g].
TwoTuple delta(double beta, int granularity);

/// Delta inverse: i + alpha.
inline double delta_inverse(const TwoTuple& value) noexcept { return value.beta(); }

/// Nested term sets where level t+1 has 2 * n(t) - 1 labels. Levels are
/// numbered from 1.
class LinguisticHierarchy {
 public:
  explicit LinguisticHierarchy(int base_granularity, int levels);

  int levels() const noexcept { return static_cast<int>(granularities_.size()); }
  int granularity(int level) const;
  /// Level holding term sets of `granularity`, or 0 when not in the hierarchy.
  int level_of(int granularity) const noexcept;

  /// Re-expresses `value` on `target_level`: beta' = beta * (n(t') - 1) / (n(t) - 1).
  TwoTuple transform(const TwoTuple& value, int target_level) const;

 private:
  std::vector<int> granularities_;
};

/// S3 u S5 u S9.
const LinguisticHierarchy& standard_hierarchy();

inline constexpr int kUnificationLevel = 3;

TwoTuple transform_level(const TwoTuple& value, int target_level);

/// 2-tuple weighted average, Delta(sum beta_k w_k / sum w_k). All values
/// must share one term set; weights must be non-negative with a positive sum.
TwoTuple weighted_average(std::span<const TwoTuple> values, std::span<const double> weights);

}  // namespace linguse
