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

#include <array>
#include <span>
#include <string_view>

#include "linguse/linguistic.hpp"

namespace linguse {

/// Labels of the seven-term adjective SUS scale, in ascending order.
enum class SusLabel { None, WorstImaginable, Poor, Ok, Good, Excellent, BestImaginable };

inline constexpr int kSusLabelCount = 7;

std::string_view to_string(SusLabel label) noexcept;
/// Parses a label name ("OK", "Worst Imaginable", ...). Case-insensitive.
SusLabel parse_sus_label(std::string_view name);

/// A term of the linguistic hierarchy: s_index on hierarchy level `level`.
struct HierarchyTerm {
  int level;
  int index;
  friend bool operator==(const HierarchyTerm&, const HierarchyTerm&) = default;
};

/// The unbalanced adjective SUS scale embedded in S3 u S5 u S9. Each label
/// owns a set of term components (TC) drawn from levels 2 and 3:
///
///   None -> {s0^5}            WI -> {s1^5, s2^9}    Poor -> {s3^9}
///   OK   -> {s4^9, s2^5}      Good -> {s3^5, s6^9}  Excellent -> {s7^9}
///   Best Imaginable -> {s8^9}
class UnbalancedSusScale {
 public:
  static const UnbalancedSusScale& instance();

  std::span<const HierarchyTerm> term_components(SusLabel label) const;
  /// Index of the label's anchor term in S9.
  int level3_center(SusLabel label) const;
  /// The label's TC member on `level`, if it has one.
  const HierarchyTerm* component_at(SusLabel label, int level) const;
  /// Label whose TC contains s_index on `level`. Throws DomainError when the
  /// term belongs to no label (e.g. s1^9).
  SusLabel label_for(int level, int index) const;

 private:
  UnbalancedSusScale() = default;
};

/// Unbalanced 2-tuple (label, alpha) whose alpha is expressed on hierarchy
/// level 2 or 3, depending on which TC member carries it.
class UnbalancedSusValue {
 public:
  UnbalancedSusValue(SusLabel label, double alpha, int level);

  SusLabel label() const noexcept { return label_; }
  double alpha() const noexcept { return alpha_; }
  int level() const noexcept { return level_; }

  /// The TC member carrying alpha, as a 2-tuple on that hierarchy level.
  TwoTuple carrier() const;

  friend bool operator==(const UnbalancedSusValue&, const UnbalancedSusValue&) = default;

 private:
  SusLabel label_;
  double alpha_;
  int level_;
};

/// Maps a SUS score in [0, 100] onto the adjective scale. Scores in
/// [0, 25] u [50, 75] use level 2, the rest level 3.
UnbalancedSusValue tf_sus(double score);

/// Re-expresses an adjective value on S9 through its carrying TC member.
TwoTuple unify_to_s9(const UnbalancedSusValue& value);

/// Inverse direction: nearest label center in S9 (ties go up); bridge
/// labels with a level-2 component report alpha on level 2.
UnbalancedSusValue retranslate_from_s9(const TwoTuple& value);

}  // namespace linguse
