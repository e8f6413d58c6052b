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
#include "linguse/sus_scale.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>
#include <string>

#include "linguse/errors.hpp"

namespace linguse {
namespace {

constexpr std::array<std::string_view, kSusLabelCount> kNames = {
    "None", "Worst Imaginable", "Poor", "OK", "Good", "Excellent", "Best Imaginable"};

constexpr std::array<std::string_view, kSusLabelCount> kShortNames = {"N", "WI", "P", "O", "G", "E", "BI"};

constexpr HierarchyTerm kNone[] = {{2, 0}};
constexpr HierarchyTerm kWorst[] = {{2, 1}, {3, 2}};
constexpr HierarchyTerm kPoor[] = {{3, 3}};
constexpr HierarchyTerm kOk[] = {{3, 4}, {2, 2}};
constexpr HierarchyTerm kGood[] = {{2, 3}, {3, 6}};
constexpr HierarchyTerm kExcellent[] = {{3, 7}};
constexpr HierarchyTerm kBest[] = {{3, 8}};

constexpr std::array<std::span<const HierarchyTerm>, kSusLabelCount> kComponents = {
    kNone, kWorst, kPoor, kOk, kGood, kExcellent, kBest};

constexpr std::array<int, kSusLabelCount> kCenters = {0, 2, 3, 4, 6, 7, 8};

std::size_t slot(SusLabel label) { return static_cast<std::size_t>(label); }

bool iequals(std::string_view a, std::string_view b) {
  return a.size() == b.size() && std::equal(a.begin(), a.end(), b.begin(), [](char x, char y) {
           return std::tolower(static_cast<unsigned char>(x)) == std::tolower(static_cast<unsigned char>(y));
         });
}

}  // namespace

std::string_view to_string(SusLabel label) noexcept { return kNames[slot(label)]; }

SusLabel parse_sus_label(std::string_view name) {
  for (std::size_t i = 0; i < kNames.size(); ++i) {
    if (iequals(name, kNames[i]) || iequals(name, kShortNames[i])) return static_cast<SusLabel>(i);
  }
  throw ConfigurationError("unknown adjective SUS label '" + std::string(name) + "'");
}

const UnbalancedSusScale& UnbalancedSusScale::instance() {
  static const UnbalancedSusScale scale;
  return scale;
}

std::span<const HierarchyTerm> UnbalancedSusScale::term_components(SusLabel label) const {
  return kComponents[slot(label)];
}

int UnbalancedSusScale::level3_center(SusLabel label) const { return kCenters[slot(label)]; }

const HierarchyTerm* UnbalancedSusScale::component_at(SusLabel label, int level) const {
  for (const auto& term : kComponents[slot(label)]) {
    if (term.level == level) return &term;
  }
  return nullptr;
}

SusLabel UnbalancedSusScale::label_for(int level, int index) const {
  for (std::size_t i = 0; i < kComponents.size(); ++i) {
    for (const auto& term : kComponents[i]) {
      if (term.level == level && term.index == index) return static_cast<SusLabel>(i);
    }
  }
  throw DomainError("s" + std::to_string(index) + " on level " + std::to_string(level) +
                    " is not a component of any adjective SUS label");
}

UnbalancedSusValue::UnbalancedSusValue(SusLabel label, double alpha, int level)
    : label_(label), alpha_(alpha), level_(level) {
  if (slot(label) >= kSusLabelCount) throw DomainError("invalid adjective SUS label");
  if (!(alpha >= -0.5 && alpha < 0.5)) {
    std::ostringstream os;
    os << "adjective SUS alpha " << alpha << " outside [-0.5, 0.5)";
    throw DomainError(os.str());
  }
  if (UnbalancedSusScale::instance().component_at(label, level) == nullptr) {
    throw DomainError(std::string(to_string(label)) + " has no term component on level " +
                      std::to_string(level));
  }
  (void)carrier();  // rejects alphas that leave the carrier's domain
}

TwoTuple UnbalancedSusValue::carrier() const {
  const HierarchyTerm* term = UnbalancedSusScale::instance().component_at(label_, level_);
  return TwoTuple(term->index, alpha_, standard_hierarchy().granularity(term->level));
}

UnbalancedSusValue tf_sus(double score) {
  if (std::isnan(score) || score < 0.0 || score > 100.0) {
    std::ostringstream os;
    os << "SUS score " << score << " outside [0, 100]";
    throw DomainError(os.str());
  }
  const bool level2 = score <= 25.0 || (score >= 50.0 && score <= 75.0);
  const int level = level2 ? 2 : 3;
  const int n = standard_hierarchy().granularity(level);
  const TwoTuple term = delta((n - 1) * score / 100.0, n);
  const SusLabel label = UnbalancedSusScale::instance().label_for(level, term.index());
  return UnbalancedSusValue(label, term.alpha(), level);
}

TwoTuple unify_to_s9(const UnbalancedSusValue& value) {
  return transform_level(value.carrier(), kUnificationLevel);
}

UnbalancedSusValue retranslate_from_s9(const TwoTuple& value) {
  if (standard_hierarchy().level_of(value.granularity()) != kUnificationLevel) {
    throw DomainError("retranslation expects a value on S9, got S" + std::to_string(value.granularity()));
  }
  const double beta = value.beta();
  const auto& scale = UnbalancedSusScale::instance();
  std::size_t best = 0;
  double best_distance = std::abs(beta - kCenters[0]);
  for (std::size_t i = 1; i < kCenters.size(); ++i) {
    const double d = std::abs(beta - kCenters[i]);
    if (d <= best_distance) {  // ties go to the higher label
      best = i;
      best_distance = d;
    }
  }
  const auto label = static_cast<SusLabel>(best);
  if (const HierarchyTerm* bridge = scale.component_at(label, 2)) {
    return UnbalancedSusValue(label, beta / 2.0 - bridge->index, 2);
  }
  return UnbalancedSusValue(label, beta - kCenters[best], 3);
}

}  // namespace linguse
