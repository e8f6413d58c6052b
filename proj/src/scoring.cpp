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
#include "linguse/scoring.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <sstream>

#include "linguse/errors.hpp"

namespace linguse {
namespace {

constexpr std::array<std::string_view, 4> kCriterionNames = {"SUS", "NPS", "UT", "ACC"};

std::string join(const std::vector<std::string>& ids) {
  std::string out;
  for (const auto& id : ids) out += (out.empty() ? "" : ", ") + id;
  return out;
}

}  // namespace

std::string_view to_string(Criterion c) noexcept { return kCriterionNames[static_cast<std::size_t>(c)]; }

Criterion parse_criterion(std::string_view name) {
  for (std::size_t i = 0; i < kCriterionNames.size(); ++i) {
    if (name == kCriterionNames[i]) return static_cast<Criterion>(i);
  }
  throw ConfigurationError("unknown criterion '" + std::string(name) + "' (expected SUS, NPS, UT or ACC)");
}

std::string_view to_string(UserGroup g) noexcept { return g == UserGroup::Expert ? "expert" : "end_user"; }

UserGroup parse_user_group(std::string_view name) {
  if (name == "expert") return UserGroup::Expert;
  if (name == "end_user" || name == "end-user") return UserGroup::EndUser;
  throw ConfigurationError("unknown user group '" + std::string(name) + "'");
}

void validate(const SusResponse& r) {
  if (r.items.size() != 10) {
    throw ValidationError("SUS response needs 10 items, got " + std::to_string(r.items.size()));
  }
  for (std::size_t h = 0; h < r.items.size(); ++h) {
    if (r.items[h] < 1 || r.items[h] > 5) {
      throw ValidationError("SUS item " + std::to_string(h + 1) + " = " + std::to_string(r.items[h]) +
                            " outside [1, 5]");
    }
  }
}

void validate(const NpsResponse& r) {
  if (r.ltr < 0 || r.ltr > 10) throw ValidationError("NPS answer " + std::to_string(r.ltr) + " outside [0, 10]");
}

void validate(const AccResponse& r) {
  if (r.label < 0 || r.label > accessibility_terms().max_index()) {
    throw ValidationError("accessibility label index " + std::to_string(r.label) + " outside A/AA/AAA");
  }
}

void validate(const std::vector<UtTaskResponse>& tasks, const std::vector<UtTaskDefinition>& definitions) {
  std::map<std::string, int> count;
  for (const auto& t : tasks) ++count[t.task_id];
  std::vector<std::string> missing, duplicate, unknown;
  for (const auto& d : definitions) {
    auto it = count.find(d.id);
    if (it == count.end()) {
      missing.push_back(d.id);
    } else {
      if (it->second > 1) duplicate.push_back(d.id);
      count.erase(it);
    }
  }
  for (const auto& [id, n] : count) unknown.push_back(id);
  std::string problems;
  if (!missing.empty()) problems += "missing tasks: " + join(missing);
  if (!duplicate.empty()) problems += std::string(problems.empty() ? "" : "; ") + "duplicate tasks: " + join(duplicate);
  if (!unknown.empty()) problems += std::string(problems.empty() ? "" : "; ") + "unknown tasks: " + join(unknown);
  if (!problems.empty()) throw ValidationError("usability test response: " + problems);

  for (const auto& t : tasks) {
    if (!(t.time_taken >= 0.0) || !std::isfinite(t.time_taken)) {
      throw ValidationError("task " + t.task_id + ": time must be a non-negative number of seconds");
    }
    if (t.satisfaction < 0 || t.satisfaction > satisfaction_terms().max_index()) {
      throw ValidationError("task " + t.task_id + ": satisfaction " + std::to_string(t.satisfaction) +
                            " outside S5");
    }
  }
}

double sus_score(const SusResponse& r) {
  validate(r);
  int sum = 0;
  for (int h = 0; h < 10; h += 2) sum += (r.items[h] - 1) + (5 - r.items[h + 1]);
  return 2.5 * sum;
}

double nps_to_sus(const NpsResponse& r) {
  validate(r);
  return std::clamp((r.ltr - 1.33) / 0.08, 0.0, 100.0);
}

NpsSegment nps_segment(int ltr) {
  validate(NpsResponse{ltr});
  if (ltr >= 9) return NpsSegment::Promoter;
  if (ltr >= 7) return NpsSegment::Passive;
  return NpsSegment::Detractor;
}

UtMetrics ut_user_metrics(const std::vector<UtTaskResponse>& tasks, const std::vector<UtTaskDefinition>& definitions) {
  validate(tasks, definitions);
  if (definitions.empty()) throw ValidationError("usability test has no tasks");
  std::map<std::string, double> limit;
  for (const auto& d : definitions) limit[d.id] = d.max_time;
  int efficient = 0, successful = 0, satisfaction = 0;
  for (const auto& t : tasks) {
    if (t.time_taken <= limit[t.task_id]) ++efficient;
    if (t.success) ++successful;
    satisfaction += t.satisfaction;
  }
  const double d = static_cast<double>(tasks.size());
  return {100.0 * efficient / d, 100.0 * successful / d, delta(satisfaction / d, satisfaction_terms().granularity())};
}

std::optional<UtMetrics> ut_task_role_metrics(const UtTaskDefinition& task, const std::vector<UtTaskAnswer>& answers) {
  if (answers.empty()) return std::nullopt;
  int efficient = 0, successful = 0;
  std::vector<TwoTuple> sat;
  std::vector<double> weights;
  for (const auto& a : answers) {
    if (a.response.task_id != task.id) {
      throw ValidationError("answer for task " + a.response.task_id + " passed as " + task.id);
    }
    if (a.response.time_taken <= task.max_time) ++efficient;
    if (a.response.success) ++successful;
    sat.emplace_back(a.response.satisfaction, 0.0, satisfaction_terms().granularity());
    weights.push_back(a.weight);
  }
  const double n = static_cast<double>(answers.size());
  return UtMetrics{100.0 * efficient / n, 100.0 * successful / n, weighted_average(sat, weights)};
}

IndividualDecisionMatrix::IndividualDecisionMatrix(std::string user, std::string role, int alternatives,
                                                   std::vector<Criterion> criteria)
    : user_(std::move(user)), role_(std::move(role)), alternatives_(alternatives), criteria_(std::move(criteria)) {
  if (alternatives_ < 0) throw DomainError("negative alternative count");
  cells_.resize(static_cast<std::size_t>(alternatives_) * criteria_.size());
}

std::size_t IndividualDecisionMatrix::index(int alternative, int criterion) const {
  if (alternative < 0 || alternative >= alternatives_ || criterion < 0 ||
      criterion >= static_cast<int>(criteria_.size())) {
    throw DomainError("individual matrix cell (" + std::to_string(alternative) + ", " + std::to_string(criterion) +
                      ") out of range");
  }
  return static_cast<std::size_t>(alternative) * criteria_.size() + criterion;
}

const std::optional<LinguisticCell>& IndividualDecisionMatrix::at(int alternative, int criterion) const {
  return cells_[index(alternative, criterion)];
}

void IndividualDecisionMatrix::set(int alternative, int criterion, LinguisticCell cell) {
  const std::size_t k = index(alternative, criterion);
  const Criterion c = criteria_[criterion];
  bool ok = false;
  switch (c) {
    case Criterion::Sus:
    case Criterion::Nps:
      ok = std::holds_alternative<UnbalancedSusValue>(cell);
      break;
    case Criterion::Ut:
      ok = std::holds_alternative<TwoTuple>(cell) &&
           std::get<TwoTuple>(cell).granularity() == satisfaction_terms().granularity();
      break;
    case Criterion::Acc:
      ok = std::holds_alternative<TwoTuple>(cell) &&
           std::get<TwoTuple>(cell).granularity() == accessibility_terms().granularity();
      break;
  }
  if (!ok) throw DomainError("cell on the wrong scale for criterion " + std::string(to_string(c)));
  cells_[k] = std::move(cell);
}

IndividualDecisionMatrix build_id_matrix(const std::string& user, UserGroup group, const std::string& role,
                                         const std::vector<Criterion>& criteria,
                                         const std::vector<AlternativeResponses>& responses,
                                         const std::vector<UtTaskDefinition>& tasks) {
  IndividualDecisionMatrix id(user, role, static_cast<int>(responses.size()), criteria);
  for (int i = 0; i < static_cast<int>(responses.size()); ++i) {
    const auto& r = responses[i];
    if (r.acc && group != UserGroup::Expert) {
      throw AuthorizationError("user " + user + " is not an expert and cannot rate accessibility");
    }
    for (int j = 0; j < static_cast<int>(criteria.size()); ++j) {
      switch (criteria[j]) {
        case Criterion::Sus:
          if (r.sus) id.set(i, j, tf_sus(sus_score(*r.sus)));
          break;
        case Criterion::Nps:
          if (r.nps) id.set(i, j, tf_sus(nps_to_sus(*r.nps)));
          break;
        case Criterion::Ut:
          if (r.ut) id.set(i, j, ut_user_metrics(*r.ut, tasks).satisfaction);
          break;
        case Criterion::Acc:
          if (r.acc) {
            validate(*r.acc);
            id.set(i, j, TwoTuple(r.acc->label, 0.0, accessibility_terms().granularity()));
          }
          break;
      }
    }
  }
  return id;
}

}  // namespace linguse
