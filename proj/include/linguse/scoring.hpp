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
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "linguse/linguistic.hpp"
#include "linguse/sus_scale.hpp"

namespace linguse {

enum class Criterion { Sus, Nps, Ut, Acc };

std::string_view to_string(Criterion c) noexcept;
/// "SUS", "NPS", "UT" or "ACC".
Criterion parse_criterion(std::string_view name);

enum class UserGroup { Expert, EndUser };

std::string_view to_string(UserGroup g) noexcept;
/// "expert" or "end_user" ("end-user" also accepted).
UserGroup parse_user_group(std::string_view name);

struct SusResponse {
  std::vector<int> items;  // 10 Likert answers in [1, 5]
};

struct NpsResponse {
  int ltr = 0;  // likelihood to recommend, [0, 10]
};

struct UtTaskDefinition {
  std::string id;
  std::string description;
  double max_time = 0.0;  // seconds
};

struct UtTaskResponse {
  std::string task_id;
  double time_taken = 0.0;  // client-reported seconds
  bool success = false;
  int satisfaction = 0;  // index in S5
};

struct AccResponse {
  int label = 0;  // index in S3: A, AA, AAA
};

void validate(const SusResponse& r);
void validate(const NpsResponse& r);
void validate(const AccResponse& r);
/// Each definition answered exactly once, nothing else; errors list task ids.
void validate(const std::vector<UtTaskResponse>& tasks, const std::vector<UtTaskDefinition>& definitions);

double sus_score(const SusResponse& r);
/// Inverted LTR regression, clamped to [0, 100].
double nps_to_sus(const NpsResponse& r);

enum class NpsSegment { Detractor, Passive, Promoter };
NpsSegment nps_segment(int ltr);

struct UtMetrics {
  double efficiency_pct;
  double success_pct;
  TwoTuple satisfaction;  // on S5
};

/// Percent of tasks finished within max_time, percent successful, and the
/// mean satisfaction label over all tasks.
UtMetrics ut_user_metrics(const std::vector<UtTaskResponse>& tasks, const std::vector<UtTaskDefinition>& definitions);

struct UtTaskAnswer {
  double weight;  // normalized role-user weight of the respondent
  UtTaskResponse response;
};

/// Metrics of one task over everybody who answered it under a role.
/// Percentages are unweighted, satisfaction is weighted. Empty input gives
/// nullopt (not available).
std::optional<UtMetrics> ut_task_role_metrics(const UtTaskDefinition& task, const std::vector<UtTaskAnswer>& answers);

/// Cell of an individual matrix: adjective SUS value (SUS, NPS) or a plain
/// 2-tuple (UT on S5, ACC on S3).
using LinguisticCell = std::variant<UnbalancedSusValue, TwoTuple>;

/// Tests answered by one participant for one alternative.
struct AlternativeResponses {
  std::optional<SusResponse> sus;
  std::optional<NpsResponse> nps;
  std::optional<std::vector<UtTaskResponse>> ut;
  std::optional<AccResponse> acc;
};

/// Alternatives x criteria grid of one (user, role) pass. Unanswered tests
/// stay empty, never zero.
class IndividualDecisionMatrix {
 public:
  IndividualDecisionMatrix(std::string user, std::string role, int alternatives, std::vector<Criterion> criteria);

  const std::string& user() const noexcept { return user_; }
  const std::string& role() const noexcept { return role_; }
  int alternatives() const noexcept { return alternatives_; }
  const std::vector<Criterion>& criteria() const noexcept { return criteria_; }

  const std::optional<LinguisticCell>& at(int alternative, int criterion) const;
  /// Rejects cells whose scale does not match the criterion.
  void set(int alternative, int criterion, LinguisticCell cell);

 private:
  std::size_t index(int alternative, int criterion) const;
  std::string user_;
  std::string role_;
  int alternatives_;
  std::vector<Criterion> criteria_;
  std::vector<std::optional<LinguisticCell>> cells_;
};

/// SUS and NPS through tf_sus, UT satisfaction on S5, ACC on S3. ACC from a
/// non-expert raises AuthorizationError.
IndividualDecisionMatrix build_id_matrix(const std::string& user, UserGroup group, const std::string& role,
                                         const std::vector<Criterion>& criteria,
                                         const std::vector<AlternativeResponses>& responses,
                                         const std::vector<UtTaskDefinition>& tasks);

}  // namespace linguse
