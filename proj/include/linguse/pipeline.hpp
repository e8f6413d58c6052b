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
#include <vector>

#include <json.hpp>

#include "linguse/aggregation.hpp"
#include "linguse/model.hpp"
#include "linguse/report.hpp"
#include "linguse/topsis.hpp"

namespace linguse {

struct EvaluationOptions {
  std::optional<std::string> role;  // restrict the dataset to one role
};

struct IndividualResult {
  std::string user;
  std::string role;
  IndividualDecisionMatrix id;
  UnifiedDecisionMatrix uid;
};

struct RoleResult {
  std::string role;
  std::vector<std::string> participants;
  std::vector<double> user_weights;  // W^l over participants
  double weight = 0.0;               // normalized WR among evaluated roles
  UnifiedDecisionMatrix ucd_matrix;
  std::vector<TwoTuple> ucd;
};

struct UtUserRow {
  std::string user;
  std::string role;
  std::string alternative;
  UtMetrics metrics;
};

struct TaskMetricRow {
  std::string task;
  std::string scope;  // role id
  std::string alternative;
  std::optional<UtMetrics> metrics;
};

struct AccLabel {
  std::string user;
  std::string alternative;
  int label;
};

/// Everything computed for one project snapshot.
struct ResultBundle {
  std::string project;
  std::vector<std::string> alternatives;
  std::vector<std::string> criteria;
  std::vector<double> wc;
  std::optional<std::string> role_filter;
  bool insufficient_data = false;

  std::vector<IndividualResult> individuals;
  std::vector<RoleResult> roles;
  std::optional<UnifiedDecisionMatrix> global;
  std::vector<TwoTuple> global_ucd;
  std::vector<ScopedRanking> rankings;  // evaluated roles, then "global"
  AdjectiveUsabilityReport aur;
  std::vector<std::optional<NpsSummary>> nps;  // per alternative
  std::vector<UtUserRow> ut_users;
  std::vector<TaskMetricRow> task_metrics;
  std::vector<AccLabel> acc;
  std::vector<std::string> warnings;

  const ScopedRanking* ranking(const std::string& scope) const;
  const RoleResult* role(const std::string& id) const;
};

/// Checks every record against the project: known ids, enabled test, expert
/// ACC, complete UT payloads, one record per (user, role, alternative, test).
void validate_dataset(const ProjectConfig& project, const Dataset& dataset);

/// Runs scoring, unification, role and global aggregation, TOPSIS and
/// retranslation. An empty (or fully filtered) dataset gives a bundle with
/// insufficient_data set and no rankings.
ResultBundle evaluate(const ProjectConfig& project, const std::vector<double>& wc, const Dataset& dataset,
                      const EvaluationOptions& options = {});

}  // namespace linguse
