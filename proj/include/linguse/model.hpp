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

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "linguse/fahp.hpp"
#include "linguse/scoring.hpp"

namespace linguse {

struct Alternative {
  std::string id;
  std::string name;
  std::string url;
  std::string logo;
};

struct UserInfo {
  std::string id;
  std::string name;
  UserGroup group = UserGroup::EndUser;
  std::optional<double> weight;  // overrides the group weight
};

struct RoleInfo {
  std::string id;
  std::string label;
  double weight = 0.0;  // raw WR', normalized at evaluation time
};

struct CriteriaConfig {
  std::vector<Criterion> enabled;
  std::vector<UtTaskDefinition> ut_tasks;
};

struct GroupWeights {
  double expert = 1.0;
  double end_user = 1.0;
};

struct JudgmentEntry {
  std::string left;
  std::string right;
  std::string label;
};

/// Moderator's pairwise judgments over named criteria.
struct JudgmentSet {
  std::vector<std::string> criteria;
  std::vector<JudgmentEntry> judgments;
  std::map<std::string, TriangularFuzzyNumber> scale;  // overrides of the standard scale
};

struct ProjectConfig {
  std::string id;
  std::string name;
  std::vector<Alternative> alternatives;
  CriteriaConfig criteria;
  std::vector<UserInfo> users;
  GroupWeights group_weights;
  std::vector<RoleInfo> roles;

  int alternative_index(const std::string& id) const;  // -1 when unknown
  int user_index(const std::string& id) const;
  int role_index(const std::string& id) const;
  int criterion_index(Criterion c) const;
  /// WU_k: explicit user weight or the weight of the user's group.
  double user_weight(const UserInfo& user) const;
};

/// Structural checks: unique ids, weights in range, tasks with positive time.
/// `require_ready` additionally demands at least one alternative, criterion
/// and role, as needed before collection starts.
void validate_project(const ProjectConfig& project, bool require_ready);

using ResponsePayload = std::variant<SusResponse, NpsResponse, std::vector<UtTaskResponse>, AccResponse>;

struct ResponseRecord {
  std::string user;
  std::string role;
  std::string alternative;
  Criterion test = Criterion::Sus;
  ResponsePayload payload;
};

struct Dataset {
  std::vector<ResponseRecord> records;
};

struct ProjectWeights {
  std::vector<std::string> criteria;
  PairwiseMatrix matrix;
  CriteriaWeights weights;
};

/// Builds the matrix in the order of `set.criteria` and derives weights.
ProjectWeights derive_project_weights(const JudgmentSet& set);

/// Weights reordered to the project's enabled criteria. Throws
/// ValidationError when the judged criteria differ from the enabled ones.
std::vector<double> weights_for(const ProjectConfig& project, const ProjectWeights& weights);

// JSON mapping. Parse errors name the offending field path.
ProjectConfig parse_project(const nlohmann::json& j);
nlohmann::json to_json(const ProjectConfig& p);
JudgmentSet parse_judgments(const nlohmann::json& j);
nlohmann::json to_json(const JudgmentSet& s);
Dataset parse_dataset(const nlohmann::json& j);
nlohmann::json to_json(const Dataset& d);
ResponseRecord parse_record(const nlohmann::json& j, const std::string& path = "record");
nlohmann::json to_json(const ResponseRecord& r);
ResponsePayload parse_payload(Criterion test, const nlohmann::json& j, const std::string& path = "payload");
nlohmann::json payload_to_json(const ResponsePayload& p);
nlohmann::json to_json(const CriteriaWeights& w, const std::vector<std::string>& criteria);

nlohmann::json tuple_json(const TwoTuple& t);
nlohmann::json sus_value_json(const UnbalancedSusValue& v);

/// Reads and parses a JSON file; syntax errors report line and column.
nlohmann::json load_json_file(const std::filesystem::path& path);

}  // namespace linguse
