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

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>

#include <json.hpp>

#include "linguse/event_store.hpp"
#include "linguse/model.hpp"

namespace linguse {

enum class Lifecycle { Draft, Collecting, Closed };

std::string_view to_string(Lifecycle s) noexcept;
Lifecycle parse_lifecycle(std::string_view name);

/// Sources of nondeterminism. Everything they produce is written into the
/// event log, so replay never calls them.
struct ServiceHooks {
  std::function<std::string()> token;     // bearer tokens and generated ids
  std::function<std::string()> clock;     // ISO-8601 UTC timestamps
  std::function<std::uint64_t()> random;  // role dice
};

ServiceHooks default_hooks();

/// Evaluation projects as an event-sourced state machine over an EventStore.
/// Every call takes the caller's bearer token; the moderator token is
/// returned by create_project, participant tokens by add_user.
class ProjectService {
 public:
  explicit ProjectService(EventStore& store, ServiceHooks hooks = default_hooks());
  ~ProjectService();
  ProjectService(const ProjectService&) = delete;
  ProjectService& operator=(const ProjectService&) = delete;

  nlohmann::json create_project(const nlohmann::json& body);
  nlohmann::json get_project(const std::string& id, const std::string& token) const;
  nlohmann::json patch_project(const std::string& id, const std::string& token, const nlohmann::json& body);
  nlohmann::json add_alternative(const std::string& id, const std::string& token, const nlohmann::json& body);
  nlohmann::json set_criteria(const std::string& id, const std::string& token, const nlohmann::json& body);
  /// Returns the derived weights and CI; an inconsistent matrix is stored
  /// but blocks the move to collecting.
  nlohmann::json set_judgments(const std::string& id, const std::string& token, const nlohmann::json& body);
  nlohmann::json set_roles(const std::string& id, const std::string& token, const nlohmann::json& body);
  nlohmann::json add_user(const std::string& id, const std::string& token, const nlohmann::json& body);
  nlohmann::json set_state(const std::string& id, const std::string& token, const nlohmann::json& body);

  /// Participant view: bound role plus the done/pending matrix. The moderator
  /// may ask for any user.
  nlohmann::json session(const std::string& id, const std::string& token,
                         const std::optional<std::string>& user = std::nullopt) const;
  nlohmann::json bind_role(const std::string& id, const std::string& token, const nlohmann::json& body);
  nlohmann::json role_dice(const std::string& id, const std::string& token);
  nlohmann::json submit(const std::string& id, const std::string& token, const nlohmann::json& body);
  nlohmann::json import_dataset(const std::string& id, const std::string& token, const nlohmann::json& body);

  /// Runs the evaluation pipeline and caches the report document per scope.
  nlohmann::json compute(const std::string& id, const std::string& token, const nlohmann::json& body);
  /// {report, stale, scope}. NotFoundError when the scope was never computed.
  nlohmann::json report(const std::string& id, const std::string& token,
                        const std::optional<std::string>& role = std::nullopt) const;
  nlohmann::json export_log(const std::string& id, const std::string& token) const;

  std::vector<std::string> project_ids() const;

 private:
  struct Project;

  std::shared_ptr<Project> find(const std::string& id) const;
  void commit(Project& p, const std::string& kind, const nlohmann::json& body);

  EventStore& store_;
  ServiceHooks hooks_;
  mutable std::shared_mutex mu_;  // guards projects_
  std::map<std::string, std::shared_ptr<Project>> projects_;
};

/// Copies an exported log into another store, preserving event order.
void append_export(EventStore& store, const nlohmann::json& exported);

}  // namespace linguse
