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
#include "linguse/project_service.hpp"

#include <ctime>
#include <mutex>
#include <random>
#include <set>
#include <tuple>

#include "linguse/document.hpp"
#include "linguse/errors.hpp"
#include "linguse/pipeline.hpp"
#include "linguse/report.hpp"

namespace linguse {

using nlohmann::json;

namespace {

using SubmissionKey = std::tuple<std::string, std::string, std::string, Criterion>;

SubmissionKey key_of(const ResponseRecord& r) { return {r.user, r.role, r.alternative, r.test}; }

std::string iso_now() {
  const std::time_t t = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

const json& member(const json& body, const char* key, const std::string& where) {
  if (!body.is_object() || !body.contains(key)) throw ValidationError(where + ": missing field '" + key + "'");
  return body.at(key);
}

std::string text_member(const json& body, const char* key, const std::string& where) {
  const auto& v = member(body, key, where);
  if (!v.is_string()) throw ValidationError(where + "." + key + ": expected a string");
  return v.get<std::string>();
}

// Applies one configuration event to a copy of the project configuration.
// parse_project re-validates the result.
ProjectConfig changed_config(const ProjectConfig& cfg, const std::string& kind, const json& body) {
  json j = to_json(cfg);
  if (kind == "project_patched") {
    if (body.contains("name")) j["name"] = body["name"];
    if (body.contains("group_weights")) j["group_weights"].update(body["group_weights"]);
  } else if (kind == "alternative_added") {
    j["alternatives"].push_back(body);
  } else if (kind == "criteria_set") {
    j["criteria"] = body;
  } else if (kind == "roles_set") {
    j["roles"] = body["roles"];
  } else if (kind == "user_added") {
    j["users"].push_back(body["user"]);
  }
  return parse_project(j);
}

}  // namespace

std::string_view to_string(Lifecycle s) noexcept {
  switch (s) {
    case Lifecycle::Draft:
      return "draft";
    case Lifecycle::Collecting:
      return "collecting";
    case Lifecycle::Closed:
      return "closed";
  }
  return "draft";
}

Lifecycle parse_lifecycle(std::string_view name) {
  if (name == "draft") return Lifecycle::Draft;
  if (name == "collecting") return Lifecycle::Collecting;
  if (name == "closed") return Lifecycle::Closed;
  throw ValidationError("unknown project state '" + std::string(name) + "'");
}

ServiceHooks default_hooks() {
  auto engine = std::make_shared<std::mt19937_64>(std::random_device{}());
  auto mu = std::make_shared<std::mutex>();
  ServiceHooks h;
  h.token = [engine, mu] {
    std::lock_guard lock(*mu);
    static constexpr char hex[] = "0123456789abcdef";
    std::string s;
    for (int i = 0; i < 2; ++i) {
      auto v = (*engine)();
      for (int k = 0; k < 16; ++k, v >>= 4) s += hex[v & 15];
    }
    return s;
  };
  h.clock = iso_now;
  h.random = [engine, mu] {
    std::lock_guard lock(*mu);
    return (*engine)();
  };
  return h;
}

struct ProjectService::Project {
  ProjectConfig config;
  Lifecycle state = Lifecycle::Draft;
  std::optional<JudgmentSet> judgments;
  std::optional<ProjectWeights> weights;
  std::string moderator_token;
  std::map<std::string, std::string> participants;  // token -> user
  std::map<std::string, std::string> bound_role;    // user -> role
  Dataset dataset;
  std::set<SubmissionKey> keys;
  std::uint64_t version = 0;  // bumps on every accepted submission

  struct Cached {
    json report;
    std::uint64_t version = 0;
  };
  std::map<std::string, Cached> reports;  // scope -> last computed document

  mutable std::shared_mutex mu;
  std::mutex compute_mu;

  void mutate(const std::string& kind, const json& body) {
    if (kind == "project_created") {
      config = parse_project(body["config"]);
      moderator_token = body["moderator_token"];
      for (const auto& [user, token] : body["participant_tokens"].items()) participants[token] = user;
    } else if (kind == "judgments_set") {
      judgments = parse_judgments(body);
      weights = derive_project_weights(*judgments);
    } else if (kind == "state_changed") {
      state = parse_lifecycle(body["state"].get<std::string>());
    } else if (kind == "role_bound") {
      bound_role[body["user"]] = body["role"];
    } else if (kind == "submitted") {
      add(parse_record(body["record"], "record"));
      ++version;
    } else if (kind == "imported") {
      for (const auto& r : parse_dataset(body).records) add(r);
      ++version;
    } else {
      config = changed_config(config, kind, body);
      if (kind == "user_added") participants[body["token"]] = body["user"]["id"];
    }
  }

  void add(ResponseRecord r) {
    keys.insert(key_of(r));
    dataset.records.push_back(std::move(r));
  }

  void require_moderator(const std::string& token) const {
    if (token.empty()) throw AuthenticationError("missing bearer token");
    if (token == moderator_token) return;
    if (participants.count(token)) throw AuthorizationError("this operation needs the moderator token");
    throw AuthenticationError("unknown token for project " + config.id);
  }

  const UserInfo& participant(const std::string& token) const {
    if (token.empty()) throw AuthenticationError("missing bearer token");
    auto it = participants.find(token);
    if (it == participants.end()) {
      if (token == moderator_token) throw AuthorizationError("this operation needs a participant token");
      throw AuthenticationError("unknown token for project " + config.id);
    }
    return config.users[config.user_index(it->second)];
  }

  void require_state(Lifecycle s, const char* what) const {
    if (state != s) {
      throw StateError(std::string(what) + " requires the project to be " + std::string(to_string(s)) + ", it is " +
                       std::string(to_string(state)));
    }
  }

  std::vector<Criterion> tests_for(const UserInfo& u) const {
    std::vector<Criterion> out;
    for (auto c : config.criteria.enabled)
      if (c != Criterion::Acc || u.group == UserGroup::Expert) out.push_back(c);
    return out;
  }

  bool pass_complete(const UserInfo& u, const std::string& role) const {
    for (const auto& a : config.alternatives)
      for (auto c : tests_for(u))
        if (!keys.count({u.id, role, a.id, c})) return false;
    return true;
  }

  bool has_submissions(const std::string& user, const std::string& role) const {
    for (const auto& k : keys)
      if (std::get<0>(k) == user && std::get<1>(k) == role) return true;
    return false;
  }

  json session_json(const UserInfo& u) const {
    json out = {{"user", u.id}, {"group", std::string(to_string(u.group))}, {"state", std::string(to_string(state))}};
    auto it = bound_role.find(u.id);
    out["role"] = it == bound_role.end() ? json(nullptr) : json(it->second);
    json alts = json::array();
    for (const auto& a : config.alternatives) {
      json tests = json::object();
      for (auto c : tests_for(u)) {
        const bool done = it != bound_role.end() && keys.count({u.id, it->second, a.id, c});
        tests[std::string(to_string(c))] = done ? "done" : "pending";
      }
      alts.push_back({{"alternative", a.id}, {"tests", tests}});
    }
    out["alternatives"] = alts;
    out["complete"] = it != bound_role.end() && pass_complete(u, it->second);
    return out;
  }
};

ProjectService::ProjectService(EventStore& store, ServiceHooks hooks) : store_(store), hooks_(std::move(hooks)) {
  for (const auto& e : store_.all()) {
    if (e.kind == "project_created") {
      auto p = std::make_shared<Project>();
      projects_[e.project] = p;
    }
    auto it = projects_.find(e.project);
    if (it == projects_.end()) throw Error("event log: event " + std::to_string(e.seq) + " for unknown project");
    it->second->mutate(e.kind, e.body);
  }
}

ProjectService::~ProjectService() = default;

std::shared_ptr<ProjectService::Project> ProjectService::find(const std::string& id) const {
  std::shared_lock lock(mu_);
  auto it = projects_.find(id);
  if (it == projects_.end()) throw NotFoundError("no project '" + id + "'");
  return it->second;
}

// Caller holds the project's exclusive lock. The event is durable before the
// in-memory state changes.
void ProjectService::commit(Project& p, const std::string& kind, const json& body) {
  store_.append(p.config.id, kind, body, hooks_.clock());
  p.mutate(kind, body);
}

std::vector<std::string> ProjectService::project_ids() const {
  std::shared_lock lock(mu_);
  std::vector<std::string> out;
  for (const auto& [id, p] : projects_) out.push_back(id);
  return out;
}

json ProjectService::create_project(const json& body) {
  if (!body.is_object()) throw ValidationError("project: expected an object");
  json cfg = body;
  cfg.erase("judgments");
  if (!cfg.contains("id")) cfg["id"] = "p-" + hooks_.token().substr(0, 12);
  if (!cfg.contains("alternatives")) cfg["alternatives"] = json::array();
  if (!cfg.contains("criteria")) cfg["criteria"] = {{"enabled", json::array()}};
  const ProjectConfig config = parse_project(cfg);
  std::optional<JudgmentSet> judgments;
  if (body.contains("judgments")) {
    judgments = parse_judgments(body["judgments"]);
    derive_project_weights(*judgments);
  }

  json tokens = json::object();
  for (const auto& u : config.users) tokens[u.id] = hooks_.token();
  const json created = {{"config", to_json(config)}, {"moderator_token", hooks_.token()}, {"participant_tokens", tokens}};

  std::unique_lock lock(mu_);
  if (projects_.count(config.id)) throw ConflictError("project '" + config.id + "' already exists");
  auto p = std::make_shared<Project>();
  std::unique_lock plock(p->mu);
  store_.append(config.id, "project_created", created, hooks_.clock());
  p->mutate("project_created", created);
  projects_[config.id] = p;
  if (judgments) commit(*p, "judgments_set", to_json(*judgments));

  json out = {{"id", config.id},
              {"state", "draft"},
              {"moderator_token", created["moderator_token"]},
              {"participant_tokens", tokens}};
  if (p->weights) out["weights"] = to_json(p->weights->weights, p->weights->criteria);
  return out;
}

json ProjectService::get_project(const std::string& id, const std::string& token) const {
  auto p = find(id);
  std::shared_lock lock(p->mu);
  p->require_moderator(token);
  json out = {{"config", to_json(p->config)},
              {"state", std::string(to_string(p->state))},
              {"submissions", p->dataset.records.size()}};
  out["judgments"] = p->judgments ? to_json(*p->judgments) : json(nullptr);
  out["weights"] = p->weights ? to_json(p->weights->weights, p->weights->criteria) : json(nullptr);
  return out;
}

json ProjectService::patch_project(const std::string& id, const std::string& token, const json& body) {
  auto p = find(id);
  std::unique_lock lock(p->mu);
  p->require_moderator(token);
  p->require_state(Lifecycle::Draft, "changing the project");
  if (!body.is_object()) throw ValidationError("patch: expected an object");
  for (const auto& [k, v] : body.items()) {
    if (k != "name" && k != "group_weights") throw ValidationError("patch: field '" + k + "' cannot be changed here");
  }
  changed_config(p->config, "project_patched", body);
  commit(*p, "project_patched", body);
  return to_json(p->config);
}

json ProjectService::add_alternative(const std::string& id, const std::string& token, const json& body) {
  auto p = find(id);
  std::unique_lock lock(p->mu);
  p->require_moderator(token);
  p->require_state(Lifecycle::Draft, "adding alternatives");
  text_member(body, "id", "alternative");
  changed_config(p->config, "alternative_added", body);
  commit(*p, "alternative_added", body);
  return to_json(p->config)["alternatives"];
}

json ProjectService::set_criteria(const std::string& id, const std::string& token, const json& body) {
  auto p = find(id);
  std::unique_lock lock(p->mu);
  p->require_moderator(token);
  p->require_state(Lifecycle::Draft, "changing criteria");
  member(body, "enabled", "criteria");
  changed_config(p->config, "criteria_set", body);
  commit(*p, "criteria_set", body);
  return to_json(p->config)["criteria"];
}

json ProjectService::set_judgments(const std::string& id, const std::string& token, const json& body) {
  auto p = find(id);
  std::unique_lock lock(p->mu);
  p->require_moderator(token);
  p->require_state(Lifecycle::Draft, "changing judgments");
  const auto set = parse_judgments(body);
  derive_project_weights(set);
  commit(*p, "judgments_set", to_json(set));
  return to_json(p->weights->weights, p->weights->criteria);
}

json ProjectService::set_roles(const std::string& id, const std::string& token, const json& body) {
  auto p = find(id);
  std::unique_lock lock(p->mu);
  p->require_moderator(token);
  p->require_state(Lifecycle::Draft, "changing roles");
  const json event = {{"roles", body.is_array() ? body : member(body, "roles", "roles")}};
  changed_config(p->config, "roles_set", event);
  commit(*p, "roles_set", event);
  return to_json(p->config)["roles"];
}

json ProjectService::add_user(const std::string& id, const std::string& token, const json& body) {
  auto p = find(id);
  std::unique_lock lock(p->mu);
  p->require_moderator(token);
  if (p->state == Lifecycle::Closed) throw StateError("project is closed");
  const std::string user = text_member(body, "id", "user");
  const json event = {{"user", body}, {"token", hooks_.token()}};
  changed_config(p->config, "user_added", event);
  commit(*p, "user_added", event);
  return {{"user", user}, {"token", event["token"]}};
}

json ProjectService::set_state(const std::string& id, const std::string& token, const json& body) {
  auto p = find(id);
  std::unique_lock lock(p->mu);
  p->require_moderator(token);
  const Lifecycle target = parse_lifecycle(text_member(body, "state", "state"));
  if (target == Lifecycle::Collecting) {
    p->require_state(Lifecycle::Draft, "opening collection");
    validate_project(p->config, true);
    if (!p->weights) throw ValidationError("project has no criteria judgments");
    weights_for(p->config, *p->weights);
    const auto& w = p->weights->weights;
    if (!w.consistent) {
      throw ConsistencyError("judgments are inconsistent: CI = " + format_fixed(w.consistency_index, 3) + " > 0.10",
                             w.consistency_index);
    }
  } else if (target == Lifecycle::Closed) {
    p->require_state(Lifecycle::Collecting, "closing collection");
  } else {
    throw StateError("a project cannot return to draft");
  }
  commit(*p, "state_changed", {{"state", std::string(to_string(target))}});
  return {{"id", id}, {"state", std::string(to_string(p->state))}};
}

json ProjectService::session(const std::string& id, const std::string& token,
                             const std::optional<std::string>& user) const {
  auto p = find(id);
  std::shared_lock lock(p->mu);
  if (token == p->moderator_token && !token.empty()) {
    if (!user) throw ValidationError("session: the moderator must name a user");
    const int k = p->config.user_index(*user);
    if (k < 0) throw NotFoundError("no user '" + *user + "'");
    return p->session_json(p->config.users[k]);
  }
  return p->session_json(p->participant(token));
}

namespace {

void check_rebind(const ProjectConfig& cfg, const std::map<std::string, std::string>& bound, const UserInfo& u,
                  const std::string& role, bool complete, bool started) {
  if (cfg.role_index(role) < 0) throw NotFoundError("no role '" + role + "'");
  auto it = bound.find(u.id);
  if (it != bound.end() && it->second != role && started && !complete) {
    throw StateError("user " + u.id + " must finish the pass as " + it->second + " before switching roles");
  }
}

}  // namespace

json ProjectService::bind_role(const std::string& id, const std::string& token, const json& body) {
  auto p = find(id);
  std::unique_lock lock(p->mu);
  const auto& u = p->participant(token);
  p->require_state(Lifecycle::Collecting, "choosing a role");
  const std::string role = text_member(body, "role", "session");
  auto it = p->bound_role.find(u.id);
  if (it != p->bound_role.end() && it->second == role) return p->session_json(u);
  const bool started = it != p->bound_role.end() && p->has_submissions(u.id, it->second);
  const bool complete = it != p->bound_role.end() && p->pass_complete(u, it->second);
  check_rebind(p->config, p->bound_role, u, role, complete, started);
  commit(*p, "role_bound", {{"user", u.id}, {"role", role}});
  return p->session_json(u);
}

json ProjectService::role_dice(const std::string& id, const std::string& token) {
  auto p = find(id);
  std::unique_lock lock(p->mu);
  const auto& u = p->participant(token);
  p->require_state(Lifecycle::Collecting, "rolling for a role");
  if (p->config.roles.empty()) throw StateError("project has no roles");
  const auto& role = p->config.roles[hooks_.random() % p->config.roles.size()].id;
  auto it = p->bound_role.find(u.id);
  if (it == p->bound_role.end() || it->second != role) {
    const bool started = it != p->bound_role.end() && p->has_submissions(u.id, it->second);
    const bool complete = it != p->bound_role.end() && p->pass_complete(u, it->second);
    check_rebind(p->config, p->bound_role, u, role, complete, started);
    commit(*p, "role_bound", {{"user", u.id}, {"role", role}, {"dice", true}});
  }
  return p->session_json(u);
}

json ProjectService::submit(const std::string& id, const std::string& token, const json& body) {
  auto p = find(id);
  std::unique_lock lock(p->mu);
  const auto& u = p->participant(token);
  p->require_state(Lifecycle::Collecting, "submitting responses");
  auto bound = p->bound_role.find(u.id);
  if (bound == p->bound_role.end()) throw StateError("user " + u.id + " has not chosen a role");
  if (body.is_object() && body.contains("role") && body["role"] != bound->second) {
    throw StateError("user " + u.id + " is playing " + bound->second + " in this pass");
  }
  const json raw = {{"user", u.id},
                    {"role", bound->second},
                    {"alternative", member(body, "alternative", "submission")},
                    {"test", member(body, "test", "submission")},
                    {"payload", member(body, "payload", "submission")}};
  const auto record = parse_record(raw, "submission");
  validate_dataset(p->config, Dataset{{record}});
  if (p->keys.count(key_of(record))) {
    throw ConflictError(std::string(to_string(record.test)) + " already submitted by " + u.id + " as " + record.role +
                        " for " + record.alternative);
  }
  commit(*p, "submitted", {{"record", to_json(record)}});
  return {{"accepted", true}, {"session", p->session_json(u)}};
}

json ProjectService::import_dataset(const std::string& id, const std::string& token, const json& body) {
  auto p = find(id);
  std::unique_lock lock(p->mu);
  p->require_moderator(token);
  p->require_state(Lifecycle::Collecting, "importing responses");
  const Dataset incoming = parse_dataset(body);
  Dataset combined = p->dataset;
  combined.records.insert(combined.records.end(), incoming.records.begin(), incoming.records.end());
  validate_dataset(p->config, combined);
  commit(*p, "imported", to_json(incoming));
  return {{"accepted", incoming.records.size()}, {"total", p->dataset.records.size()}};
}

json ProjectService::compute(const std::string& id, const std::string& token, const json& body) {
  auto p = find(id);
  std::lock_guard job(p->compute_mu);

  ProjectConfig config;
  std::optional<ProjectWeights> weights;
  Dataset dataset;
  std::uint64_t version = 0;
  EvaluationOptions options;
  {
    std::shared_lock lock(p->mu);
    p->require_moderator(token);
    if (p->state == Lifecycle::Draft) throw StateError("results need the project to be collecting or closed");
    if (body.is_object() && body.contains("role") && !body["role"].is_null()) {
      options.role = text_member(body, "role", "compute");
      if (p->config.role_index(*options.role) < 0) throw NotFoundError("no role '" + *options.role + "'");
    }
    config = p->config;
    if (!p->weights) throw StateError("project has no criteria weights");
    weights = p->weights;
    dataset = p->dataset;
    version = p->version;
  }

  // Ingestion continues while the pipeline runs.
  const auto bundle = evaluate(config, weights_for(config, *weights), dataset, options);
  json doc = compose_report(config, &*weights, bundle);

  std::unique_lock lock(p->mu);
  p->reports[options.role.value_or("all")] = {doc, version};
  return doc;
}

json ProjectService::report(const std::string& id, const std::string& token,
                            const std::optional<std::string>& role) const {
  auto p = find(id);
  std::shared_lock lock(p->mu);
  p->require_moderator(token);
  const std::string scope = role.value_or("all");
  auto it = p->reports.find(scope);
  if (it == p->reports.end()) throw NotFoundError("no computed report for scope '" + scope + "'");
  return {{"scope", scope}, {"stale", it->second.version != p->version}, {"report", it->second.report}};
}

json ProjectService::export_log(const std::string& id, const std::string& token) const {
  auto p = find(id);
  {
    std::shared_lock lock(p->mu);
    p->require_moderator(token);
  }
  json events = json::array();
  for (const auto& e : store_.for_project(id)) {
    events.push_back({{"seq", e.seq}, {"kind", e.kind}, {"body", e.body}, {"at", e.at}});
  }
  return {{"project", id}, {"events", events}};
}

void append_export(EventStore& store, const json& exported) {
  const std::string project = exported.at("project").get<std::string>();
  for (const auto& e : exported.at("events")) {
    store.append(project, e.at("kind").get<std::string>(), e.at("body"), e.at("at").get<std::string>());
  }
}

}  // namespace linguse
