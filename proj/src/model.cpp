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
#include "linguse/model.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "linguse/errors.hpp"

namespace linguse {

using nlohmann::json;

namespace {

const json& field(const json& j, const char* key, const std::string& path) {
  if (!j.is_object()) throw ValidationError(path + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw ValidationError(path + "." + key + ": missing");
  return *it;
}

std::string str(const json& j, const std::string& path) {
  if (!j.is_string()) throw ValidationError(path + ": expected a string");
  return j.get<std::string>();
}

double num(const json& j, const std::string& path) {
  if (!j.is_number()) throw ValidationError(path + ": expected a number");
  return j.get<double>();
}

int integer(const json& j, const std::string& path) {
  if (!j.is_number_integer()) throw ValidationError(path + ": expected an integer");
  return j.get<int>();
}

const json& array(const json& j, const std::string& path) {
  if (!j.is_array()) throw ValidationError(path + ": expected an array");
  return j;
}

std::string opt_str(const json& j, const char* key, const std::string& path) {
  auto it = j.find(key);
  return it == j.end() || it->is_null() ? std::string() : str(*it, path + "." + key);
}

std::string at(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

template <typename F>
auto with_path(const std::string& path, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const ValidationError&) {
    throw;
  } catch (const Error& e) {
    throw ValidationError(path + ": " + e.what());
  }
}

int parse_term(const json& j, const TermSet& terms, const std::string& path) {
  if (j.is_number_integer()) {
    const int i = j.get<int>();
    if (i < 0 || i > terms.max_index()) throw ValidationError(path + ": label index " + std::to_string(i) + " out of range");
    return i;
  }
  const std::string s = str(j, path);
  const int i = terms.index_of(s);
  if (i < 0) throw ValidationError(path + ": unknown label '" + s + "'");
  return i;
}

}  // namespace

int ProjectConfig::alternative_index(const std::string& key) const {
  for (std::size_t i = 0; i < alternatives.size(); ++i)
    if (alternatives[i].id == key) return static_cast<int>(i);
  return -1;
}

int ProjectConfig::user_index(const std::string& key) const {
  for (std::size_t i = 0; i < users.size(); ++i)
    if (users[i].id == key) return static_cast<int>(i);
  return -1;
}

int ProjectConfig::role_index(const std::string& key) const {
  for (std::size_t i = 0; i < roles.size(); ++i)
    if (roles[i].id == key) return static_cast<int>(i);
  return -1;
}

int ProjectConfig::criterion_index(Criterion c) const {
  auto it = std::find(criteria.enabled.begin(), criteria.enabled.end(), c);
  return it == criteria.enabled.end() ? -1 : static_cast<int>(it - criteria.enabled.begin());
}

double ProjectConfig::user_weight(const UserInfo& user) const {
  if (user.weight) return *user.weight;
  return user.group == UserGroup::Expert ? group_weights.expert : group_weights.end_user;
}

void validate_project(const ProjectConfig& p, bool require_ready) {
  auto unique = [](const auto& items, const char* what) {
    std::set<std::string> seen;
    for (const auto& item : items) {
      if (item.id.empty()) throw ValidationError(std::string(what) + " with empty id");
      if (!seen.insert(item.id).second) throw ValidationError("duplicate " + std::string(what) + " id '" + item.id + "'");
    }
  };
  unique(p.alternatives, "alternative");
  unique(p.users, "user");
  unique(p.roles, "role");
  unique(p.criteria.ut_tasks, "task");
  std::set<Criterion> enabled(p.criteria.enabled.begin(), p.criteria.enabled.end());
  if (enabled.size() != p.criteria.enabled.size()) throw ValidationError("criterion enabled twice");
  for (const auto& t : p.criteria.ut_tasks) {
    if (!(t.max_time > 0.0)) throw ValidationError("task " + t.id + ": max_time must be positive");
  }
  if (enabled.count(Criterion::Ut) && p.criteria.ut_tasks.empty()) {
    throw ValidationError("UT is enabled but no tasks are defined");
  }
  auto unit = [](double w, const std::string& what) {
    if (!(w >= 0.0 && w <= 1.0)) throw ValidationError(what + " must lie in [0, 1]");
  };
  unit(p.group_weights.expert, "expert group weight");
  unit(p.group_weights.end_user, "end-user group weight");
  for (const auto& u : p.users) {
    if (u.weight) unit(*u.weight, "weight of user " + u.id);
  }
  double total = 0.0;
  for (const auto& r : p.roles) {
    if (!(r.weight >= 0.0) || !std::isfinite(r.weight)) throw ValidationError("role " + r.id + ": weight must be >= 0");
    total += r.weight;
  }
  if (!p.roles.empty() && total <= 0.0) throw ValidationError("role weights sum to zero");
  if (require_ready) {
    if (p.alternatives.empty()) throw ValidationError("project needs at least one alternative");
    if (p.criteria.enabled.empty()) throw ValidationError("project needs at least one enabled criterion");
    if (p.roles.empty()) throw ValidationError("project needs at least one role");
  }
}

ProjectWeights derive_project_weights(const JudgmentSet& set) {
  const int m = static_cast<int>(set.criteria.size());
  if (m == 0) throw ValidationError("judgments: no criteria");
  std::map<std::string, int> index;
  for (int i = 0; i < m; ++i) {
    if (!index.emplace(set.criteria[i], i).second) throw ValidationError("judgments: criterion '" + set.criteria[i] + "' listed twice");
  }
  std::vector<PairJudgment> pairs;
  for (std::size_t k = 0; k < set.judgments.size(); ++k) {
    const auto& j = set.judgments[k];
    auto l = index.find(j.left), r = index.find(j.right);
    if (l == index.end()) throw ValidationError(at("judgments", k) + ".left: unknown criterion '" + j.left + "'");
    if (r == index.end()) throw ValidationError(at("judgments", k) + ".right: unknown criterion '" + j.right + "'");
    pairs.push_back({l->second, r->second, j.label});
  }
  const JudgmentScale scale = set.scale.empty() ? JudgmentScale::standard() : JudgmentScale::standard().merged(set.scale);
  auto matrix = build_pairwise_matrix(m, pairs, scale);
  auto weights = derive_weights(matrix);
  return {set.criteria, std::move(matrix), std::move(weights)};
}

std::vector<double> weights_for(const ProjectConfig& project, const ProjectWeights& w) {
  std::vector<double> out;
  if (w.criteria.size() != project.criteria.enabled.size()) {
    throw ValidationError("judged criteria do not match the enabled criteria");
  }
  for (Criterion c : project.criteria.enabled) {
    auto it = std::find(w.criteria.begin(), w.criteria.end(), std::string(to_string(c)));
    if (it == w.criteria.end()) {
      throw ValidationError("criterion " + std::string(to_string(c)) + " is enabled but has no judgments");
    }
    out.push_back(w.weights.normalized[it - w.criteria.begin()]);
  }
  return out;
}

ProjectConfig parse_project(const json& j) {
  const std::string path = "project";
  ProjectConfig p;
  p.id = str(field(j, "id", path), path + ".id");
  p.name = opt_str(j, "name", path);
  const auto& alts = array(field(j, "alternatives", path), path + ".alternatives");
  for (std::size_t i = 0; i < alts.size(); ++i) {
    const auto ap = at(path + ".alternatives", i);
    p.alternatives.push_back({str(field(alts[i], "id", ap), ap + ".id"), opt_str(alts[i], "name", ap),
                              opt_str(alts[i], "url", ap), opt_str(alts[i], "logo", ap)});
  }
  const auto& crit = field(j, "criteria", path);
  const auto& enabled = array(field(crit, "enabled", path + ".criteria"), path + ".criteria.enabled");
  for (std::size_t i = 0; i < enabled.size(); ++i) {
    const auto ep = at(path + ".criteria.enabled", i);
    p.criteria.enabled.push_back(with_path(ep, [&] { return parse_criterion(str(enabled[i], ep)); }));
  }
  if (auto it = crit.find("ut_tasks"); it != crit.end()) {
    const auto tp = path + ".criteria.ut_tasks";
    const auto& tasks = array(*it, tp);
    for (std::size_t i = 0; i < tasks.size(); ++i) {
      const auto ip = at(tp, i);
      p.criteria.ut_tasks.push_back({str(field(tasks[i], "id", ip), ip + ".id"), opt_str(tasks[i], "description", ip),
                                     num(field(tasks[i], "max_time", ip), ip + ".max_time")});
    }
  }
  if (auto it = j.find("users"); it != j.end()) {
    const auto& users = array(*it, path + ".users");
    for (std::size_t i = 0; i < users.size(); ++i) {
      const auto up = at(path + ".users", i);
      UserInfo u;
      u.id = str(field(users[i], "id", up), up + ".id");
      u.name = opt_str(users[i], "name", up);
      u.group = with_path(up + ".group", [&] { return parse_user_group(str(field(users[i], "group", up), up + ".group")); });
      if (auto w = users[i].find("weight"); w != users[i].end() && !w->is_null()) u.weight = num(*w, up + ".weight");
      p.users.push_back(std::move(u));
    }
  }
  if (auto it = j.find("group_weights"); it != j.end()) {
    const auto gp = path + ".group_weights";
    if (auto e = it->find("expert"); e != it->end()) p.group_weights.expert = num(*e, gp + ".expert");
    if (auto e = it->find("end_user"); e != it->end()) p.group_weights.end_user = num(*e, gp + ".end_user");
  }
  if (auto it = j.find("roles"); it != j.end()) {
    const auto& roles = array(*it, path + ".roles");
    for (std::size_t i = 0; i < roles.size(); ++i) {
      const auto rp = at(path + ".roles", i);
      p.roles.push_back({str(field(roles[i], "id", rp), rp + ".id"), opt_str(roles[i], "label", rp),
                         num(field(roles[i], "weight", rp), rp + ".weight")});
    }
  }
  validate_project(p, false);
  return p;
}

json to_json(const ProjectConfig& p) {
  json alts = json::array();
  for (const auto& a : p.alternatives) {
    json o = {{"id", a.id}, {"name", a.name}, {"url", a.url}};
    if (!a.logo.empty()) o["logo"] = a.logo;
    alts.push_back(o);
  }
  json enabled = json::array();
  for (auto c : p.criteria.enabled) enabled.push_back(std::string(to_string(c)));
  json tasks = json::array();
  for (const auto& t : p.criteria.ut_tasks) {
    tasks.push_back({{"id", t.id}, {"description", t.description}, {"max_time", t.max_time}});
  }
  json users = json::array();
  for (const auto& u : p.users) {
    json o = {{"id", u.id}, {"name", u.name}, {"group", std::string(to_string(u.group))}};
    if (u.weight) o["weight"] = *u.weight;
    users.push_back(o);
  }
  json roles = json::array();
  for (const auto& r : p.roles) roles.push_back({{"id", r.id}, {"label", r.label}, {"weight", r.weight}});
  return {{"id", p.id},
          {"name", p.name},
          {"alternatives", alts},
          {"criteria", {{"enabled", enabled}, {"ut_tasks", tasks}}},
          {"users", users},
          {"group_weights", {{"expert", p.group_weights.expert}, {"end_user", p.group_weights.end_user}}},
          {"roles", roles}};
}

JudgmentSet parse_judgments(const json& j) {
  const std::string path = "judgments";
  JudgmentSet s;
  const auto& crit = array(field(j, "criteria", path), path + ".criteria");
  for (std::size_t i = 0; i < crit.size(); ++i) s.criteria.push_back(str(crit[i], at(path + ".criteria", i)));
  const auto& list = array(field(j, "judgments", path), path + ".judgments");
  for (std::size_t i = 0; i < list.size(); ++i) {
    const auto jp = at(path + ".judgments", i);
    s.judgments.push_back({str(field(list[i], "left", jp), jp + ".left"), str(field(list[i], "right", jp), jp + ".right"),
                           str(field(list[i], "label", jp), jp + ".label")});
  }
  if (auto it = j.find("scale"); it != j.end()) {
    if (!it->is_object()) throw ValidationError(path + ".scale: expected an object");
    for (const auto& [label, tfn] : it->items()) {
      const auto sp = path + ".scale." + label;
      const auto& arr = array(tfn, sp);
      if (arr.size() != 3) throw ValidationError(sp + ": expected [l, m, u]");
      s.scale[label] = {num(arr[0], sp), num(arr[1], sp), num(arr[2], sp)};
    }
  }
  return s;
}

json to_json(const JudgmentSet& s) {
  json list = json::array();
  for (const auto& j : s.judgments) list.push_back({{"left", j.left}, {"right", j.right}, {"label", j.label}});
  json out = {{"criteria", s.criteria}, {"judgments", list}};
  if (!s.scale.empty()) {
    json scale = json::object();
    for (const auto& [label, v] : s.scale) scale[label] = {v.l, v.m, v.u};
    out["scale"] = scale;
  }
  return out;
}

ResponsePayload parse_payload(Criterion test, const json& j, const std::string& path) {
  switch (test) {
    case Criterion::Sus: {
      const auto& items = array(field(j, "items", path), path + ".items");
      SusResponse r;
      for (std::size_t i = 0; i < items.size(); ++i) r.items.push_back(integer(items[i], at(path + ".items", i)));
      with_path(path, [&] { validate(r); return 0; });
      return r;
    }
    case Criterion::Nps: {
      NpsResponse r{integer(field(j, "ltr", path), path + ".ltr")};
      with_path(path, [&] { validate(r); return 0; });
      return r;
    }
    case Criterion::Ut: {
      const auto tp = path + ".tasks";
      const auto& tasks = array(field(j, "tasks", path), tp);
      std::vector<UtTaskResponse> out;
      for (std::size_t i = 0; i < tasks.size(); ++i) {
        const auto ip = at(tp, i);
        const auto& s = field(tasks[i], "success", ip);
        if (!s.is_boolean()) throw ValidationError(ip + ".success: expected a boolean");
        out.push_back({str(field(tasks[i], "task", ip), ip + ".task"), num(field(tasks[i], "time", ip), ip + ".time"),
                       s.get<bool>(), parse_term(field(tasks[i], "satisfaction", ip), satisfaction_terms(), ip + ".satisfaction")});
      }
      return out;
    }
    case Criterion::Acc: {
      AccResponse r{parse_term(field(j, "label", path), accessibility_terms(), path + ".label")};
      return r;
    }
  }
  throw ValidationError(path + ": unknown test");
}

json payload_to_json(const ResponsePayload& p) {
  return std::visit(
      [](const auto& v) -> json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, SusResponse>) {
          return {{"items", v.items}};
        } else if constexpr (std::is_same_v<T, NpsResponse>) {
          return {{"ltr", v.ltr}};
        } else if constexpr (std::is_same_v<T, AccResponse>) {
          return {{"label", accessibility_terms().label(v.label)}};
        } else {
          json tasks = json::array();
          for (const auto& t : v) {
            tasks.push_back({{"task", t.task_id}, {"time", t.time_taken}, {"success", t.success}, {"satisfaction", t.satisfaction}});
          }
          return {{"tasks", tasks}};
        }
      },
      p);
}

ResponseRecord parse_record(const json& j, const std::string& path) {
  ResponseRecord r;
  r.user = str(field(j, "user", path), path + ".user");
  r.role = str(field(j, "role", path), path + ".role");
  r.alternative = str(field(j, "alternative", path), path + ".alternative");
  r.test = with_path(path + ".test", [&] { return parse_criterion(str(field(j, "test", path), path + ".test")); });
  r.payload = parse_payload(r.test, field(j, "payload", path), path + ".payload");
  return r;
}

json to_json(const ResponseRecord& r) {
  return {{"user", r.user},
          {"role", r.role},
          {"alternative", r.alternative},
          {"test", std::string(to_string(r.test))},
          {"payload", payload_to_json(r.payload)}};
}

Dataset parse_dataset(const json& j) {
  Dataset d;
  const auto& records = array(field(j, "records", "dataset"), "dataset.records");
  for (std::size_t i = 0; i < records.size(); ++i) d.records.push_back(parse_record(records[i], at("records", i)));
  return d;
}

json to_json(const Dataset& d) {
  json records = json::array();
  for (const auto& r : d.records) records.push_back(to_json(r));
  return {{"records", records}};
}

json to_json(const CriteriaWeights& w, const std::vector<std::string>& criteria) {
  return {{"criteria", criteria},
          {"raw", w.raw},
          {"normalized", w.normalized},
          {"ci", w.consistency_index},
          {"consistent", w.consistent}};
}

json tuple_json(const TwoTuple& t) {
  return {{"set", "S" + std::to_string(t.granularity())}, {"index", t.index()}, {"alpha", t.alpha()}};
}

json sus_value_json(const UnbalancedSusValue& v) {
  return {{"scale", "SUS"}, {"label", std::string(to_string(v.label()))}, {"alpha", v.alpha()}, {"level", v.level()}};
}

json load_json_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError(path.string() + ": cannot open file");
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    const std::size_t pos = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    const auto line = 1 + std::count(text.begin(), text.begin() + pos, '\n');
    const auto last_nl = text.rfind('\n', pos == 0 ? 0 : pos - 1);
    const auto column = last_nl == std::string::npos ? pos + 1 : pos - last_nl;
    throw ValidationError(path.string() + ":" + std::to_string(line) + ":" + std::to_string(column) +
                          ": invalid JSON");
  }
}

}  // namespace linguse
