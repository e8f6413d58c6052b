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
#include "linguse/pipeline.hpp"

#include <map>
#include <set>
#include <tuple>

#include "linguse/errors.hpp"

namespace linguse {

const ScopedRanking* ResultBundle::ranking(const std::string& scope) const {
  for (const auto& r : rankings)
    if (r.scope == scope) return &r;
  return nullptr;
}

const RoleResult* ResultBundle::role(const std::string& id) const {
  for (const auto& r : roles)
    if (r.role == id) return &r;
  return nullptr;
}

void validate_dataset(const ProjectConfig& project, const Dataset& dataset) {
  std::set<std::tuple<std::string, std::string, std::string, Criterion>> seen;
  for (std::size_t k = 0; k < dataset.records.size(); ++k) {
    const auto& r = dataset.records[k];
    const std::string where = "records[" + std::to_string(k) + "]";
    const int u = project.user_index(r.user);
    if (u < 0) throw ValidationError(where + ": unknown user '" + r.user + "'");
    if (project.role_index(r.role) < 0) throw ValidationError(where + ": unknown role '" + r.role + "'");
    if (project.alternative_index(r.alternative) < 0) {
      throw ValidationError(where + ": unknown alternative '" + r.alternative + "'");
    }
    if (project.criterion_index(r.test) < 0) {
      throw ValidationError(where + ": test " + std::string(to_string(r.test)) + " is not enabled");
    }
    if (r.payload.index() != static_cast<std::size_t>(r.test)) {
      throw ValidationError(where + ": payload does not match test " + std::string(to_string(r.test)));
    }
    if (r.test == Criterion::Acc && project.users[u].group != UserGroup::Expert) {
      throw AuthorizationError(where + ": user " + r.user + " is not an expert and cannot rate accessibility");
    }
    if (r.test == Criterion::Ut) {
      try {
        validate(std::get<std::vector<UtTaskResponse>>(r.payload), project.criteria.ut_tasks);
      } catch (const ValidationError& e) {
        throw ValidationError(where + ": " + e.what());
      }
    }
    if (!seen.emplace(r.user, r.role, r.alternative, r.test).second) {
      throw ConflictError(where + ": duplicate " + std::string(to_string(r.test)) + " response of " + r.user +
                          " under " + r.role + " for " + r.alternative);
    }
  }
}

namespace {

void absent_warnings(const std::string& scope, const UnifiedDecisionMatrix& m, const ProjectConfig& project,
                     std::vector<std::string>& warnings) {
  for (int j = 0; j < m.criteria(); ++j) {
    std::string missing;
    for (int i = 0; i < m.alternatives(); ++i) {
      if (!m.at(i, j)) missing += (missing.empty() ? "" : ", ") + project.alternatives[i].id;
    }
    if (!missing.empty()) {
      warnings.push_back(scope + ": no " + std::string(to_string(project.criteria.enabled[j])) + " value for " +
                         missing + "; scored as the worst label");
    }
  }
}

}  // namespace

ResultBundle evaluate(const ProjectConfig& project, const std::vector<double>& wc, const Dataset& dataset,
                      const EvaluationOptions& options) {
  validate_project(project, true);
  validate_dataset(project, dataset);
  const int n = static_cast<int>(project.alternatives.size());
  const int m = static_cast<int>(project.criteria.enabled.size());
  if (static_cast<int>(wc.size()) != m) {
    throw ValidationError("got " + std::to_string(wc.size()) + " criteria weights for " + std::to_string(m) +
                          " enabled criteria");
  }
  if (options.role && project.role_index(*options.role) < 0) {
    throw ValidationError("unknown role '" + *options.role + "'");
  }

  ResultBundle b;
  b.project = project.id;
  for (const auto& a : project.alternatives) b.alternatives.push_back(a.id);
  for (auto c : project.criteria.enabled) b.criteria.emplace_back(to_string(c));
  b.wc = wc;
  b.role_filter = options.role;

  // (role, user) -> responses per alternative, in declaration order.
  std::map<std::pair<int, int>, std::vector<AlternativeResponses>> passes;
  std::vector<std::vector<NpsResponse>> nps(n);
  for (const auto& r : dataset.records) {
    if (options.role && r.role != *options.role) continue;
    const int role = project.role_index(r.role);
    const int user = project.user_index(r.user);
    const int alt = project.alternative_index(r.alternative);
    auto& row = passes[{role, user}];
    row.resize(n);
    auto& cell = row[alt];
    std::visit(
        [&](const auto& p) {
          using T = std::decay_t<decltype(p)>;
          if constexpr (std::is_same_v<T, SusResponse>) cell.sus = p;
          else if constexpr (std::is_same_v<T, NpsResponse>) cell.nps = p, nps[alt].push_back(p);
          else if constexpr (std::is_same_v<T, AccResponse>) cell.acc = p;
          else cell.ut = p;
        },
        r.payload);
    if (r.test == Criterion::Acc) {
      b.acc.push_back({r.user, r.alternative, std::get<AccResponse>(r.payload).label});
    }
  }
  for (const auto& v : nps) b.nps.push_back(nps_summary(v));

  if (passes.empty()) {
    b.insufficient_data = true;
    b.warnings.push_back(options.role ? "no responses for role " + *options.role : "no responses collected");
    return b;
  }

  std::vector<double> wu;
  for (const auto& u : project.users) wu.push_back(project.user_weight(u));

  std::vector<UnifiedDecisionMatrix> role_matrices;
  std::vector<double> role_weights;
  for (int l = 0; l < static_cast<int>(project.roles.size()); ++l) {
    const auto& role = project.roles[l];
    if (options.role && role.id != *options.role) continue;
    std::vector<bool> participated(project.users.size(), false);
    std::vector<int> members;
    std::vector<UnifiedDecisionMatrix> uids;
    for (int k = 0; k < static_cast<int>(project.users.size()); ++k) {
      auto it = passes.find({l, k});
      if (it == passes.end()) continue;
      const auto& user = project.users[k];
      auto id = build_id_matrix(user.id, user.group, role.id, project.criteria.enabled, it->second,
                                project.criteria.ut_tasks);
      auto uid = unify_matrix(id);
      uids.push_back(uid);
      b.individuals.push_back({user.id, role.id, std::move(id), std::move(uid)});
      participated[k] = true;
      members.push_back(k);
      for (int i = 0; i < n; ++i) {
        if (const auto& ut = it->second[i].ut) {
          b.ut_users.push_back({user.id, role.id, project.alternatives[i].id,
                                ut_user_metrics(*ut, project.criteria.ut_tasks)});
        }
      }
    }
    if (members.empty()) {
      b.warnings.push_back("role " + role.id + " has no participants; excluded from the global aggregation");
      continue;
    }
    std::vector<double> w_all;
    try {
      w_all = role_user_weights(wu, participated);
    } catch (const DomainError&) {
      b.warnings.push_back("role " + role.id + " has only zero-weight participants; excluded");
      continue;
    }
    RoleResult rr{role.id, {}, {}, role.weight, UnifiedDecisionMatrix(n, m), {}};
    std::vector<double> w;
    for (int k : members) {
      rr.participants.push_back(project.users[k].id);
      rr.user_weights.push_back(w_all[k]);
      w.push_back(w_all[k]);
    }
    rr.ucd_matrix = aggregate_role(uids, w);
    rr.ucd = ucd_vector(rr.ucd_matrix, wc);
    absent_warnings("role " + role.id, rr.ucd_matrix, project, b.warnings);

    for (const auto& task : project.criteria.ut_tasks) {
      if (project.criterion_index(Criterion::Ut) < 0) break;
      for (int i = 0; i < n; ++i) {
        std::vector<UtTaskAnswer> answers;
        for (std::size_t p = 0; p < members.size(); ++p) {
          const auto& ut = passes.at({l, members[p]})[i].ut;
          if (!ut) continue;
          for (const auto& t : *ut) {
            if (t.task_id == task.id) answers.push_back({w[p], t});
          }
        }
        b.task_metrics.push_back({task.id, role.id, project.alternatives[i].id, ut_task_role_metrics(task, answers)});
      }
    }
    role_matrices.push_back(rr.ucd_matrix);
    role_weights.push_back(role.weight);
    b.roles.push_back(std::move(rr));
  }

  if (b.roles.empty()) {
    b.insufficient_data = true;
    b.warnings.push_back("no role has weighted participants");
    return b;
  }
  double total = 0.0;
  for (double x : role_weights) total += x;
  if (total <= 0.0) {
    b.insufficient_data = true;
    b.warnings.push_back("evaluated roles all carry zero weight");
    return b;
  }
  const auto wr = normalize_weights(role_weights);
  for (std::size_t l = 0; l < b.roles.size(); ++l) b.roles[l].weight = wr[l];

  b.global = aggregate_global(role_matrices, wr);
  b.global_ucd = ucd_vector(*b.global, wc);
  absent_warnings("global", *b.global, project, b.warnings);

  std::vector<std::pair<std::string, UnifiedDecisionMatrix>> scoped;
  std::vector<ScopedUcd> vectors;
  for (const auto& rr : b.roles) {
    scoped.emplace_back(rr.role, rr.ucd_matrix);
    vectors.push_back({rr.role, rr.ucd});
  }
  vectors.push_back({"global", b.global_ucd});
  b.rankings = rank_all(scoped, *b.global, wc);
  b.aur = retranslate_vectors(vectors);
  return b;
}

}  // namespace linguse
