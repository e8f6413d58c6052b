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
#include "linguse/document.hpp"

#include <algorithm>
#include <sstream>

namespace linguse {

using nlohmann::json;

namespace {

json matrix_json(const UnifiedDecisionMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.alternatives(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.criteria(); ++j) {
      const auto& cell = m.at(i, j);
      row.push_back(cell ? tuple_json(*cell) : json(nullptr));
    }
    rows.push_back(row);
  }
  return rows;
}

json cell_json(const LinguisticCell& c) {
  if (const auto* v = std::get_if<UnbalancedSusValue>(&c)) return sus_value_json(*v);
  return tuple_json(std::get<TwoTuple>(c));
}

json metrics_json(const UtMetrics& m) {
  return {{"efficiency", m.efficiency_pct}, {"success", m.success_pct}, {"satisfaction", tuple_json(m.satisfaction)}};
}

TwoTuple tuple_from(const json& j) {
  const std::string set = j.at("set").get<std::string>();
  return TwoTuple(j.at("index").get<int>(), j.at("alpha").get<double>(), std::stoi(set.substr(1)));
}

UnbalancedSusValue sus_from(const json& j) {
  return UnbalancedSusValue(parse_sus_label(j.at("label").get<std::string>()), j.at("alpha").get<double>(),
                            j.at("level").get<int>());
}

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

// Left-aligned columns separated by two spaces.
std::string table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& r : rows) {
    width.resize(std::max(width.size(), r.size()), 0);
    for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());
  }
  std::string out;
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t c = 0; c < r.size(); ++c) line += (c ? "  " : "") + (c + 1 < r.size() ? pad(r[c], width[c]) : r[c]);
    out += "  " + line + "\n";
  }
  return out;
}

}  // namespace

json compose_report(const ProjectConfig& project, const ProjectWeights* weights, const ResultBundle& b) {
  json doc;
  doc["project"] = {{"id", project.id}, {"name", project.name}};
  doc["scope"] = b.role_filter ? *b.role_filter : "all";
  doc["status"] = b.insufficient_data ? "insufficient data" : "complete";

  json alts = json::array();
  for (const auto& a : project.alternatives) alts.push_back({{"id", a.id}, {"name", a.name}});
  doc["alternatives"] = alts;

  if (weights) {
    doc["criteria_weights"] = to_json(weights->weights, weights->criteria);
    doc["criteria_weights"]["applied"] = b.wc;
  } else {
    doc["criteria_weights"] = {{"criteria", b.criteria}, {"applied", b.wc}};
  }
  doc["criteria_weights"]["applied_order"] = b.criteria;

  json rankings = json::array();
  for (const auto& r : b.rankings) {
    json order = json::array();
    for (int i : r.closeness.ranking) order.push_back(b.alternatives[i]);
    rankings.push_back({{"scope", r.scope},
                        {"order", order},
                        {"rc", r.closeness.rc},
                        {"d_plus", r.closeness.d_plus},
                        {"d_minus", r.closeness.d_minus},
                        {"positive_ideal", r.ideals.positive},
                        {"negative_ideal", r.ideals.negative}});
  }
  doc["rankings"] = rankings;

  json aur = json::array();
  for (const auto& e : b.aur.entries) {
    aur.push_back({{"scope", e.scope},
                   {"alternative", b.alternatives[e.alternative]},
                   {"ucd", tuple_json(e.ucd)},
                   {"adjective", sus_value_json(e.value)}});
  }
  doc["aur"] = aur;
  json usability = json::array();
  for (std::size_t i = 0; i < b.aur.usability.size(); ++i) {
    usability.push_back({{"alternative", b.alternatives[i]}, {"adjective", std::string(to_string(b.aur.usability[i]))}});
  }
  doc["usability"] = usability;

  json roles = json::array();
  for (const auto& r : b.roles) {
    roles.push_back({{"role", r.role},
                     {"weight", r.weight},
                     {"participants", r.participants},
                     {"user_weights", r.user_weights},
                     {"cells", matrix_json(r.ucd_matrix)}});
  }
  doc["matrices"] = {{"roles", roles}, {"global", b.global ? matrix_json(*b.global) : json(nullptr)}};

  json individuals = json::array();
  for (const auto& ind : b.individuals) {
    json id_rows = json::array();
    for (int i = 0; i < ind.id.alternatives(); ++i) {
      json row = json::array();
      for (int j = 0; j < static_cast<int>(ind.id.criteria().size()); ++j) {
        const auto& c = ind.id.at(i, j);
        row.push_back(c ? cell_json(*c) : json(nullptr));
      }
      id_rows.push_back(row);
    }
    individuals.push_back({{"user", ind.user}, {"role", ind.role}, {"id", id_rows}, {"uid", matrix_json(ind.uid)}});
  }
  doc["individuals"] = individuals;

  json nps = json::array();
  for (std::size_t i = 0; i < b.nps.size(); ++i) {
    if (const auto& s = b.nps[i]) {
      nps.push_back({{"alternative", b.alternatives[i]},
                     {"promoters", s->promoters},
                     {"passives", s->passives},
                     {"detractors", s->detractors},
                     {"nps", s->nps}});
    } else {
      nps.push_back({{"alternative", b.alternatives[i]}, {"status", "insufficient data"}});
    }
  }
  doc["nps"] = nps;

  json ut_users = json::array();
  for (const auto& u : b.ut_users) {
    json row = metrics_json(u.metrics);
    row["user"] = u.user;
    row["role"] = u.role;
    row["alternative"] = u.alternative;
    ut_users.push_back(row);
  }
  doc["ut_users"] = ut_users;

  json tasks = json::array();
  for (const auto& t : b.task_metrics) {
    json row = t.metrics ? metrics_json(*t.metrics) : json{{"status", "not available"}};
    row["task"] = t.task;
    row["scope"] = t.scope;
    row["alternative"] = t.alternative;
    tasks.push_back(row);
  }
  doc["ut_tasks"] = tasks;

  json acc = json::array();
  for (const auto& a : b.acc) {
    acc.push_back({{"user", a.user}, {"alternative", a.alternative}, {"label", accessibility_terms().label(a.label)}});
  }
  doc["acc"] = acc;
  doc["warnings"] = b.warnings;
  return doc;
}

std::string render_text(const json& doc) {
  std::ostringstream os;
  os << "Usability report: " << doc["project"]["name"].get<std::string>() << " (" << doc["project"]["id"].get<std::string>()
     << ")\n";
  os << "Scope: " << doc["scope"].get<std::string>() << "\n";

  const auto& cw = doc["criteria_weights"];
  os << "\nCriteria weights\n";
  {
    std::vector<std::vector<std::string>> rows{{"criterion", "weight"}};
    for (std::size_t j = 0; j < cw["applied_order"].size(); ++j) {
      rows.push_back({cw["applied_order"][j].get<std::string>(), format_fixed(cw["applied"][j].get<double>(), 3)});
    }
    os << table(rows);
    if (cw.contains("ci")) {
      os << "  CI = " << format_fixed(cw["ci"].get<double>(), 3) << " ("
         << (cw["consistent"].get<bool>() ? "consistent" : "inconsistent") << ")\n";
    }
  }

  if (doc["status"] == "insufficient data") {
    os << "\nRankings\n  insufficient data\n\nAdjective usability\n  insufficient data\n";
  } else {
    os << "\nRankings\n";
    for (const auto& r : doc["rankings"]) {
      std::string order;
      for (const auto& a : r["order"]) order += (order.empty() ? "" : " > ") + a.get<std::string>();
      os << "  " << r["scope"].get<std::string>() << ": " << order << "\n";
    }
    for (const auto& r : doc["rankings"]) {
      os << "\n  " << r["scope"].get<std::string>() << "\n";
      std::vector<std::vector<std::string>> rows{{"alternative", "D+", "D-", "RC"}};
      for (std::size_t i = 0; i < doc["alternatives"].size(); ++i) {
        rows.push_back({doc["alternatives"][i]["id"].get<std::string>(), format_fixed(r["d_plus"][i].get<double>(), 3),
                        format_fixed(r["d_minus"][i].get<double>(), 3), format_fixed(r["rc"][i].get<double>(), 3)});
      }
      os << table(rows);
    }
    os << "\nAdjective usability\n";
    std::vector<std::vector<std::string>> rows{{"scope", "alternative", "ucd", "adjective"}};
    for (const auto& e : doc["aur"]) {
      rows.push_back({e["scope"].get<std::string>(), e["alternative"].get<std::string>(), format_tuple(tuple_from(e["ucd"])),
                      format_adjective(sus_from(e["adjective"]))});
    }
    os << table(rows);
    os << "\nUsability\n";
    for (const auto& u : doc["usability"]) {
      os << "  " << u["alternative"].get<std::string>() << ": " << u["adjective"].get<std::string>() << "\n";
    }
  }

  os << "\nNPS\n";
  {
    std::vector<std::vector<std::string>> rows{{"alternative", "promoters", "passives", "detractors", "NPS"}};
    for (const auto& s : doc["nps"]) {
      if (s.contains("status")) {
        rows.push_back({s["alternative"].get<std::string>(), "insufficient data"});
      } else {
        rows.push_back({s["alternative"].get<std::string>(), std::to_string(s["promoters"].get<int>()),
                        std::to_string(s["passives"].get<int>()), std::to_string(s["detractors"].get<int>()),
                        format_fixed(s["nps"].get<double>(), 2)});
      }
    }
    os << table(rows);
  }

  os << "\nUsability test per task\n";
  if (doc["ut_tasks"].empty()) {
    os << "  insufficient data\n";
  } else {
    std::vector<std::vector<std::string>> rows{{"task", "role", "alternative", "efficiency %", "success %", "satisfaction"}};
    for (const auto& t : doc["ut_tasks"]) {
      if (t.contains("status")) {
        rows.push_back({t["task"].get<std::string>(), t["scope"].get<std::string>(), t["alternative"].get<std::string>(),
                        "n/a", "n/a", "n/a"});
      } else {
        rows.push_back({t["task"].get<std::string>(), t["scope"].get<std::string>(), t["alternative"].get<std::string>(),
                        format_fixed(t["efficiency"].get<double>()), format_fixed(t["success"].get<double>()),
                        format_tuple(tuple_from(t["satisfaction"]))});
      }
    }
    os << table(rows);
  }

  os << "\nAccessibility\n";
  if (doc["acc"].empty()) {
    os << "  no accessibility verdicts recorded; the ACC criterion is scored as the worst label\n";
  } else {
    std::vector<std::vector<std::string>> rows{{"expert", "alternative", "label"}};
    for (const auto& a : doc["acc"]) {
      rows.push_back({a["user"].get<std::string>(), a["alternative"].get<std::string>(), a["label"].get<std::string>()});
    }
    os << table(rows);
  }

  if (!doc["warnings"].empty()) {
    os << "\nWarnings\n";
    for (const auto& w : doc["warnings"]) os << "  - " << w.get<std::string>() << "\n";
  }
  return os.str();
}

std::string dump_stable(const json& j) { return j.dump(2) + "\n"; }

}  // namespace linguse
