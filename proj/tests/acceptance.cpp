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
// Acceptance gate: one PASS/FAIL line per criterion. Exits non-zero only
// when a criterion fails that is not in the known-failure list below.
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "linguse/aggregation.hpp"
#include "linguse/document.hpp"
#include "linguse/errors.hpp"
#include "linguse/fahp.hpp"
#include "linguse/linguistic.hpp"
#include "linguse/model.hpp"
#include "linguse/pipeline.hpp"
#include "linguse/project_service.hpp"
#include "linguse/reproduce.hpp"
#include "linguse/sus_scale.hpp"
#include "linguse/topsis.hpp"

namespace fs = std::filesystem;
using namespace linguse;
using nlohmann::json;

namespace {

const fs::path kData = LINGUSE_TEST_DATA_DIR;
const fs::path kCase = kData / "case_study";

// The printed sentence orders the global result A2 > A1 > A3, but the
// printed RC values (A1 0.108 < A3 0.126) sort to A2 > A3 > A1.
const std::set<std::string> kKnownFailures = {"TOPSIS ranking global = A2>A1>A3"};

int unexpected = 0;
int known = 0;
int passed = 0;

void line(const std::string& name, bool pass, const std::string& detail) {
  const bool is_known = !pass && kKnownFailures.count(name);
  std::cout << (pass ? "PASS" : "FAIL") << "  " << name;
  if (!detail.empty()) std::cout << "  [" << detail << "]";
  if (is_known) std::cout << "  (known)";
  std::cout << "\n";
  if (pass) ++passed;
  else if (is_known) ++known;
  else ++unexpected;
}

std::string fmt(double v, int decimals = 3) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  return buf;
}

bool near(double a, double b, double tol) { return std::fabs(a - b) <= tol + 1e-9; }

// Rounds to the printed precision before comparing.
bool near_printed(double derived, double printed, int decimals, double tol) {
  const double scale = std::pow(10.0, decimals);
  return near(std::round(derived * scale) / scale, printed, tol);
}

std::pair<bool, std::string> tables(const ReproductionReport& report, std::initializer_list<const char*> names) {
  bool ok = true;
  std::ostringstream os;
  for (const auto& s : report.summary()) {
    if (std::find_if(names.begin(), names.end(), [&](const char* n) { return s.table == n; }) == names.end()) continue;
    ok = ok && s.failed == 0;
    if (os.tellp() > 0) os << ", ";
    os << s.table << " " << (s.checked - s.failed) << "/" << s.checked;
    if (s.deviations) os << " (" << s.deviations << " whitelisted)";
  }
  return {ok, os.str()};
}

std::string order(const ScopedRanking& r, const std::vector<std::string>& alts) {
  std::string out;
  for (int i : r.closeness.ranking) out += (out.empty() ? "" : ">") + alts[i];
  return out;
}

JudgmentSet cyclic() {
  return parse_judgments(json{{"criteria", {"SUS", "NPS", "UT"}},
                              {"judgments",
                               {{{"left", "SUS"}, {"right", "NPS"}, {"label", "Very strongly important"}},
                                {{"left", "NPS"}, {"right", "UT"}, {"label", "Very strongly important"}},
                                {{"left", "UT"}, {"right", "SUS"}, {"label", "Very strongly important"}}}}});
}

JudgmentSet neutral() {
  return parse_judgments(json{{"criteria", {"SUS", "NPS", "UT"}},
                              {"judgments",
                               {{{"left", "SUS"}, {"right", "NPS"}, {"label", "Just important"}},
                                {{"left", "SUS"}, {"right", "UT"}, {"label", "Just important"}},
                                {{"left", "NPS"}, {"right", "UT"}, {"label", "Just important"}}}}});
}

void fahp(const ReproductionReport& report, const ProjectWeights& w) {
  const std::vector<double> expect{0.567, 0.114, 0.292, 0.027};
  bool ok = true;
  std::string got;
  for (int j = 0; j < 4; ++j) {
    ok = ok && near(w.weights.normalized[j], expect[j], 0.02);
    got += (j ? " " : "") + fmt(w.weights.normalized[j]);
  }
  line("FAHP weights WC within 0.02", ok, "WC = " + got);
  const auto [ext, ext_detail] = tables(report, {"fahp_extents"});
  line("FAHP synthetic extents within 0.01", ext, ext_detail);
  const auto [pos, pos_detail] = tables(report, {"fahp_possibility"});
  line("FAHP possibility degrees within 0.01", pos, pos_detail);
}

void tf_sus_example() {
  const auto v = tf_sus(53);
  const bool ok = v.label() == SusLabel::Ok && std::round(v.alpha() * 100) / 100 == 0.12;
  line("TF_SUS 53 -> (OK, 0.12)", ok, "(" + std::string(to_string(v.label())) + ", " + fmt(v.alpha(), 2) + ")");
}

void round_trip() {
  double worst = 0.0;
  for (int k = 0; k <= 10000; ++k) {
    const double x = k / 100.0;
    worst = std::max(worst, std::fabs(delta_inverse(unify_to_s9(tf_sus(x))) - 8.0 * x / 100.0));
  }
  std::ostringstream os;
  os << "max error " << worst << " over 10001 scores";
  line("Round-trip law below 1e-9", worst < 1e-9, os.str());
}

void aggregation_lines(const ReproductionReport& report) {
  const auto [uid, uid_detail] = tables(report, {"uid"});
  line("Unified individual matrices", uid, uid_detail);
  const auto [r1, r1_detail] = tables(report, {"role_R1"});
  line("Role aggregation R1 cells and ucd within 0.01", r1, r1_detail);
  const auto [g, g_detail] = tables(report, {"global"});
  line("Global aggregation cells and ucd within 0.01", g, g_detail);
}

void topsis_lines(const ResultBundle& bundle) {
  const auto& alts = bundle.alternatives;
  auto ideal_ok = [](const std::vector<double>& got, const std::vector<double>& want, std::string& detail) {
    bool ok = true;
    for (std::size_t j = 0; j < want.size(); ++j) {
      ok = ok && near_printed(got[j], want[j], 3, 0.005);
      detail += (j ? " " : "") + fmt(got[j]);
    }
    return ok;
  };
  const auto* r1 = bundle.ranking("R1");
  const auto* g = bundle.ranking("global");
  std::string d1, dg;
  line("TOPSIS A+ for R1 within 0.005", r1 && ideal_ok(r1->ideals.positive, {2.183, 0.439, 1.438, 0.108}, d1), d1);
  line("TOPSIS A+ global within 0.005", g && ideal_ok(g->ideals.positive, {2.439, 0.503, 1.354, 0.076}, dg), dg);

  const std::vector<double> rc{0.108, 1.000, 0.126};
  bool rc_ok = g != nullptr;
  std::string rc_detail;
  for (int i = 0; g && i < 3; ++i) {
    rc_ok = rc_ok && near_printed(g->closeness.rc[i], rc[i], 3, 0.01);
    rc_detail += (i ? " " : "") + fmt(g->closeness.rc[i]);
  }
  line("TOPSIS global RC within 0.01", rc_ok, "RC = " + rc_detail);

  for (const auto& [scope, want] : std::vector<std::pair<std::string, std::string>>{
           {"R1", "A2>A1>A3"}, {"R2", "A2>A3>A1"}, {"R3", "A3>A2>A1"}, {"global", "A2>A1>A3"}}) {
    const auto* r = bundle.ranking(scope);
    const std::string got = r ? order(*r, alts) : "missing";
    line("TOPSIS ranking " + scope + " = " + want, got == want, "derived " + got);
  }
}

void retranslation(const ReproductionReport& report, const ResultBundle& bundle) {
  int exact = 0, whitelisted = 0, failed = 0;
  for (const auto& c : report.checks) {
    if (c.table != "aur") continue;
    if (!c.pass) ++failed;
    else if (c.whitelisted) ++whitelisted;
    else ++exact;
  }
  line("Retranslation 9 exact, 3 whitelisted", failed == 0 && exact == 9 && whitelisted == 3,
       std::to_string(exact) + " exact, " + std::to_string(whitelisted) + " whitelisted, " + std::to_string(failed) +
           " failed");
  bool ok = bundle.aur.usability.size() == 3;
  std::string labels;
  for (auto label : bundle.aur.usability) {
    ok = ok && label == SusLabel::Ok;
    labels += (labels.empty() ? "" : " ") + std::string(to_string(label));
  }
  line("Usability adjective Ok for all alternatives", ok, labels);
}

void ut_metrics(const ResultBundle& bundle) {
  struct Want {
    const char* alt;
    double eff, succ;
    int index;
    double alpha;
  };
  const Want want[] = {{"A1", 42.86, 71.43, 2, -0.04}, {"A2", 39.29, 82.14, 3, -0.29}, {"A3", 3.57, 42.86, 0, 0.39}};
  bool ok = true;
  std::string detail;
  for (const auto& w : want) {
    const UtUserRow* row = nullptr;
    for (const auto& r : bundle.ut_users)
      if (r.user == "U4" && r.role == "R1" && r.alternative == w.alt) row = &r;
    if (!row) {
      ok = false;
      detail += std::string(w.alt) + " missing ";
      continue;
    }
    const auto& m = row->metrics;
    ok = ok && near_printed(m.efficiency_pct, w.eff, 2, 0.01) && near_printed(m.success_pct, w.succ, 2, 0.01) &&
         m.satisfaction.index() == w.index && near_printed(m.satisfaction.alpha(), w.alpha, 2, 0.01);
    detail += std::string(detail.empty() ? "" : "; ") + w.alt + " " + fmt(m.efficiency_pct, 2) + "% " +
              fmt(m.success_pct, 2) + "% (s" + std::to_string(m.satisfaction.index()) + ", " +
              fmt(m.satisfaction.alpha(), 2) + ")";
  }
  line("UT metrics U4/R1 within 0.01", ok, detail);
}

void properties() {
  std::mt19937_64 rng(20261016);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  {
    bool ok = true;
    for (int g : {3, 5, 9})
      for (int k = 0; k <= 100000 && ok; ++k) {
        const double beta = (g - 1) * k / 100000.0;
        ok = delta_inverse(delta(beta, g)) == beta;
      }
    line("Property: 2-tuple round trip is exact", ok, "S3, S5, S9 on 100001 points each");
  }

  {
    int bad = 0;
    for (int n = 0; n < 10000; ++n) {
      const int size = 1 + static_cast<int>(unit(rng) * 6);
      std::vector<TwoTuple> values, same;
      std::vector<double> weights;
      const double shared = unit(rng) * 8;
      for (int k = 0; k < size; ++k) {
        values.push_back(delta(unit(rng) * 8, 9));
        same.push_back(delta(shared, 9));
        weights.push_back(unit(rng) + 0.01);
      }
      const double avg = weighted_average(values, weights).beta();
      double lo = 8, hi = 0;
      for (const auto& v : values) lo = std::min(lo, v.beta()), hi = std::max(hi, v.beta());
      const bool bounded = avg >= lo - 1e-12 && avg <= hi + 1e-12;
      const bool idem = std::fabs(weighted_average(same, weights).beta() - same[0].beta()) < 1e-12;
      auto raised = values;
      const int k = static_cast<int>(unit(rng) * size) % size;
      raised[k] = delta(std::min(8.0, raised[k].beta() + unit(rng)), 9);
      const bool mono = weighted_average(raised, weights).beta() >= avg - 1e-12;
      auto scaled = weights;
      const double factor = 0.1 + unit(rng) * 100;
      for (auto& w : scaled) w *= factor;
      const bool invariant = std::fabs(weighted_average(values, scaled).beta() - avg) < 1e-9;
      bad += !(bounded && idem && mono && invariant);
    }
    line("Property: weighted average idempotent, monotone, bounded, scale invariant", bad == 0,
         std::to_string(bad) + " violations in 10000 instances");
  }

  {
    int bad = 0;
    double worst = 0.0;
    for (int n = 0; n < 2000; ++n) {
      UnifiedDecisionMatrix m(3, 4);
      std::vector<double> wc(4);
      for (int j = 0; j < 4; ++j) {
        wc[j] = unit(rng) + 0.01;
        for (int i = 0; i < 3; ++i) m.set(i, j, delta(unit(rng) * 8, 9));
      }
      const auto r = rank_scope("x", m, wc);
      // Brute force: per-column best and worst, Euclidean distances.
      for (int i = 0; i < 3; ++i) {
        double dp = 0, dm = 0;
        for (int j = 0; j < 4; ++j) {
          double best = 0, worst_v = 1e9;
          for (int k = 0; k < 3; ++k) {
            const double v = m.at(k, j)->beta() * wc[j];
            best = std::max(best, v);
            worst_v = std::min(worst_v, v);
          }
          const double v = m.at(i, j)->beta() * wc[j];
          dp += (v - best) * (v - best);
          dm += (v - worst_v) * (v - worst_v);
        }
        dp = std::sqrt(dp), dm = std::sqrt(dm);
        const double rc = dp + dm == 0 ? 0.0 : dm / (dp + dm);
        const double got = r.closeness.rc[i];
        if (dp + dm > 0) worst = std::max(worst, std::fabs(got - rc));
        bad += got < 0 || got > 1;
      }
      // Scaling every weight leaves the closeness untouched.
      auto scaled = wc;
      for (auto& w : scaled) w *= 7.5;
      const auto r2 = rank_scope("x", m, scaled);
      for (int i = 0; i < 3; ++i) bad += std::fabs(r2.closeness.rc[i] - r.closeness.rc[i]) > 1e-9;
    }
    std::ostringstream os;
    os << bad << " violations, max oracle difference " << worst << " over 2000 random 3x4 instances";
    line("Property: TOPSIS RC in [0,1], weight-scale invariant, matches brute-force oracle", bad == 0 && worst < 1e-9,
         os.str());
  }

  {
    EventStore store(":memory:");
    std::string first, second, exported_dump;
    std::string id, mod;
    {
      ProjectService service(store);
      json body = load_json_file(kCase / "project.json");
      body["judgments"] = load_json_file(kCase / "judgments.json");
      const auto created = service.create_project(body);
      id = created["id"];
      mod = created["moderator_token"];
      service.set_state(id, mod, {{"state", "collecting"}});
      service.import_dataset(id, mod, load_json_file(kCase / "responses.json"));
      first = dump_stable(service.compute(id, mod, json::object()));
    }
    ProjectService replayed(store);
    second = dump_stable(replayed.compute(id, mod, json::object()));
    line("Property: event-log replay reproduces identical results", first == second,
         std::to_string(first.size()) + " report bytes compared");
  }
}

void consistency_gate() {
  const auto bad = derive_project_weights(cyclic());
  const auto good = derive_project_weights(neutral());
  std::string blocked = "not blocked";
  {
    EventStore store(":memory:");
    ProjectService service(store);
    json body = load_json_file(kCase / "project.json");
    body["criteria"]["enabled"] = {"SUS", "NPS", "UT"};
    body["judgments"] = to_json(cyclic());
    const auto created = service.create_project(body);
    try {
      service.set_state(created["id"], created["moderator_token"], {{"state", "collecting"}});
    } catch (const ConsistencyError& e) {
      blocked = "blocked with CI " + fmt(e.consistency_index());
    }
  }
  line("Consistency gate blocks a contradictory matrix",
       bad.weights.consistency_index > kConsistencyThreshold && blocked.rfind("blocked", 0) == 0,
       "CI " + fmt(bad.weights.consistency_index) + ", " + blocked);
  line("Consistency gate passes the neutral matrix with CI = 0",
       good.weights.consistency_index == 0.0 && good.weights.consistent, "CI " + fmt(good.weights.consistency_index));
}

}  // namespace

int main() {
  try {
    const auto report = reproduce({kData, std::nullopt, std::nullopt});
    const auto project = parse_project(load_json_file(kCase / "project.json"));
    const auto weights = derive_project_weights(parse_judgments(load_json_file(kCase / "judgments.json")));
    const auto dataset = parse_dataset(load_json_file(kCase / "responses.json"));
    const auto bundle = evaluate(project, weights_for(project, weights), dataset);

    fahp(report, weights);
    tf_sus_example();
    round_trip();
    aggregation_lines(report);
    topsis_lines(bundle);
    retranslation(report, bundle);
    ut_metrics(bundle);
    properties();
    consistency_gate();
  } catch (const std::exception& e) {
    std::cout << "FAIL  acceptance run aborted  [" << e.what() << "]\n";
    return 1;
  }
  std::cout << "\n" << passed << " passed, " << known << " known failures, " << unexpected << " unexpected failures\n";
  return unexpected == 0 ? 0 : 1;
}
