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
#include <CLI11.hpp>
#include <httplib.h>

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "linguse/document.hpp"
#include "linguse/errors.hpp"
#include "linguse/http_api.hpp"
#include "linguse/model.hpp"
#include "linguse/pipeline.hpp"
#include "linguse/project_service.hpp"
#include "linguse/report.hpp"
#include "linguse/reproduce.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace linguse;

namespace {

enum Exit { kOk = 0, kInvalid = 1, kInconsistent = 2, kMismatch = 3, kInsufficient = 4 };

fs::path data_dir(const std::string& flag) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv("LINGUSE_DATA_DIR"); env && *env) return env;
  return LINGUSE_DEFAULT_DATA_DIR;
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty() || out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) throw ValidationError("cannot write " + out);
  f << text;
}

std::string weights_table(const ProjectWeights& w) {
  std::string s = "criterion  WC'     WC\n";
  for (std::size_t j = 0; j < w.criteria.size(); ++j) {
    std::string name = w.criteria[j];
    name.resize(std::max<std::size_t>(name.size(), 9), ' ');
    s += name + "  " + format_fixed(w.weights.raw[j], 3) + "  " + format_fixed(w.weights.normalized[j], 3) + "\n";
  }
  s += "CI = " + format_fixed(w.weights.consistency_index, 3) + " (" +
       (w.weights.consistent ? "consistent, below 0.10" : "inconsistent, not below 0.10") + ")\n";
  return s;
}

struct Inputs {
  std::string project, judgments, responses;
};

void default_inputs(Inputs& in, const fs::path& data) {
  const auto dir = data / "case_study";
  if (in.project.empty()) in.project = (dir / "project.json").string();
  if (in.judgments.empty()) in.judgments = (dir / "judgments.json").string();
  if (in.responses.empty()) in.responses = (dir / "responses.json").string();
}

int cmd_weights(const std::string& judgments, const std::string& format, const std::string& out) {
  const auto w = derive_project_weights(parse_judgments(load_json_file(judgments)));
  if (format == "structured") {
    emit(dump_stable(to_json(w.weights, w.criteria)), out);
  } else {
    emit(weights_table(w), out);
  }
  return w.weights.consistent ? kOk : kInconsistent;
}

int cmd_evaluate(Inputs in, const fs::path& data, const std::string& role, const std::string& format,
                 const std::string& out) {
  default_inputs(in, data);
  const auto project = parse_project(load_json_file(in.project));
  const auto weights = derive_project_weights(parse_judgments(load_json_file(in.judgments)));
  if (!weights.weights.consistent) {
    std::cerr << "error: judgments are inconsistent (CI = " << format_fixed(weights.weights.consistency_index, 3)
              << " > 0.10)\n";
    return kInconsistent;
  }
  const auto dataset = parse_dataset(load_json_file(in.responses));
  EvaluationOptions options;
  if (!role.empty()) {
    if (project.role_index(role) < 0) throw ValidationError("--role: no role '" + role + "' in the project");
    options.role = role;
  }
  const auto bundle = evaluate(project, weights_for(project, weights), dataset, options);
  const json doc = compose_report(project, &weights, bundle);
  emit(format == "structured" ? dump_stable(doc) : render_text(doc), out);
  if (bundle.insufficient_data) {
    std::cerr << "insufficient data: no complete evaluation pass in the dataset\n";
    return kInsufficient;
  }
  return kOk;
}

int cmd_reproduce(const fs::path& data, const std::string& judgments, std::optional<double> tolerance,
                  const std::string& format, const std::string& out) {
  ReproduceOptions o{data, std::nullopt, tolerance};
  if (!judgments.empty()) o.judgments = judgments;
  const auto report = reproduce(o);
  emit(format == "structured" ? dump_stable(reproduction_json(report)) : render_reproduction(report), out);
  return report.ok() ? kOk : kMismatch;
}

// Loads the bundled case study into a fresh project, ready for compute.
void seed_case_study(ProjectService& service, const fs::path& data) {
  const auto dir = data / "case_study";
  json body = load_json_file(dir / "project.json");
  body["judgments"] = load_json_file(dir / "judgments.json");
  const auto created = service.create_project(body);
  const std::string id = created["id"], token = created["moderator_token"];
  service.set_state(id, token, {{"state", "collecting"}});
  service.import_dataset(id, token, load_json_file(dir / "responses.json"));
  std::cout << "seeded project " << id << "\nmoderator token: " << token << "\n";
}

int cmd_serve(const std::string& host, int port, const std::string& db, bool seed, const fs::path& data) {
  EventStore store(db);
  ProjectService service(store);
  if (seed) seed_case_study(service, data);
  httplib::Server server;
  register_routes(server, service);
  if (port == 0) {
    port = server.bind_to_any_port(host);
  } else if (!server.bind_to_port(host, port)) {
    throw ValidationError("cannot bind " + host + ":" + std::to_string(port));
  }
  std::cout << "listening on http://" << host << ":" << port << std::endl;
  return server.listen_after_bind() ? kOk : kInvalid;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Linguistic usability evaluation: criteria weights, rankings and adjective reports"};
  app.require_subcommand(1);
  std::string format = "table", out, data_flag;
  app.add_option("--data", data_flag, "Data directory holding case_study/ (default: $LINGUSE_DATA_DIR)");

  auto* weights = app.add_subcommand("weights", "Derive criteria weights and check consistency");
  std::string judgments;
  weights->add_option("--judgments", judgments, "Pairwise judgments file")->required()->check(CLI::ExistingFile);

  auto* eval = app.add_subcommand("evaluate", "Run the full evaluation on a project and its responses");
  Inputs in;
  std::string role;
  eval->add_option("--project", in.project, "Project configuration")->check(CLI::ExistingFile);
  eval->add_option("--judgments", in.judgments, "Pairwise judgments")->check(CLI::ExistingFile);
  eval->add_option("--responses", in.responses, "Response dataset")->check(CLI::ExistingFile);
  eval->add_option("--role", role, "Restrict the dataset to one role");

  auto* repro = app.add_subcommand("reproduce", "Recompute the case-study tables and diff them");
  std::string repro_judgments;
  std::optional<double> tolerance;
  repro->add_option("--judgments", repro_judgments, "Replace the case-study judgments")->check(CLI::ExistingFile);
  repro->add_option("--tolerance", tolerance, "One absolute tolerance for every table")->check(CLI::NonNegativeNumber);

  for (auto* sub : {weights, eval, repro}) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"table", "structured"}));
    sub->add_option("--out", out, "Output file (default: stdout)");
  }

  auto* serve = app.add_subcommand("serve", "Run the HTTP service");
  std::string host = "127.0.0.1", db = ":memory:";
  int port = 8080;
  bool seed = false;
  serve->add_option("--host", host, "Bind address");
  serve->add_option("--port", port, "Port (0 picks a free one)")->check(CLI::Range(0, 65535));
  serve->add_option("--db", db, "SQLite file for the event log (default: in memory)");
  serve->add_flag("--seed-case-study", seed, "Create a project loaded with the bundled case study");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInvalid;
  }

  try {
    const fs::path data = data_dir(data_flag);
    if (*weights) return cmd_weights(judgments, format, out);
    if (*eval) return cmd_evaluate(in, data, role, format, out);
    if (*repro) return cmd_reproduce(data, repro_judgments, tolerance, format, out);
    if (*serve) return cmd_serve(host, port, db, seed, data);
  } catch (const ConsistencyError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInconsistent;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  }
  return kInvalid;
}
