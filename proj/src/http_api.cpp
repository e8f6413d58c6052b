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
#include "linguse/http_api.hpp"

#include <httplib.h>

#include <optional>

#include "linguse/document.hpp"
#include "linguse/errors.hpp"
#include "linguse/project_service.hpp"

namespace linguse {

using nlohmann::json;

HttpError http_error(const std::exception& e) {
  auto body = [&](const char* kind) { return json{{"error", {{"kind", kind}, {"message", e.what()}}}}; };
  if (const auto* c = dynamic_cast<const ConsistencyError*>(&e)) {
    auto b = body("consistency");
    b["error"]["ci"] = c->consistency_index();
    return {422, b};
  }
  if (dynamic_cast<const json::exception*>(&e)) return {400, body("malformed")};
  if (dynamic_cast<const ValidationError*>(&e)) return {400, body("validation")};
  if (dynamic_cast<const ConfigurationError*>(&e)) return {400, body("configuration")};
  if (dynamic_cast<const DomainError*>(&e)) return {400, body("domain")};
  if (dynamic_cast<const AuthenticationError*>(&e)) return {401, body("authentication")};
  if (dynamic_cast<const AuthorizationError*>(&e)) return {403, body("authorization")};
  if (dynamic_cast<const NotFoundError*>(&e)) return {404, body("not_found")};
  if (dynamic_cast<const ConflictError*>(&e)) return {409, body("conflict")};
  if (dynamic_cast<const StateError*>(&e)) return {409, body("state")};
  return {500, body("internal")};
}

namespace {

std::string bearer(const httplib::Request& req) {
  const auto h = req.get_header_value("Authorization");
  constexpr std::string_view prefix = "Bearer ";
  if (h.size() > prefix.size() && h.compare(0, prefix.size(), prefix) == 0) return h.substr(prefix.size());
  return {};
}

json body_of(const httplib::Request& req) {
  if (req.body.empty()) return json::object();
  return json::parse(req.body);
}

std::optional<std::string> param(const httplib::Request& req, const char* name) {
  if (!req.has_param(name)) return std::nullopt;
  return req.get_param_value(name);
}

void send(httplib::Response& res, int status, const json& j) {
  res.status = status;
  res.set_content(dump_stable(j), "application/json");
}

// Wraps a handler so service exceptions become error responses.
template <typename F>
httplib::Server::Handler guarded(F f) {
  return [f](const httplib::Request& req, httplib::Response& res) {
    try {
      f(req, res);
    } catch (const std::exception& e) {
      const auto err = http_error(e);
      send(res, err.status, err.body);
    }
  };
}

}  // namespace

void register_routes(httplib::Server& server, ProjectService& service) {
  const std::string project = R"(/projects/([A-Za-z0-9_.\-]+))";
  auto& s = service;

  server.Get("/health", [](const httplib::Request&, httplib::Response& res) { send(res, 200, {{"status", "ok"}}); });

  server.Post("/projects", guarded([&s](const auto& req, auto& res) { send(res, 201, s.create_project(body_of(req))); }));
  server.Get(project, guarded([&s](const auto& req, auto& res) {
               send(res, 200, s.get_project(req.matches[1], bearer(req)));
             }));
  server.Patch(project, guarded([&s](const auto& req, auto& res) {
                 send(res, 200, s.patch_project(req.matches[1], bearer(req), body_of(req)));
               }));
  server.Post(project + "/alternatives", guarded([&s](const auto& req, auto& res) {
                send(res, 201, s.add_alternative(req.matches[1], bearer(req), body_of(req)));
              }));
  server.Put(project + "/criteria", guarded([&s](const auto& req, auto& res) {
               send(res, 200, s.set_criteria(req.matches[1], bearer(req), body_of(req)));
             }));
  server.Put(project + "/judgments", guarded([&s](const auto& req, auto& res) {
               send(res, 200, s.set_judgments(req.matches[1], bearer(req), body_of(req)));
             }));
  server.Put(project + "/roles", guarded([&s](const auto& req, auto& res) {
               send(res, 200, s.set_roles(req.matches[1], bearer(req), body_of(req)));
             }));
  server.Post(project + "/users", guarded([&s](const auto& req, auto& res) {
                send(res, 201, s.add_user(req.matches[1], bearer(req), body_of(req)));
              }));
  server.Post(project + "/state", guarded([&s](const auto& req, auto& res) {
                send(res, 200, s.set_state(req.matches[1], bearer(req), body_of(req)));
              }));
  server.Get(project + "/session", guarded([&s](const auto& req, auto& res) {
               send(res, 200, s.session(req.matches[1], bearer(req), param(req, "user")));
             }));
  server.Post(project + "/session", guarded([&s](const auto& req, auto& res) {
                send(res, 200, s.bind_role(req.matches[1], bearer(req), body_of(req)));
              }));
  server.Post(project + "/role-dice", guarded([&s](const auto& req, auto& res) {
                send(res, 200, s.role_dice(req.matches[1], bearer(req)));
              }));
  server.Post(project + "/submissions", guarded([&s](const auto& req, auto& res) {
                send(res, 201, s.submit(req.matches[1], bearer(req), body_of(req)));
              }));
  server.Post(project + "/import", guarded([&s](const auto& req, auto& res) {
                send(res, 201, s.import_dataset(req.matches[1], bearer(req), body_of(req)));
              }));
  server.Post(project + "/compute", guarded([&s](const auto& req, auto& res) {
                send(res, 200, s.compute(req.matches[1], bearer(req), body_of(req)));
              }));
  server.Get(project + "/report", guarded([&s](const auto& req, auto& res) {
               const auto r = s.report(req.matches[1], bearer(req), param(req, "role"));
               if (param(req, "format").value_or("structured") == "text") {
                 std::string text = render_text(r["report"]);
                 if (r["stale"] == true) text = "NOTE: new submissions arrived after this report was computed\n" + text;
                 res.set_content(text, "text/plain; charset=utf-8");
               } else {
                 send(res, 200, r);
               }
             }));
  server.Get(project + "/export", guarded([&s](const auto& req, auto& res) {
               send(res, 200, s.export_log(req.matches[1], bearer(req)));
             }));
}

}  // namespace linguse
