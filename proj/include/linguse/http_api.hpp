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

#include <exception>
#include <string>

#include <json.hpp>

namespace httplib {
class Server;
}

namespace linguse {

class ProjectService;

/// HTTP status and error body for an exception thrown by the service.
struct HttpError {
  int status = 500;
  nlohmann::json body;
};

HttpError http_error(const std::exception& e);

/// Mounts the project API on `server`. The service must outlive it.
void register_routes(httplib::Server& server, ProjectService& service);

}  // namespace linguse
