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
#include <mutex>
#include <string>
#include <vector>

#include <json.hpp>

struct sqlite3;

namespace linguse {

struct StoredEvent {
  std::int64_t seq = 0;
  std::string project;
  std::string kind;
  nlohmann::json body;
  std::string at;  // ISO-8601 UTC
};

/// Append-only event log in SQLite. Pass ":memory:" for a throwaway store.
class EventStore {
 public:
  explicit EventStore(const std::string& path);
  ~EventStore();
  EventStore(const EventStore&) = delete;
  EventStore& operator=(const EventStore&) = delete;

  /// Appends inside a transaction; the assigned sequence number is returned.
  std::int64_t append(const std::string& project, const std::string& kind, const nlohmann::json& body,
                      const std::string& at);

  std::vector<StoredEvent> all() const;
  std::vector<StoredEvent> for_project(const std::string& project) const;

 private:
  std::vector<StoredEvent> query(const char* sql, const std::string* project) const;

  sqlite3* db_ = nullptr;
  mutable std::mutex mu_;
};

}  // namespace linguse
