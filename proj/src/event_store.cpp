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
#include "linguse/event_store.hpp"

#include <sqlite3.h>

#include "linguse/errors.hpp"

namespace linguse {
namespace {

class Statement {
 public:
  Statement(sqlite3* db, const char* sql) : db_(db) {
    if (sqlite3_prepare_v2(db, sql, -1, &stmt_, nullptr) != SQLITE_OK) fail("prepare");
  }
  ~Statement() { sqlite3_finalize(stmt_); }
  Statement(const Statement&) = delete;
  Statement& operator=(const Statement&) = delete;

  void bind(int i, const std::string& text) {
    if (sqlite3_bind_text(stmt_, i, text.c_str(), static_cast<int>(text.size()), SQLITE_TRANSIENT) != SQLITE_OK) {
      fail("bind");
    }
  }
  bool step() {
    const int rc = sqlite3_step(stmt_);
    if (rc == SQLITE_ROW) return true;
    if (rc != SQLITE_DONE) fail("step");
    return false;
  }
  std::int64_t integer(int col) const { return sqlite3_column_int64(stmt_, col); }
  std::string text(int col) const {
    const auto* p = sqlite3_column_text(stmt_, col);
    return p ? reinterpret_cast<const char*>(p) : "";
  }

 private:
  [[noreturn]] void fail(const char* what) const {
    throw Error(std::string("event store ") + what + ": " + sqlite3_errmsg(db_));
  }
  sqlite3* db_;
  sqlite3_stmt* stmt_ = nullptr;
};

void exec(sqlite3* db, const char* sql) {
  char* err = nullptr;
  if (sqlite3_exec(db, sql, nullptr, nullptr, &err) != SQLITE_OK) {
    std::string msg = err ? err : "unknown error";
    sqlite3_free(err);
    throw Error("event store: " + msg);
  }
}

}  // namespace

EventStore::EventStore(const std::string& path) {
  if (sqlite3_open(path.c_str(), &db_) != SQLITE_OK) {
    std::string msg = db_ ? sqlite3_errmsg(db_) : "out of memory";
    sqlite3_close(db_);
    throw Error("cannot open event store '" + path + "': " + msg);
  }
  sqlite3_busy_timeout(db_, 5000);
  try {
    exec(db_, "PRAGMA journal_mode=WAL");
    exec(db_,
         "CREATE TABLE IF NOT EXISTS events ("
         " seq INTEGER PRIMARY KEY AUTOINCREMENT,"
         " project TEXT NOT NULL,"
         " kind TEXT NOT NULL,"
         " body TEXT NOT NULL,"
         " at TEXT NOT NULL)");
    exec(db_, "CREATE INDEX IF NOT EXISTS events_project ON events(project, seq)");
  } catch (...) {
    sqlite3_close(db_);
    throw;
  }
}

EventStore::~EventStore() { sqlite3_close(db_); }

std::int64_t EventStore::append(const std::string& project, const std::string& kind, const nlohmann::json& body,
                                const std::string& at) {
  std::lock_guard lock(mu_);
  exec(db_, "BEGIN IMMEDIATE");
  try {
    Statement s(db_, "INSERT INTO events(project, kind, body, at) VALUES (?, ?, ?, ?)");
    s.bind(1, project);
    s.bind(2, kind);
    s.bind(3, body.dump());
    s.bind(4, at);
    s.step();
    const auto seq = sqlite3_last_insert_rowid(db_);
    exec(db_, "COMMIT");
    return seq;
  } catch (...) {
    sqlite3_exec(db_, "ROLLBACK", nullptr, nullptr, nullptr);
    throw;
  }
}

std::vector<StoredEvent> EventStore::query(const char* sql, const std::string* project) const {
  std::lock_guard lock(mu_);
  Statement s(db_, sql);
  if (project) s.bind(1, *project);
  std::vector<StoredEvent> out;
  while (s.step()) {
    out.push_back({s.integer(0), s.text(1), s.text(2), nlohmann::json::parse(s.text(3)), s.text(4)});
  }
  return out;
}

std::vector<StoredEvent> EventStore::all() const {
  return query("SELECT seq, project, kind, body, at FROM events ORDER BY seq", nullptr);
}

std::vector<StoredEvent> EventStore::for_project(const std::string& project) const {
  return query("SELECT seq, project, kind, body, at FROM events WHERE project = ? ORDER BY seq", &project);
}

}  // namespace linguse
