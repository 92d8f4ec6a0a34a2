// Copyright 2026 The star-engine Authors
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

#include "star/service/store.hpp"

#include <sqlite3.h>

#include <chrono>
#include <cstdio>
#include <ctime>

#include "star/service/crypto.hpp"

namespace star::service {

Micros now_micros() {
  using namespace std::chrono;
  return duration_cast<microseconds>(system_clock::now().time_since_epoch()).count();
}

std::string iso_time(Micros t) {
  std::time_t secs = static_cast<std::time_t>(t / 1000000);
  long frac = static_cast<long>(t % 1000000);
  if (frac < 0) {
    frac += 1000000;
    --secs;
  }
  std::tm tm{};
  gmtime_r(&secs, &tm);
  char buf[96];
  std::snprintf(buf, sizeof buf, "%04d-%02d-%02dT%02d:%02d:%02d.%06ldZ",
                tm.tm_year + 1900, tm.tm_mon + 1, tm.tm_mday, tm.tm_hour,
                tm.tm_min, tm.tm_sec, frac);
  return buf;
}

const char* to_string(JobState s) {
  switch (s) {
    case JobState::Queued: return "queued";
    case JobState::Running: return "running";
    case JobState::Done: return "done";
    case JobState::Failed: return "failed";
  }
  return "?";
}

const char* to_string(StoryVisibility v) {
  return v == StoryVisibility::Public ? "public" : "personal";
}

namespace {

JobState parse_state(const std::string& s) {
  if (s == "running") return JobState::Running;
  if (s == "done") return JobState::Done;
  if (s == "failed") return JobState::Failed;
  return JobState::Queued;
}

// Thin RAII wrapper over a prepared statement.
class Stmt {
 public:
  Stmt(sqlite3* db, const char* sql) : db_(db) {
    if (sqlite3_prepare_v2(db, sql, -1, &st_, nullptr) != SQLITE_OK)
      throw StoreError(std::string("prepare: ") + sqlite3_errmsg(db));
  }
  ~Stmt() { sqlite3_finalize(st_); }
  Stmt(const Stmt&) = delete;
  Stmt& operator=(const Stmt&) = delete;

  Stmt& bind(int i, const std::string& v) {
    sqlite3_bind_text(st_, i, v.data(), static_cast<int>(v.size()), SQLITE_TRANSIENT);
    return *this;
  }
  Stmt& bind(int i, std::int64_t v) {
    sqlite3_bind_int64(st_, i, v);
    return *this;
  }
  Stmt& bind(int i, const std::optional<std::string>& v) {
    if (v) return bind(i, *v);
    sqlite3_bind_null(st_, i);
    return *this;
  }

  /// True while rows remain.
  bool step() {
    int rc = sqlite3_step(st_);
    if (rc == SQLITE_ROW) return true;
    if (rc == SQLITE_DONE) return false;
    throw StoreError(std::string("step: ") + sqlite3_errmsg(db_));
  }
  void run() {
    while (step()) {
    }
  }

  std::string text(int col) const {
    auto* p = sqlite3_column_text(st_, col);
    return p ? std::string(reinterpret_cast<const char*>(p),
                           static_cast<std::size_t>(sqlite3_column_bytes(st_, col)))
             : std::string();
  }
  std::optional<std::string> opt_text(int col) const {
    if (sqlite3_column_type(st_, col) == SQLITE_NULL) return std::nullopt;
    return text(col);
  }
  std::int64_t int64(int col) const { return sqlite3_column_int64(st_, col); }
  std::optional<std::int64_t> opt_int64(int col) const {
    if (sqlite3_column_type(st_, col) == SQLITE_NULL) return std::nullopt;
    return int64(col);
  }

 private:
  sqlite3* db_;
  sqlite3_stmt* st_ = nullptr;
};

constexpr const char* kSchema = R"sql(
CREATE TABLE IF NOT EXISTS users (
  id TEXT PRIMARY KEY, username TEXT NOT NULL UNIQUE,
  credential TEXT NOT NULL, created_at INTEGER NOT NULL);
CREATE TABLE IF NOT EXISTS tokens (
  hash TEXT PRIMARY KEY, user_id TEXT NOT NULL REFERENCES users(id),
  created_at INTEGER NOT NULL, revoked INTEGER NOT NULL DEFAULT 0);
CREATE TABLE IF NOT EXISTS jobs (
  seq INTEGER PRIMARY KEY AUTOINCREMENT, id TEXT NOT NULL UNIQUE,
  owner TEXT NOT NULL, source TEXT NOT NULL, options TEXT NOT NULL,
  state TEXT NOT NULL, submitted_at INTEGER NOT NULL, started_at INTEGER,
  finished_at INTEGER, result TEXT, error TEXT);
CREATE INDEX IF NOT EXISTS jobs_state ON jobs(state, seq);
CREATE TABLE IF NOT EXISTS job_events (
  job_id TEXT NOT NULL, idx INTEGER NOT NULL, event TEXT NOT NULL,
  data TEXT NOT NULL, PRIMARY KEY (job_id, idx));
CREATE TABLE IF NOT EXISTS stories (
  seq INTEGER PRIMARY KEY AUTOINCREMENT, id TEXT NOT NULL UNIQUE,
  owner TEXT NOT NULL, title TEXT NOT NULL, source TEXT NOT NULL,
  visibility TEXT NOT NULL, created_at INTEGER NOT NULL,
  updated_at INTEGER NOT NULL);
CREATE TABLE IF NOT EXISTS comments (
  seq INTEGER PRIMARY KEY AUTOINCREMENT, id TEXT NOT NULL UNIQUE,
  story_id TEXT NOT NULL, author TEXT NOT NULL, body TEXT NOT NULL,
  created_at INTEGER NOT NULL);
CREATE INDEX IF NOT EXISTS comments_story ON comments(story_id, seq);
)sql";

constexpr const char* kJobColumns =
    "seq, id, owner, source, options, state, submitted_at, started_at, "
    "finished_at, result, error";

JobRow read_job(const Stmt& s) {
  JobRow j;
  j.seq = s.int64(0);
  j.id = s.text(1);
  j.owner = s.text(2);
  j.source = s.text(3);
  j.options = s.text(4);
  j.state = parse_state(s.text(5));
  j.submitted_at = s.int64(6);
  j.started_at = s.opt_int64(7);
  j.finished_at = s.opt_int64(8);
  j.result = s.opt_text(9);
  j.error = s.opt_text(10);
  return j;
}

constexpr const char* kStorySelect =
    "SELECT s.seq, s.id, s.owner, u.username, s.title, s.source, s.visibility, "
    "s.created_at, s.updated_at, "
    "(SELECT COUNT(*) FROM comments c WHERE c.story_id = s.id) "
    "FROM stories s JOIN users u ON u.id = s.owner ";

StoryRow read_story(const Stmt& s) {
  StoryRow r;
  r.seq = s.int64(0);
  r.id = s.text(1);
  r.owner = s.text(2);
  r.owner_name = s.text(3);
  r.title = s.text(4);
  r.source = s.text(5);
  r.visibility = s.text(6) == "public" ? StoryVisibility::Public : StoryVisibility::Personal;
  r.created_at = s.int64(7);
  r.updated_at = s.int64(8);
  r.comment_count = s.int64(9);
  return r;
}

}  // namespace

// BEGIN IMMEDIATE ... COMMIT, rolled back unless commit() ran.
class Store::Tx {
 public:
  explicit Tx(Store& s) : s_(s) { s_.exec("BEGIN IMMEDIATE"); }
  ~Tx() {
    if (!done_) sqlite3_exec(s_.db_, "ROLLBACK", nullptr, nullptr, nullptr);
  }
  void commit() {
    s_.exec("COMMIT");
    done_ = true;
  }

 private:
  Store& s_;
  bool done_ = false;
};

Store::Store(const std::string& path) {
  if (sqlite3_open_v2(path.c_str(), &db_,
                      SQLITE_OPEN_READWRITE | SQLITE_OPEN_CREATE | SQLITE_OPEN_FULLMUTEX,
                      nullptr) != SQLITE_OK) {
    std::string msg = db_ ? sqlite3_errmsg(db_) : "out of memory";
    sqlite3_close(db_);
    throw StoreError("cannot open store " + path + ": " + msg);
  }
  sqlite3_busy_timeout(db_, 5000);
  exec("PRAGMA journal_mode=WAL");
  exec("PRAGMA synchronous=NORMAL");
  exec("PRAGMA foreign_keys=ON");
  exec(kSchema);
  recover();
}

Store::~Store() { sqlite3_close(db_); }

void Store::exec(const char* sql) {
  char* err = nullptr;
  if (sqlite3_exec(db_, sql, nullptr, nullptr, &err) != SQLITE_OK) {
    std::string msg = err ? err : "unknown error";
    sqlite3_free(err);
    throw StoreError(msg);
  }
}

// --- accounts ---------------------------------------------------------------

std::optional<UserRow> Store::create_user(const std::string& username,
                                          const std::string& credential) {
  std::lock_guard lock(mu_);
  UserRow u{random_hex(16), username, credential};
  Stmt s(db_, "INSERT INTO users(id, username, credential, created_at) "
              "VALUES (?, ?, ?, ?) ON CONFLICT(username) DO NOTHING");
  s.bind(1, u.id).bind(2, username).bind(3, credential).bind(4, now_micros()).run();
  if (sqlite3_changes(db_) == 0) return std::nullopt;
  return u;
}

std::optional<UserRow> Store::find_user(const std::string& username) {
  std::lock_guard lock(mu_);
  Stmt s(db_, "SELECT id, username, credential FROM users WHERE username = ?");
  s.bind(1, username);
  if (!s.step()) return std::nullopt;
  return UserRow{s.text(0), s.text(1), s.text(2)};
}

void Store::add_token(const std::string& token_hash, const std::string& user_id) {
  std::lock_guard lock(mu_);
  Stmt(db_, "INSERT INTO tokens(hash, user_id, created_at) VALUES (?, ?, ?)")
      .bind(1, token_hash).bind(2, user_id).bind(3, now_micros()).run();
}

std::optional<std::string> Store::user_for_token(const std::string& token_hash) {
  std::lock_guard lock(mu_);
  Stmt s(db_, "SELECT user_id FROM tokens WHERE hash = ? AND revoked = 0");
  s.bind(1, token_hash);
  if (!s.step()) return std::nullopt;
  return s.text(0);
}

void Store::revoke_token(const std::string& token_hash) {
  std::lock_guard lock(mu_);
  Stmt(db_, "UPDATE tokens SET revoked = 1 WHERE hash = ?").bind(1, token_hash).run();
}

// --- jobs -------------------------------------------------------------------

std::int64_t Store::append_locked(const std::string& job_id, const std::string& event,
                                  const std::string& data) {
  Stmt s(db_, "INSERT INTO job_events(job_id, idx, event, data) VALUES (?1, "
              "(SELECT COALESCE(MAX(idx) + 1, 0) FROM job_events WHERE job_id = ?1), "
              "?2, ?3) RETURNING idx");
  s.bind(1, job_id).bind(2, event).bind(3, data);
  s.step();
  std::int64_t idx = s.int64(0);
  s.run();
  return idx;
}

std::optional<JobRow> Store::job_locked(const std::string& id) {
  Stmt s(db_, (std::string("SELECT ") + kJobColumns + " FROM jobs WHERE id = ?").c_str());
  s.bind(1, id);
  if (!s.step()) return std::nullopt;
  return read_job(s);
}

JobRow Store::create_job(const std::string& owner, const std::string& source,
                         const std::string& options) {
  std::lock_guard lock(mu_);
  Tx tx(*this);
  const std::string id = random_hex(16);
  Stmt(db_, "INSERT INTO jobs(id, owner, source, options, state, submitted_at) "
            "VALUES (?, ?, ?, ?, 'queued', ?)")
      .bind(1, id).bind(2, owner).bind(3, source).bind(4, options)
      .bind(5, now_micros()).run();
  append_locked(id, "status", "queued");
  tx.commit();
  return *job_locked(id);
}

std::optional<JobRow> Store::get_job(const std::string& id) {
  std::lock_guard lock(mu_);
  return job_locked(id);
}

std::optional<JobRow> Store::claim_next() {
  std::lock_guard lock(mu_);
  Tx tx(*this);
  Stmt s(db_, (std::string("UPDATE jobs SET state = 'running', started_at = ? "
                           "WHERE seq = (SELECT seq FROM jobs WHERE state = 'queued' "
                           "ORDER BY seq LIMIT 1) AND state = 'queued' RETURNING ") +
               kJobColumns).c_str());
  s.bind(1, now_micros());
  if (!s.step()) return std::nullopt;
  JobRow job = read_job(s);
  s.run();
  append_locked(job.id, "status", "running");
  tx.commit();
  return job;
}

std::int64_t Store::append_event(const std::string& job_id, const std::string& event,
                                 const std::string& data) {
  std::lock_guard lock(mu_);
  return append_locked(job_id, event, data);
}

void Store::finish_done(const std::string& job_id, const std::string& result) {
  std::lock_guard lock(mu_);
  Tx tx(*this);
  Stmt(db_, "UPDATE jobs SET state = 'done', finished_at = ?, result = ? "
            "WHERE id = ? AND state = 'running'")
      .bind(1, now_micros()).bind(2, result).bind(3, job_id).run();
  if (sqlite3_changes(db_) == 0) throw StoreError("job " + job_id + " is not running");
  append_locked(job_id, "model", result);
  append_locked(job_id, "status", "done");
  append_locked(job_id, "done", job_id);
  tx.commit();
}

void Store::finish_failed(const std::string& job_id, const std::string& error) {
  std::lock_guard lock(mu_);
  Tx tx(*this);
  Stmt(db_, "UPDATE jobs SET state = 'failed', finished_at = ?, error = ? "
            "WHERE id = ? AND state = 'running'")
      .bind(1, now_micros()).bind(2, error).bind(3, job_id).run();
  if (sqlite3_changes(db_) == 0) throw StoreError("job " + job_id + " is not running");
  append_locked(job_id, "status", "failed");
  append_locked(job_id, "error", error);
  tx.commit();
}

std::vector<EventRow> Store::events_locked(const std::string& job_id, std::int64_t from) {
  std::vector<EventRow> out;
  Stmt s(db_, "SELECT idx, event, data FROM job_events WHERE job_id = ? AND idx >= ? "
              "ORDER BY idx");
  s.bind(1, job_id).bind(2, from);
  while (s.step()) out.push_back(EventRow{s.int64(0), s.text(1), s.text(2)});
  return out;
}

std::vector<EventRow> Store::events(const std::string& job_id, std::int64_t from) {
  std::lock_guard lock(mu_);
  return events_locked(job_id, from);
}

std::int64_t Store::event_count(const std::string& job_id) {
  std::lock_guard lock(mu_);
  Stmt s(db_, "SELECT COUNT(*) FROM job_events WHERE job_id = ?");
  s.bind(1, job_id);
  s.step();
  return s.int64(0);
}

std::size_t Store::recover() {
  std::lock_guard lock(mu_);
  Tx tx(*this);
  // Keep only the submission event; the rerun rebuilds the rest.
  Stmt(db_, "DELETE FROM job_events WHERE idx > 0 AND job_id IN "
            "(SELECT id FROM jobs WHERE state = 'running')").run();
  Stmt(db_, "UPDATE jobs SET state = 'queued', started_at = NULL "
            "WHERE state = 'running'").run();
  auto n = static_cast<std::size_t>(sqlite3_changes(db_));
  tx.commit();
  return n;
}

std::size_t Store::expire(Micros cutoff) {
  std::lock_guard lock(mu_);
  Tx tx(*this);
  Stmt(db_, "DELETE FROM job_events WHERE job_id IN (SELECT id FROM jobs WHERE "
            "state IN ('done', 'failed') AND finished_at < ?)").bind(1, cutoff).run();
  Stmt(db_, "DELETE FROM jobs WHERE state IN ('done', 'failed') AND finished_at < ?")
      .bind(1, cutoff).run();
  auto n = static_cast<std::size_t>(sqlite3_changes(db_));
  tx.commit();
  return n;
}

// --- stories ----------------------------------------------------------------

std::optional<StoryRow> Store::story_locked(const std::string& id) {
  Stmt s(db_, (std::string(kStorySelect) + "WHERE s.id = ?").c_str());
  s.bind(1, id);
  if (!s.step()) return std::nullopt;
  return read_story(s);
}

StoryRow Store::create_story(const std::string& owner, const std::string& title,
                             const std::string& source, StoryVisibility v) {
  std::lock_guard lock(mu_);
  const std::string id = random_hex(16);
  const Micros now = now_micros();
  Stmt(db_, "INSERT INTO stories(id, owner, title, source, visibility, created_at, "
            "updated_at) VALUES (?, ?, ?, ?, ?, ?, ?)")
      .bind(1, id).bind(2, owner).bind(3, title).bind(4, source)
      .bind(5, std::string(to_string(v))).bind(6, now).bind(7, now).run();
  return *story_locked(id);
}

std::optional<StoryRow> Store::get_story(const std::string& id) {
  std::lock_guard lock(mu_);
  return story_locked(id);
}

void Store::update_story(const std::string& id, const std::optional<std::string>& title,
                         const std::optional<std::string>& source) {
  std::lock_guard lock(mu_);
  Stmt(db_, "UPDATE stories SET title = COALESCE(?, title), "
            "source = COALESCE(?, source), updated_at = ? WHERE id = ?")
      .bind(1, title).bind(2, source).bind(3, now_micros()).bind(4, id).run();
}

void Store::share_story(const std::string& id) {
  std::lock_guard lock(mu_);
  Stmt(db_, "UPDATE stories SET visibility = 'public', updated_at = ? "
            "WHERE id = ? AND visibility = 'personal'")
      .bind(1, now_micros()).bind(2, id).run();
}

std::vector<StoryRow> Store::stories_of(const std::string& owner) {
  std::lock_guard lock(mu_);
  std::vector<StoryRow> out;
  Stmt s(db_, (std::string(kStorySelect) + "WHERE s.owner = ? ORDER BY s.seq DESC").c_str());
  s.bind(1, owner);
  while (s.step()) out.push_back(read_story(s));
  return out;
}

std::vector<StoryRow> Store::public_stories() {
  std::lock_guard lock(mu_);
  std::vector<StoryRow> out;
  Stmt s(db_, (std::string(kStorySelect) +
               "WHERE s.visibility = 'public' ORDER BY s.seq DESC").c_str());
  while (s.step()) out.push_back(read_story(s));
  return out;
}

CommentRow Store::add_comment(const std::string& story_id, const std::string& author,
                              const std::string& body) {
  std::lock_guard lock(mu_);
  CommentRow c{random_hex(16), story_id, author, "", body, now_micros()};
  Stmt(db_, "INSERT INTO comments(id, story_id, author, body, created_at) "
            "VALUES (?, ?, ?, ?, ?)")
      .bind(1, c.id).bind(2, story_id).bind(3, author).bind(4, body)
      .bind(5, c.created_at).run();
  Stmt s(db_, "SELECT username FROM users WHERE id = ?");
  s.bind(1, author);
  if (s.step()) c.author_name = s.text(0);
  return c;
}

std::vector<CommentRow> Store::comments(const std::string& story_id) {
  std::lock_guard lock(mu_);
  std::vector<CommentRow> out;
  Stmt s(db_, "SELECT c.id, c.story_id, c.author, u.username, c.body, c.created_at "
              "FROM comments c JOIN users u ON u.id = c.author "
              "WHERE c.story_id = ? ORDER BY c.seq DESC");
  s.bind(1, story_id);
  while (s.step())
    out.push_back(CommentRow{s.text(0), s.text(1), s.text(2), s.text(3), s.text(4),
                             s.int64(5)});
  return out;
}

}  // namespace star::service
