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

#ifndef STAR_SERVICE_STORE_HPP_
#define STAR_SERVICE_STORE_HPP_

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

struct sqlite3;

namespace star::service {

/// Microseconds since the Unix epoch.
using Micros = std::int64_t;
Micros now_micros();
/// "2026-01-02T03:04:05.678901Z"
std::string iso_time(Micros t);

class StoreError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct UserRow {
  std::string id;
  std::string username;
  std::string credential;  // libsodium password hash string
};

enum class JobState { Queued, Running, Done, Failed };
const char* to_string(JobState s);

struct JobRow {
  std::int64_t seq = 0;  // submission order
  std::string id;
  std::string owner;
  std::string source;
  std::string options;  // JSON object
  JobState state = JobState::Queued;
  Micros submitted_at = 0;
  std::optional<Micros> started_at;
  std::optional<Micros> finished_at;
  std::optional<std::string> result;  // ModelDocument JSON
  std::optional<std::string> error;
};

struct EventRow {
  std::int64_t index = 0;  // 0-based position in the job's log
  std::string event;
  std::string data;
};

enum class StoryVisibility { Personal, Public };
const char* to_string(StoryVisibility v);

struct StoryRow {
  std::int64_t seq = 0;
  std::string id;
  std::string owner;
  std::string owner_name;
  std::string title;
  std::string source;
  StoryVisibility visibility = StoryVisibility::Personal;
  Micros created_at = 0;
  Micros updated_at = 0;
  std::int64_t comment_count = 0;
};

struct CommentRow {
  std::string id;
  std::string story_id;
  std::string author;
  std::string author_name;
  std::string body;
  Micros created_at = 0;
};

/// Durable state of the service in one SQLite file. Every method is a single
/// transaction guarded by one mutex, which makes job-state changes atomic.
class Store {
 public:
  /// Opens or creates the database. Jobs left Running by a previous process
  /// are put back in the queue (see recover()).
  explicit Store(const std::string& path);
  ~Store();
  Store(const Store&) = delete;
  Store& operator=(const Store&) = delete;

  // Accounts. create_user returns nullopt when the name is taken.
  std::optional<UserRow> create_user(const std::string& username,
                                     const std::string& credential);
  std::optional<UserRow> find_user(const std::string& username);
  void add_token(const std::string& token_hash, const std::string& user_id);
  std::optional<std::string> user_for_token(const std::string& token_hash);
  void revoke_token(const std::string& token_hash);

  // Jobs. Each state change appends its `status` event in the same
  // transaction.
  JobRow create_job(const std::string& owner, const std::string& source,
                    const std::string& options);
  std::optional<JobRow> get_job(const std::string& id);
  /// Oldest Queued job moved to Running, or nullopt.
  std::optional<JobRow> claim_next();
  std::int64_t append_event(const std::string& job_id, const std::string& event,
                            const std::string& data);
  /// Running -> Done: appends `model`, `status(done)` and `done`.
  void finish_done(const std::string& job_id, const std::string& result);
  /// Running -> Failed: appends `status(failed)` and `error`.
  void finish_failed(const std::string& job_id, const std::string& error);
  std::vector<EventRow> events(const std::string& job_id, std::int64_t from = 0);
  std::int64_t event_count(const std::string& job_id);
  /// Running jobs revert to Queued and lose the events of the aborted run.
  std::size_t recover();
  /// Deletes finished jobs (and their events) that ended before `cutoff`.
  std::size_t expire(Micros cutoff);

  // Stories and comments. Listings are newest first.
  StoryRow create_story(const std::string& owner, const std::string& title,
                        const std::string& source,
                        StoryVisibility v = StoryVisibility::Personal);
  std::optional<StoryRow> get_story(const std::string& id);
  void update_story(const std::string& id, const std::optional<std::string>& title,
                    const std::optional<std::string>& source);
  void share_story(const std::string& id);
  std::vector<StoryRow> stories_of(const std::string& owner);
  std::vector<StoryRow> public_stories();
  CommentRow add_comment(const std::string& story_id, const std::string& author,
                         const std::string& body);
  std::vector<CommentRow> comments(const std::string& story_id);

 private:
  class Tx;
  void exec(const char* sql);
  std::vector<EventRow> events_locked(const std::string& job_id, std::int64_t from);
  std::int64_t append_locked(const std::string& job_id, const std::string& event,
                             const std::string& data);
  std::optional<JobRow> job_locked(const std::string& id);
  std::optional<StoryRow> story_locked(const std::string& id);

  std::mutex mu_;
  sqlite3* db_ = nullptr;
};

}  // namespace star::service

#endif  // STAR_SERVICE_STORE_HPP_
