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

#include <filesystem>
#include <thread>

#include <gtest/gtest.h>

#include "http_client.hpp"
#include "star/pipeline.hpp"
#include "star/service/service.hpp"
#include "story_files.hpp"

namespace star::service {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;
using star::testing::ApiClient;
using star::testing::SseEvent;

class ServiceTest : public ::testing::Test {
 protected:
  void SetUp() override {
    db_ = fs::temp_directory_path() /
          ("star_service_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()) +
           ".db");
    wipe();
  }
  void TearDown() override {
    service_.reset();
    wipe();
  }
  void wipe() {
    for (const char* suffix : {"", "-wal", "-shm"}) fs::remove(db_.string() + suffix);
  }

  ApiClient start(unsigned workers = 1, std::chrono::milliseconds delay = {},
                  std::chrono::seconds ttl = std::chrono::hours(1)) {
    Config c;
    c.port = 0;
    c.workers = workers;
    c.store_path = db_.string();
    c.fast_password_hashing = true;
    c.raw_line_delay = delay;
    c.job_ttl = ttl;
    c.max_source = 64 << 10;
    service_ = std::make_unique<Service>(c);
    port_ = service_->start();
    return ApiClient("127.0.0.1", port_);
  }

  ApiClient user(const std::string& name) {
    ApiClient c("127.0.0.1", port_);
    c.sign_in(name);
    return c;
  }

  json wait_finished(const ApiClient& c, const std::string& id) {
    for (int i = 0; i < 400; ++i) {
      json v = c.get("/api/jobs/" + id).json();
      if (v.at("state") == "done" || v.at("state") == "failed") return v;
      std::this_thread::sleep_for(std::chrono::milliseconds(25));
    }
    ADD_FAILURE() << "job " << id << " never finished";
    return {};
  }

  std::string submit(const ApiClient& c, const std::string& source, json options = json::object()) {
    auto r = c.post("/api/jobs", {{"source", source}, {"options", options}});
    EXPECT_EQ(r.status, 202) << r.body;
    return r.json().at("job_id").get<std::string>();
  }

  fs::path db_;
  std::unique_ptr<Service> service_;
  int port_ = 0;
};

const std::string kStory = star::testing::read_story_file("ann_mary.dmn");

TEST_F(ServiceTest, RegisterLoginLogout) {
  ApiClient c = start(0);
  auto r = c.post("/api/register", {{"username", "ann"}, {"password", "correct horse"}});
  ASSERT_EQ(r.status, 201);
  EXPECT_TRUE(r.json().contains("user_id"));
  std::string token = r.json().at("token");
  EXPECT_EQ(c.post("/api/register", {{"username", "ann"}, {"password", "correct horse"}}).status, 409);
  EXPECT_EQ(c.post("/api/register", {{"username", "a"}, {"password", "correct horse"}}).status, 422);
  EXPECT_EQ(c.post("/api/register", {{"username", "bad name"}, {"password", "correct horse"}}).status, 422);
  EXPECT_EQ(c.post("/api/register", {{"username", "bob"}, {"password", "short"}}).status, 422);
  EXPECT_EQ(c.post("/api/register", {{"username", "bob"}}).status, 422);
  EXPECT_EQ(c.post_raw("/api/register", "not json", "application/json").status, 400);

  EXPECT_EQ(c.post("/api/login", {{"username", "ann"}, {"password", "wrong horse"}}).status, 401);
  EXPECT_EQ(c.post("/api/login", {{"username", "nobody"}, {"password", "wrong horse"}}).status, 401);
  auto login = c.post("/api/login", {{"username", "ann"}, {"password", "correct horse"}});
  ASSERT_EQ(login.status, 200);
  std::string second = login.json().at("token");
  EXPECT_NE(second, token);

  c.set_token(second);
  EXPECT_EQ(c.get("/api/stories").status, 200);
  EXPECT_EQ(c.post("/api/logout", json::object()).status, 204);
  EXPECT_EQ(c.get("/api/stories").status, 401);
  c.set_token(token);
  EXPECT_EQ(c.get("/api/stories").status, 200);
}

TEST_F(ServiceTest, EndpointsRequireAuth) {
  ApiClient c = start(0);
  for (const char* path : {"/api/stories", "/api/public-stories", "/api/jobs/abc", "/api/jobs/abc/events"}) {
    auto r = c.get(path);
    EXPECT_EQ(r.status, 401) << path;
    EXPECT_EQ(r.json().at("error"), "unauthenticated");
  }
  EXPECT_EQ(c.post("/api/jobs", {{"source", "s(0) :: a at 1."}}).status, 401);
  c.set_token("deadbeef");
  EXPECT_EQ(c.get("/api/stories").status, 401);
}

TEST_F(ServiceTest, UnknownEndpointIsJson404) {
  ApiClient c = start(0);
  auto r = c.get("/api/nothing");
  EXPECT_EQ(r.status, 404);
  EXPECT_EQ(r.json().at("error"), "not_found");
}

TEST_F(ServiceTest, JobRunsToCompletion) {
  start();
  ApiClient c = user("ann");
  std::string id = submit(c, kStory, {{"report", "acceptable"}});
  json v = wait_finished(c, id);
  EXPECT_EQ(v.at("state"), "done");
  EXPECT_EQ(v.at("id"), id);
  EXPECT_TRUE(v.contains("started_at"));
  EXPECT_TRUE(v.contains("finished_at"));
  EXPECT_EQ(v.at("options").at("report"), "acceptable");
  const json& result = v.at("result");
  EXPECT_EQ(result.at("schema_version"), 1);
  EXPECT_EQ(result.at("sessions").at(0).at("horizon"), 7);
  EXPECT_FALSE(result.at("sessions").at(0).at("report").at("acceptable").empty());
}

TEST_F(ServiceTest, ReplayMatchesCommandLineOutput) {
  start();
  ApiClient c = user("ann");
  std::string id = submit(c, kStory, {{"report", json::array({"acceptable", "qualified"})}});
  wait_finished(c, id);
  int status = 0;
  auto events = c.events("/api/jobs/" + id + "/events", {}, std::chrono::seconds(10), {}, &status);
  EXPECT_EQ(status, 200);

  std::string raw;
  std::vector<std::string> sequence;
  for (const auto& e : events) {
    if (e.event == "raw") raw += e.data + "\n";
    else sequence.push_back(e.event == "status" ? "status:" + e.data : e.event);
  }
  EXPECT_EQ(sequence, (std::vector<std::string>{"status:queued", "status:running", "model", "status:done", "done"}));
  for (std::size_t i = 0; i < events.size(); ++i) EXPECT_EQ(events[i].id, static_cast<std::int64_t>(i));
  EXPECT_EQ(events.back().data, id);

  ReadOptions o;
  o.report = *TraceSet::parse("acceptable,qualified");
  std::string expected;
  read_story(kStory, o, [&](std::string_view l) { expected += std::string(l) + "\n"; });
  EXPECT_EQ(raw, expected);
}

TEST_F(ServiceTest, ResumeFromPosition) {
  start();
  ApiClient c = user("ann");
  std::string id = submit(c, kStory);
  wait_finished(c, id);
  auto all = c.events("/api/jobs/" + id + "/events");
  ASSERT_GT(all.size(), 5u);
  auto tail = c.events("/api/jobs/" + id + "/events?from=3");
  ASSERT_EQ(tail.size(), all.size() - 3);
  EXPECT_EQ(tail.front(), all[3]);
  auto after = c.events("/api/jobs/" + id + "/events", {{"Last-Event-ID", "4"}});
  ASSERT_EQ(after.size(), all.size() - 5);
  EXPECT_EQ(after.front(), all[5]);
  int status = 0;
  c.events("/api/jobs/" + id + "/events?from=x", {}, std::chrono::seconds(5), {}, &status);
  EXPECT_EQ(status, 400);
}

TEST_F(ServiceTest, LiveStreamFollowsRun) {
  start(1, std::chrono::milliseconds(20));
  ApiClient c = user("ann");
  std::string id = submit(c, kStory);
  // Without a position a live job streams from the end of its log, so ask
  // for everything explicitly and watch it grow.
  auto events = c.events("/api/jobs/" + id + "/events?from=0");
  ASSERT_FALSE(events.empty());
  EXPECT_EQ(events.front().data, "queued");
  EXPECT_EQ(events.back().event, "done");
  std::size_t raws = 0;
  for (const auto& e : events) raws += e.event == "raw";
  EXPECT_GT(raws, 10u);
}

TEST_F(ServiceTest, FailedJobReportsDiagnostics) {
  start();
  ApiClient c = user("ann");
  std::string id = submit(c, "p(1) :: a implies X.\n");
  json v = wait_finished(c, id);
  EXPECT_EQ(v.at("state"), "failed");
  EXPECT_NE(v.at("error").get<std::string>().find("error"), std::string::npos);
  EXPECT_FALSE(v.contains("result"));
  auto events = c.events("/api/jobs/" + id + "/events");
  ASSERT_GE(events.size(), 2u);
  EXPECT_EQ(events[events.size() - 2].data, "failed");
  EXPECT_EQ(events.back().event, "error");

  std::string cyc = submit(c, "p(1) :: true implies -b.\np(2) :: -b implies b.\np(2) >> p(1).\n");
  EXPECT_EQ(wait_finished(c, cyc).at("state"), "failed");
  std::string bad_session = submit(c, "s(0) :: a at 1.", {{"session", 4}});
  EXPECT_EQ(wait_finished(c, bad_session).at("state"), "failed");
}

TEST_F(ServiceTest, SubmissionValidation) {
  start(0);
  ApiClient c = user("ann");
  EXPECT_EQ(c.post("/api/jobs", json::object()).status, 422);
  EXPECT_EQ(c.post("/api/jobs", {{"source", 3}}).status, 422);
  EXPECT_EQ(c.post("/api/jobs", {{"source", "  \n"}}).status, 422);
  EXPECT_EQ(c.post("/api/jobs", {{"source", "a."}, {"options", {{"report", "bogus"}}}}).status, 422);
  EXPECT_EQ(c.post("/api/jobs", {{"source", "a."}, {"options", {{"horizon_slack", -1}}}}).status, 422);
  EXPECT_EQ(c.post("/api/jobs", {{"source", "a."}, {"options", {{"session", "one"}}}}).status, 422);
  EXPECT_EQ(c.post("/api/jobs", {{"source", "a."}, {"options", 5}}).status, 422);
  EXPECT_EQ(c.post("/api/jobs", {{"source", std::string(70 << 10, 'a')}}).status, 413);
  EXPECT_EQ(c.post_raw("/api/jobs", "[1,2]", "application/json").status, 400);
}

TEST_F(ServiceTest, JobsArePrivate) {
  start(0);
  ApiClient ann = user("ann");
  ApiClient mary = user("mary");
  std::string id = submit(ann, kStory);
  EXPECT_EQ(ann.get("/api/jobs/" + id).status, 200);
  EXPECT_EQ(mary.get("/api/jobs/" + id).status, 403);
  EXPECT_EQ(mary.get("/api/jobs/" + id + "/events").status, 403);
  EXPECT_EQ(ann.get("/api/jobs/0123abcd").status, 404);
  json v = ann.get("/api/jobs/" + id).json();
  EXPECT_EQ(v.at("state"), "queued");
  EXPECT_FALSE(v.contains("started_at"));
}

TEST_F(ServiceTest, FifoWithOneWorker) {
  start(1);
  ApiClient c = user("ann");
  std::vector<std::string> ids;
  for (int i = 0; i < 6; ++i) ids.push_back(submit(c, kStory));
  for (const auto& id : ids) wait_finished(c, id);
  std::string prev_finish;
  for (const auto& id : ids) {
    json v = c.get("/api/jobs/" + id).json();
    EXPECT_EQ(v.at("state"), "done");
    // ISO timestamps with fixed width order lexicographically.
    EXPECT_GE(v.at("started_at").get<std::string>(), prev_finish);
    prev_finish = v.at("finished_at");
  }
}

TEST_F(ServiceTest, RestartKeepsQueuedJobs) {
  std::string token, id;
  {
    ApiClient c = start(0);
    c.sign_in("ann");
    token = c.token();
    id = submit(c, kStory);
    service_.reset();
  }
  ApiClient c = start(1);
  c.set_token(token);
  EXPECT_EQ(wait_finished(c, id).at("state"), "done");
}

TEST_F(ServiceTest, InterruptedRunIsRequeued) {
  std::string token, id;
  {
    ApiClient c = start(1, std::chrono::milliseconds(200));
    c.sign_in("ann");
    token = c.token();
    id = submit(c, kStory);
    for (int i = 0; i < 100 && c.get("/api/jobs/" + id).json().at("state") != "running"; ++i)
      std::this_thread::sleep_for(std::chrono::milliseconds(20));
    service_->stop();
    EXPECT_EQ(service_->store().get_job(id)->state, JobState::Running);
    service_.reset();
  }
  ApiClient c = start(1);
  c.set_token(token);
  EXPECT_EQ(wait_finished(c, id).at("state"), "done");
  auto events = c.events("/api/jobs/" + id + "/events");
  std::size_t running = 0;
  for (const auto& e : events) running += e.data == "running";
  EXPECT_EQ(running, 1u);
}

TEST_F(ServiceTest, FinishedJobsExpire) {
  start(1, {}, std::chrono::seconds(1));
  ApiClient c = user("ann");
  std::string id = submit(c, "s(0) :: a at 1.");
  wait_finished(c, id);
  int status = 200;
  for (int i = 0; i < 100 && status == 200; ++i) {
    std::this_thread::sleep_for(std::chrono::milliseconds(100));
    status = c.get("/api/jobs/" + id).status;
  }
  EXPECT_EQ(status, 404);
}

TEST_F(ServiceTest, StoriesAndSharing) {
  start(0);
  ApiClient ann = user("ann");
  ApiClient mary = user("mary");
  auto created = ann.post("/api/stories", {{"title", "Doorbell"}, {"source", kStory}});
  ASSERT_EQ(created.status, 201);
  json s = created.json();
  std::string id = s.at("id");
  EXPECT_EQ(s.at("visibility"), "personal");
  EXPECT_EQ(s.at("source"), kStory);
  EXPECT_EQ(s.at("owner_name"), "ann");

  auto listing = ann.get("/api/stories").json();
  ASSERT_EQ(listing.size(), 1u);
  EXPECT_FALSE(listing[0].contains("source"));
  EXPECT_EQ(mary.get("/api/stories/" + id).status, 403);
  EXPECT_EQ(mary.post("/api/stories/" + id + "/copy", json::object()).status, 403);
  EXPECT_EQ(ann.post("/api/stories/" + id + "/comments", {{"body", "hi"}}).status, 409);
  EXPECT_TRUE(mary.get("/api/public-stories").json().empty());

  auto put = ann.put("/api/stories/" + id, {{"title", "Doorbell 2"}});
  ASSERT_EQ(put.status, 200);
  EXPECT_EQ(put.json().at("title"), "Doorbell 2");
  EXPECT_EQ(put.json().at("source"), kStory);
  EXPECT_EQ(ann.put("/api/stories/" + id, json::object()).status, 422);
  EXPECT_EQ(mary.put("/api/stories/" + id, {{"title", "mine"}}).status, 403);

  EXPECT_EQ(mary.post("/api/stories/" + id + "/share", json::object()).status, 403);
  auto shared = ann.post("/api/stories/" + id + "/share", json::object());
  ASSERT_EQ(shared.status, 200);
  EXPECT_EQ(shared.json().at("visibility"), "public");
  EXPECT_EQ(mary.get("/api/public-stories").json().size(), 1u);
  EXPECT_EQ(mary.get("/api/stories/" + id).status, 200);
  EXPECT_EQ(mary.put("/api/stories/" + id, {{"title", "mine"}}).status, 403);

  EXPECT_EQ(mary.post("/api/stories/" + id + "/comments", {{"body", ""}}).status, 422);
  ASSERT_EQ(mary.post("/api/stories/" + id + "/comments", {{"body", "Nice"}}).status, 201);
  ASSERT_EQ(ann.post("/api/stories/" + id + "/comments", {{"body", "Thanks"}}).status, 201);
  auto comments = mary.get("/api/stories/" + id + "/comments").json();
  ASSERT_EQ(comments.size(), 2u);
  EXPECT_EQ(comments[0].at("body"), "Thanks");
  EXPECT_EQ(comments[1].at("author_name"), "mary");
  EXPECT_EQ(mary.get("/api/public-stories").json()[0].at("comment_count"), 2);

  auto copy = mary.post("/api/stories/" + id + "/copy", json::object());
  ASSERT_EQ(copy.status, 201);
  EXPECT_EQ(copy.json().at("visibility"), "personal");
  EXPECT_EQ(copy.json().at("owner_name"), "mary");
  EXPECT_NE(copy.json().at("id"), id);
  EXPECT_EQ(mary.get("/api/stories").json().size(), 1u);

  EXPECT_EQ(ann.get("/api/stories/00ff").status, 404);
  EXPECT_EQ(ann.post("/api/stories", {{"title", ""}, {"source", "x"}}).status, 422);
  EXPECT_EQ(ann.post("/api/stories", {{"title", "t"}, {"source", std::string(70 << 10, 'a')}}).status, 413);
}

TEST(Config, Environment) {
  ::setenv("STAR_PORT", "9123", 1);
  ::setenv("STAR_WORKERS", "3", 1);
  ::setenv("STAR_JOB_TTL", "60", 1);
  ::setenv("STAR_MAX_SOURCE", "2048", 1);
  ::setenv("STAR_STORE", "/tmp/x.db", 1);
  Config c;
  c.load_env();
  EXPECT_EQ(c.port, 9123);
  EXPECT_EQ(c.workers, 3u);
  EXPECT_EQ(c.job_ttl, std::chrono::seconds(60));
  EXPECT_EQ(c.max_source, 2048u);
  EXPECT_EQ(c.store_path, "/tmp/x.db");
  ::setenv("STAR_PORT", "eighty", 1);
  EXPECT_THROW(c.load_env(), std::invalid_argument);
  for (const char* v : {"STAR_PORT", "STAR_WORKERS", "STAR_JOB_TTL", "STAR_MAX_SOURCE", "STAR_STORE"})
    ::unsetenv(v);
}

}  // namespace
}  // namespace star::service
