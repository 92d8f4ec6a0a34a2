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

#include "star/service/service.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <condition_variable>
#include <cstdlib>
#include <iostream>
#include <mutex>
#include <thread>
#include <vector>

#include "httplib.h"
#include "json.hpp"
#include "star/model_io.hpp"
#include "star/pipeline.hpp"
#include "star/service/crypto.hpp"

namespace star::service {

using nlohmann::json;

unsigned Config::default_workers() {
  return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

long long env_number(const char* name, long long fallback) {
  const char* v = std::getenv(name);
  if (!v || !*v) return fallback;
  char* end = nullptr;
  long long n = std::strtoll(v, &end, 10);
  if (*end != '\0' || n < 0) throw std::invalid_argument(std::string(name) + ": " + v);
  return n;
}

}  // namespace

void Config::load_env() {
  port = static_cast<int>(env_number("STAR_PORT", port));
  workers = static_cast<unsigned>(env_number("STAR_WORKERS", workers));
  job_ttl = std::chrono::seconds(env_number("STAR_JOB_TTL", job_ttl.count()));
  max_source = static_cast<std::size_t>(env_number("STAR_MAX_SOURCE",
                                                   static_cast<long long>(max_source)));
  if (const char* s = std::getenv("STAR_STORE"); s && *s) store_path = s;
}

namespace {

// Raised from the raw-line callback when the service shuts down mid-run; the
// job stays Running and is requeued on the next start.
struct Interrupted {};

// Wakes stream subscribers whenever any job log grows.
class EventHub {
 public:
  std::uint64_t generation() {
    std::lock_guard lock(mu_);
    return gen_;
  }
  void notify() {
    {
      std::lock_guard lock(mu_);
      ++gen_;
    }
    cv_.notify_all();
  }
  void wait_change(std::uint64_t seen, std::chrono::milliseconds timeout) {
    std::unique_lock lock(mu_);
    cv_.wait_for(lock, timeout, [&] { return gen_ != seen; });
  }

 private:
  std::mutex mu_;
  std::condition_variable cv_;
  std::uint64_t gen_ = 0;
};

void reply(httplib::Response& res, int status, const json& body) {
  res.status = status;
  res.set_content(body.dump(), "application/json");
}

void fail(httplib::Response& res, int status, const std::string& code,
          const std::string& message) {
  reply(res, status, json{{"error", code}, {"message", message}});
}

std::optional<json> parse_body(const httplib::Request& req, httplib::Response& res) {
  json j = json::parse(req.body, nullptr, false);
  if (j.is_discarded() || !j.is_object()) {
    fail(res, 400, "bad_request", "request body must be a JSON object");
    return std::nullopt;
  }
  return j;
}

std::optional<std::string> string_field(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end() || !it->is_string()) return std::nullopt;
  return it->get<std::string>();
}

json job_view(const JobRow& j) {
  json v{{"id", j.id},
         {"seq", j.seq},
         {"state", to_string(j.state)},
         {"submitted_at", iso_time(j.submitted_at)},
         {"options", json::parse(j.options, nullptr, false)}};
  if (j.started_at) v["started_at"] = iso_time(*j.started_at);
  if (j.finished_at) v["finished_at"] = iso_time(*j.finished_at);
  if (j.result) v["result"] = json::parse(*j.result, nullptr, false);
  if (j.error) v["error"] = *j.error;
  return v;
}

json story_view(const StoryRow& s, bool with_source) {
  json v{{"id", s.id},
         {"owner", s.owner},
         {"owner_name", s.owner_name},
         {"title", s.title},
         {"visibility", to_string(s.visibility)},
         {"created_at", iso_time(s.created_at)},
         {"updated_at", iso_time(s.updated_at)},
         {"comment_count", s.comment_count}};
  if (with_source) v["source"] = s.source;
  return v;
}

json comment_view(const CommentRow& c) {
  return json{{"id", c.id},
              {"story_id", c.story_id},
              {"author", c.author},
              {"author_name", c.author_name},
              {"body", c.body},
              {"created_at", iso_time(c.created_at)}};
}

// Job options accepted at submission: {"report": "a,b" | ["a","b"],
// "horizon_slack": N, "session": N}. Returns an error message on failure.
std::optional<std::string> read_options(const json& j, ReadOptions& out) {
  if (!j.is_object()) return "options must be an object";
  if (auto it = j.find("report"); it != j.end()) {
    std::string list;
    if (it->is_string()) {
      list = it->get<std::string>();
    } else if (it->is_array()) {
      for (const auto& e : *it) {
        if (!e.is_string()) return "report entries must be strings";
        if (!list.empty()) list += ',';
        list += e.get<std::string>();
      }
    } else {
      return "report must be a string or a list";
    }
    if (!list.empty()) {
      auto set = TraceSet::parse(list);
      if (!set) return "unknown report category in '" + list + "'";
      out.report = *set;
    }
  }
  if (auto it = j.find("horizon_slack"); it != j.end()) {
    if (!it->is_number_integer() || it->get<int>() < 0)
      return "horizon_slack must be a non-negative integer";
    out.slack = it->get<int>();
  }
  if (auto it = j.find("session"); it != j.end() && !it->is_null()) {
    if (!it->is_number_integer() || it->get<int>() < 0)
      return "session must be a non-negative integer";
    out.session = it->get<int>();
  }
  return std::nullopt;
}

bool valid_username(const std::string& u) {
  if (u.size() < 3 || u.size() > 64) return false;
  return std::all_of(u.begin(), u.end(), [](unsigned char c) {
    return std::isalnum(c) || c == '_' || c == '-' || c == '.';
  });
}

std::string sse_frame(const EventRow& e) {
  std::string out = "id: " + std::to_string(e.index) + "\nevent: " + e.event + "\n";
  std::size_t start = 0;
  while (true) {
    std::size_t nl = e.data.find('\n', start);
    out += "data: " + e.data.substr(start, nl == std::string::npos ? nl : nl - start) + "\n";
    if (nl == std::string::npos) break;
    start = nl + 1;
  }
  return out + "\n";
}

bool terminal(const std::string& event) { return event == "done" || event == "error"; }

}  // namespace

struct Service::Impl {
  explicit Impl(Config c) : config(std::move(c)), store(config.store_path) {}

  Config config;
  Store store;
  httplib::Server http;
  EventHub hub;

  std::atomic<bool> stopping{false};
  bool started = false;
  std::thread listener;
  std::vector<std::thread> workers;
  std::thread janitor;
  std::mutex wake_mu;
  std::condition_variable wake_cv;

  void wake_workers() { wake_cv.notify_all(); }

  // --- auth ---

  std::string issue_token(const std::string& user_id) {
    std::string token = random_hex(32);
    store.add_token(sha256_hex(token), user_id);
    return token;
  }

  static std::optional<std::string> bearer(const httplib::Request& req) {
    const std::string h = req.get_header_value("Authorization");
    const std::string prefix = "Bearer ";
    if (h.size() <= prefix.size() || h.compare(0, prefix.size(), prefix) != 0)
      return std::nullopt;
    return h.substr(prefix.size());
  }

  /// The caller's user id, or a 401 written to `res`.
  std::optional<std::string> authenticate(const httplib::Request& req,
                                          httplib::Response& res) {
    auto token = bearer(req);
    std::optional<std::string> user;
    if (token) user = store.user_for_token(sha256_hex(*token));
    if (!user) fail(res, 401, "unauthenticated", "a valid bearer token is required");
    return user;
  }

  std::optional<JobRow> owned_job(const std::string& user, const std::string& id,
                                  httplib::Response& res) {
    auto job = store.get_job(id);
    if (!job) {
      fail(res, 404, "not_found", "no job " + id);
      return std::nullopt;
    }
    if (job->owner != user) {
      fail(res, 403, "forbidden", "job belongs to another user");
      return std::nullopt;
    }
    return job;
  }

  std::optional<StoryRow> readable_story(const std::string& user, const std::string& id,
                                         httplib::Response& res) {
    auto s = store.get_story(id);
    if (!s) {
      fail(res, 404, "not_found", "no story " + id);
      return std::nullopt;
    }
    if (s->visibility != StoryVisibility::Public && s->owner != user) {
      fail(res, 403, "forbidden", "story is in another user's personal workspace");
      return std::nullopt;
    }
    return s;
  }

  std::optional<StoryRow> owned_story(const std::string& user, const std::string& id,
                                      httplib::Response& res) {
    auto s = readable_story(user, id, res);
    if (s && s->owner != user) {
      fail(res, 403, "forbidden", "only the owner may change this story");
      return std::nullopt;
    }
    return s;
  }

  // --- workers ---

  void work_loop() {
    while (!stopping) {
      std::optional<JobRow> job;
      try {
        job = store.claim_next();
      } catch (const std::exception& e) {
        std::cerr << "star-server: claim failed: " << e.what() << "\n";
      }
      if (!job) {
        std::unique_lock lock(wake_mu);
        wake_cv.wait_for(lock, std::chrono::milliseconds(500));
        continue;
      }
      hub.notify();
      run_job(*job);
      hub.notify();
    }
  }

  void run_job(const JobRow& job) {
    try {
      ReadOptions options;
      read_options(json::parse(job.options, nullptr, false), options);
      ReadOutcome r = read_story(job.source, options, [&](std::string_view line) {
        if (stopping) throw Interrupted{};
        store.append_event(job.id, "raw", std::string(line));
        hub.notify();
        if (config.raw_line_delay.count() > 0)
          std::this_thread::sleep_for(config.raw_line_delay);
      });
      if (!r.ok()) {
        std::string text;
        for (const auto& d : r.diagnostics) {
          if (!text.empty()) text += '\n';
          text += format_diagnostic(d);
        }
        store.finish_failed(job.id, text);
        return;
      }
      store.finish_done(job.id, to_json(render_model_document(r.sessions, options.visible)));
    } catch (const Interrupted&) {
      // Left Running; recover() requeues it on the next start.
    } catch (const std::exception& e) {
      try {
        store.finish_failed(job.id, e.what());
      } catch (const std::exception& e2) {
        std::cerr << "star-server: job " << job.id << ": " << e2.what() << "\n";
      }
    }
  }

  void janitor_loop() {
    const auto period = std::min<std::chrono::seconds>(config.job_ttl, std::chrono::seconds(60));
    while (!stopping) {
      try {
        store.expire(now_micros() -
                     std::chrono::duration_cast<std::chrono::microseconds>(config.job_ttl).count());
      } catch (const std::exception& e) {
        std::cerr << "star-server: expiry failed: " << e.what() << "\n";
      }
      std::unique_lock lock(wake_mu);
      wake_cv.wait_for(lock, std::max(period, std::chrono::seconds(1)),
                       [&] { return stopping.load(); });
    }
  }

  // --- routes ---

  void routes();
  void stream(const httplib::Request& req, httplib::Response& res);
};

void Service::Impl::routes() {
  http.set_payload_max_length(config.max_source * 2 + (64 << 10));
  http.new_task_queue = [] { return new httplib::ThreadPool(16); };
  http.set_exception_handler([](const httplib::Request&, httplib::Response& res,
                                std::exception_ptr ep) {
    std::string what = "internal error";
    try {
      std::rethrow_exception(ep);
    } catch (const std::exception& e) {
      what = e.what();
    } catch (...) {
    }
    fail(res, 500, "internal", what);
  });
  http.set_error_handler([](const httplib::Request&, httplib::Response& res) {
    if (!res.body.empty()) return;
    if (res.status == 404) fail(res, 404, "not_found", "no such endpoint");
    if (res.status == 413) fail(res, 413, "payload_too_large", "request body too large");
  });

  // Accounts.
  http.Post("/api/register", [this](const httplib::Request& req, httplib::Response& res) {
    auto body = parse_body(req, res);
    if (!body) return;
    auto user = string_field(*body, "username");
    auto pass = string_field(*body, "password");
    if (!user || !pass) return fail(res, 422, "unprocessable", "username and password are required");
    if (!valid_username(*user))
      return fail(res, 422, "unprocessable", "username must be 3-64 characters of [A-Za-z0-9_.-]");
    if (pass->size() < 8) return fail(res, 422, "unprocessable", "password must have at least 8 characters");
    auto row = store.create_user(*user, hash_password(*pass, config.fast_password_hashing));
    if (!row) return fail(res, 409, "conflict", "username already taken");
    reply(res, 201, json{{"token", issue_token(row->id)}, {"user_id", row->id}});
  });
  http.Post("/api/login", [this](const httplib::Request& req, httplib::Response& res) {
    auto body = parse_body(req, res);
    if (!body) return;
    auto user = string_field(*body, "username");
    auto pass = string_field(*body, "password");
    if (!user || !pass) return fail(res, 422, "unprocessable", "username and password are required");
    auto row = store.find_user(*user);
    if (!row || !verify_password(row->credential, *pass))
      return fail(res, 401, "unauthenticated", "wrong username or password");
    reply(res, 200, json{{"token", issue_token(row->id)}, {"user_id", row->id}});
  });
  http.Post("/api/logout", [this](const httplib::Request& req, httplib::Response& res) {
    if (!authenticate(req, res)) return;
    store.revoke_token(sha256_hex(*bearer(req)));
    res.status = 204;
  });

  // Jobs.
  http.Post("/api/jobs", [this](const httplib::Request& req, httplib::Response& res) {
    auto user = authenticate(req, res);
    if (!user) return;
    auto body = parse_body(req, res);
    if (!body) return;
    auto source = string_field(*body, "source");
    if (!source) return fail(res, 422, "unprocessable", "source must be a string");
    if (source->size() > config.max_source)
      return fail(res, 413, "payload_too_large",
                  "source exceeds " + std::to_string(config.max_source) + " bytes");
    if (source->find_first_not_of(" \t\r\n") == std::string::npos)
      return fail(res, 422, "unprocessable", "source is empty");
    json options = body->value("options", json::object());
    ReadOptions parsed;
    if (auto err = read_options(options, parsed)) return fail(res, 422, "unprocessable", *err);
    JobRow job = store.create_job(*user, *source, options.dump());
    hub.notify();
    wake_workers();
    reply(res, 202, json{{"job_id", job.id}});
  });
  http.Get(R"(/api/jobs/([0-9a-f]+))", [this](const httplib::Request& req, httplib::Response& res) {
    auto user = authenticate(req, res);
    if (!user) return;
    auto job = owned_job(*user, req.matches[1], res);
    if (job) reply(res, 200, job_view(*job));
  });
  http.Get(R"(/api/jobs/([0-9a-f]+)/events)",
           [this](const httplib::Request& req, httplib::Response& res) { stream(req, res); });

  // Stories.
  http.Post("/api/stories", [this](const httplib::Request& req, httplib::Response& res) {
    auto user = authenticate(req, res);
    if (!user) return;
    auto body = parse_body(req, res);
    if (!body) return;
    auto title = string_field(*body, "title");
    auto source = string_field(*body, "source");
    if (!title || title->empty() || !source)
      return fail(res, 422, "unprocessable", "title and source are required");
    if (source->size() > config.max_source)
      return fail(res, 413, "payload_too_large", "source too large");
    reply(res, 201, story_view(store.create_story(*user, *title, *source), true));
  });
  http.Get("/api/stories", [this](const httplib::Request& req, httplib::Response& res) {
    auto user = authenticate(req, res);
    if (!user) return;
    json list = json::array();
    for (const auto& s : store.stories_of(*user)) list.push_back(story_view(s, false));
    reply(res, 200, list);
  });
  http.Get("/api/public-stories", [this](const httplib::Request& req, httplib::Response& res) {
    if (!authenticate(req, res)) return;
    json list = json::array();
    for (const auto& s : store.public_stories()) list.push_back(story_view(s, false));
    reply(res, 200, list);
  });
  http.Get(R"(/api/stories/([0-9a-f]+))", [this](const httplib::Request& req, httplib::Response& res) {
    auto user = authenticate(req, res);
    if (!user) return;
    if (auto s = readable_story(*user, req.matches[1], res)) reply(res, 200, story_view(*s, true));
  });
  http.Put(R"(/api/stories/([0-9a-f]+))", [this](const httplib::Request& req, httplib::Response& res) {
    auto user = authenticate(req, res);
    if (!user) return;
    auto s = owned_story(*user, req.matches[1], res);
    if (!s) return;
    auto body = parse_body(req, res);
    if (!body) return;
    auto title = string_field(*body, "title");
    auto source = string_field(*body, "source");
    if ((!title && !source) || (title && title->empty()))
      return fail(res, 422, "unprocessable", "provide a non-empty title or a source");
    if (source && source->size() > config.max_source)
      return fail(res, 413, "payload_too_large", "source too large");
    store.update_story(s->id, title, source);
    reply(res, 200, story_view(*store.get_story(s->id), true));
  });
  http.Post(R"(/api/stories/([0-9a-f]+)/share)", [this](const httplib::Request& req, httplib::Response& res) {
    auto user = authenticate(req, res);
    if (!user) return;
    auto s = owned_story(*user, req.matches[1], res);
    if (!s) return;
    store.share_story(s->id);
    reply(res, 200, story_view(*store.get_story(s->id), true));
  });
  http.Post(R"(/api/stories/([0-9a-f]+)/copy)", [this](const httplib::Request& req, httplib::Response& res) {
    auto user = authenticate(req, res);
    if (!user) return;
    auto s = readable_story(*user, req.matches[1], res);
    if (!s) return;
    reply(res, 201, story_view(store.create_story(*user, s->title, s->source), true));
  });
  http.Post(R"(/api/stories/([0-9a-f]+)/comments)", [this](const httplib::Request& req, httplib::Response& res) {
    auto user = authenticate(req, res);
    if (!user) return;
    auto s = readable_story(*user, req.matches[1], res);
    if (!s) return;
    if (s->visibility != StoryVisibility::Public)
      return fail(res, 409, "conflict", "comments attach only to public stories");
    auto body = parse_body(req, res);
    if (!body) return;
    auto text = string_field(*body, "body");
    if (!text || text->empty()) return fail(res, 422, "unprocessable", "body is required");
    reply(res, 201, comment_view(store.add_comment(s->id, *user, *text)));
  });
  http.Get(R"(/api/stories/([0-9a-f]+)/comments)", [this](const httplib::Request& req, httplib::Response& res) {
    auto user = authenticate(req, res);
    if (!user) return;
    auto s = readable_story(*user, req.matches[1], res);
    if (!s) return;
    json list = json::array();
    for (const auto& c : store.comments(s->id)) list.push_back(comment_view(c));
    reply(res, 200, list);
  });
}

// Finished jobs replay their whole log. Live jobs start at the current end
// of the log; `?from=N` or Last-Event-ID pick another position.
void Service::Impl::stream(const httplib::Request& req, httplib::Response& res) {
  auto user = authenticate(req, res);
  if (!user) return;
  auto job = owned_job(*user, req.matches[1], res);
  if (!job) return;

  std::int64_t from = 0;
  try {
    if (req.has_param("from")) {
      from = std::stoll(req.get_param_value("from"));
    } else if (req.has_header("Last-Event-ID")) {
      from = std::stoll(req.get_header_value("Last-Event-ID")) + 1;
    } else if (job->state == JobState::Queued || job->state == JobState::Running) {
      from = store.event_count(job->id);
    }
  } catch (const std::exception&) {
    return fail(res, 400, "bad_request", "event position must be an integer");
  }
  from = std::max<std::int64_t>(from, 0);

  res.set_header("Cache-Control", "no-cache");
  res.set_header("X-Accel-Buffering", "no");
  const std::string id = job->id;
  res.set_chunked_content_provider(
      "text/event-stream",
      [this, id, next = from](std::size_t, httplib::DataSink& sink) mutable {
        const auto seen = hub.generation();
        auto events = store.events(id, next);
        for (const auto& e : events) {
          std::string frame = sse_frame(e);
          if (!sink.write(frame.data(), frame.size())) return false;
          next = e.index + 1;
          if (terminal(e.event)) {
            sink.done();
            return true;
          }
        }
        if (stopping) {
          sink.done();
          return true;
        }
        if (events.empty()) {
          hub.wait_change(seen, std::chrono::milliseconds(250));
          if (!store.get_job(id)) {  // expired while streaming
            sink.done();
            return true;
          }
        }
        return sink.is_writable();
      });
}

Service::Service(Config config) : impl_(std::make_unique<Impl>(std::move(config))) {
  impl_->routes();
}

Service::~Service() { stop(); }

int Service::start() {
  auto& i = *impl_;
  if (i.started) throw std::logic_error("service already started");
  int port = i.config.port == 0 ? i.http.bind_to_any_port(i.config.host)
                                : (i.http.bind_to_port(i.config.host, i.config.port)
                                       ? i.config.port
                                       : -1);
  if (port < 0)
    throw std::runtime_error("cannot bind " + i.config.host + ":" +
                             std::to_string(i.config.port));
  i.started = true;
  i.listener = std::thread([&i] { i.http.listen_after_bind(); });
  for (unsigned w = 0; w < i.config.workers; ++w)
    i.workers.emplace_back([&i] { i.work_loop(); });
  i.janitor = std::thread([&i] { i.janitor_loop(); });
  i.http.wait_until_ready();
  return port;
}

void Service::stop() {
  auto& i = *impl_;
  if (!i.started || i.stopping.exchange(true)) return;
  i.wake_workers();
  i.hub.notify();
  i.http.stop();
  if (i.listener.joinable()) i.listener.join();
  for (auto& t : i.workers) t.join();
  i.workers.clear();
  if (i.janitor.joinable()) i.janitor.join();
}

void Service::wait() {
  while (!impl_->stopping) std::this_thread::sleep_for(std::chrono::milliseconds(100));
}

Store& Service::store() { return impl_->store; }
const Config& Service::config() const { return impl_->config; }

}  // namespace star::service
