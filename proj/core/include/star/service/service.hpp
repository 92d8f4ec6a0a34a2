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

#ifndef STAR_SERVICE_SERVICE_HPP_
#define STAR_SERVICE_SERVICE_HPP_

#include <chrono>
#include <cstddef>
#include <memory>
#include <string>

#include "star/service/store.hpp"

namespace star::service {

struct Config {
  std::string host = "127.0.0.1";
  int port = 8080;  // 0 picks a free port
  /// Reasoning threads. 0 accepts jobs without running them.
  unsigned workers = default_workers();
  std::chrono::seconds job_ttl{7 * 24 * 3600};
  std::size_t max_source = 1 << 20;
  std::string store_path = "star.db";
  /// Pause after each raw line; lets tests observe a run in progress.
  std::chrono::milliseconds raw_line_delay{0};
  /// Minimum-cost password hashing.
  bool fast_password_hashing = false;

  static unsigned default_workers();
  /// Overrides fields from STAR_PORT, STAR_WORKERS, STAR_JOB_TTL (seconds),
  /// STAR_MAX_SOURCE (bytes) and STAR_STORE. Throws std::invalid_argument on
  /// malformed values.
  void load_env();
};

/// The HTTP service: JSON API under /api, job workers and event streams.
class Service {
 public:
  explicit Service(Config config);
  ~Service();
  Service(const Service&) = delete;
  Service& operator=(const Service&) = delete;

  /// Binds, starts workers and serves on a background thread. Returns the
  /// bound port.
  int start();
  /// Stops serving and joins every thread. Idempotent.
  void stop();
  /// Blocks until stop() is called from another thread.
  void wait();

  Store& store();
  const Config& config() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace star::service

#endif  // STAR_SERVICE_SERVICE_HPP_
