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

#include <csignal>
#include <iostream>
#include <thread>

#include "CLI11.hpp"
#include "star/service/service.hpp"

namespace {
volatile std::sig_atomic_t g_signal = 0;
void on_signal(int sig) { g_signal = sig; }
}  // namespace

int main(int argc, char** argv) {
  star::service::Config config;
  try {
    config.load_env();
  } catch (const std::exception& e) {
    std::cerr << "star-server: bad environment: " << e.what() << "\n";
    return 2;
  }

  CLI::App app{"STAR job and story service", "star-server"};
  app.add_option("--host", config.host, "Listen address");
  app.add_option("--port", config.port, "Listen port (0 picks one)");
  app.add_option("--workers", config.workers, "Reasoning threads");
  long long ttl = config.job_ttl.count();
  app.add_option("--job-ttl", ttl, "Seconds to keep finished jobs")->check(CLI::NonNegativeNumber);
  app.add_option("--max-source", config.max_source, "Largest accepted source in bytes");
  app.add_option("--store", config.store_path, "SQLite database file");
  CLI11_PARSE(app, argc, argv);
  config.job_ttl = std::chrono::seconds(ttl);

  try {
    star::service::Service service(config);
    const int port = service.start();
    std::cerr << "star-server: listening on " << config.host << ":" << port << " with "
              << config.workers << " worker(s)\n";
    std::signal(SIGINT, on_signal);
    std::signal(SIGTERM, on_signal);
    while (!g_signal) std::this_thread::sleep_for(std::chrono::milliseconds(200));
    std::cerr << "star-server: shutting down\n";
    service.stop();
  } catch (const std::exception& e) {
    std::cerr << "star-server: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
