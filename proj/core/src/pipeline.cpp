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

#include "star/pipeline.hpp"

#include <string>

#include "star/model_io.hpp"
#include "star/parser.hpp"

namespace star {

UnknownSession::UnknownSession(int session)
    : std::invalid_argument("session s(" + std::to_string(session) +
                            ") is not declared") {}

ReadOutcome read_story(std::string_view source, const ReadOptions& options,
                       const std::function<void(std::string_view)>& raw_line) {
  ReadOutcome out;
  ParseResult parsed = parse_domain(source);
  out.diagnostics = std::move(parsed.diagnostics);
  for (auto& d : validate_domain(parsed.domain)) out.diagnostics.push_back(std::move(d));
  if (!out.ok()) return out;

  const Domain& d = parsed.domain;
  if (options.session) {
    bool declared = d.sessions.empty() && *options.session == 0;
    for (const auto& s : d.sessions) declared = declared || s.session == *options.session;
    if (!declared) throw UnknownSession(*options.session);
  }

  run_sessions(d, options.slack, options.report, [&](const SessionResult& r) {
    if (options.session && r.session != *options.session) return;
    if (raw_line)
      render_raw_lines(r, options.visible ? *options.visible : r.visible,
                       options.report, raw_line);
    out.sessions.push_back(r);
  });
  return out;
}

}  // namespace star
