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

#ifndef STAR_PIPELINE_HPP_
#define STAR_PIPELINE_HPP_

#include <functional>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "star/ast.hpp"
#include "star/diagnostic.hpp"
#include "star/reasoner.hpp"

namespace star {

// The engine path shared by the command line and the job service:
// parse, validate, ground, run the sessions and render raw lines.

struct ReadOptions {
  int slack = 2;
  TraceSet report;
  std::optional<int> session;            // nullopt runs every session
  std::optional<Visibility> visible;     // overrides the declarations
};

struct ReadOutcome {
  std::vector<Diagnostic> diagnostics;   // parse and validation, in order
  std::vector<SessionResult> sessions;   // empty when diagnostics hold errors
  bool ok() const { return !has_errors(diagnostics); }
};

class UnknownSession : public std::invalid_argument {
 public:
  explicit UnknownSession(int session);
};

/// Runs the whole pipeline. `raw_line` sees every raw output line (without
/// newline) as soon as its session is complete. Engine failures propagate as
/// EngineError; a `session` that is not declared throws UnknownSession.
ReadOutcome read_story(std::string_view source, const ReadOptions& options,
                       const std::function<void(std::string_view)>& raw_line = {});

}  // namespace star

#endif  // STAR_PIPELINE_HPP_
