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

#include "star/diagnostic.hpp"

#include <algorithm>

namespace star {

const char* to_string(Severity s) {
  return s == Severity::Error ? "error" : "warning";
}

std::string format_diagnostic(const Diagnostic& d) {
  return std::string(to_string(d.severity)) + " " + std::to_string(d.span.line) +
         ":" + std::to_string(d.span.column) + " " + d.code + " " + d.message;
}

bool has_errors(const std::vector<Diagnostic>& diags) {
  return std::any_of(diags.begin(), diags.end(), [](const Diagnostic& d) {
    return d.severity == Severity::Error;
  });
}

}  // namespace star
