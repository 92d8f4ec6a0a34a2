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

#ifndef STAR_DIAGNOSTIC_HPP_
#define STAR_DIAGNOSTIC_HPP_

#include <cstddef>
#include <string>
#include <vector>

namespace star {

/// A byte range of the source. `line` and `column` are 1-based and refer to
/// `offset`.
struct Span {
  std::size_t offset = 0;
  std::size_t length = 0;
  int line = 1;
  int column = 1;

  friend bool operator==(const Span&, const Span&) = default;
};

enum class Severity { Error, Warning };

struct Diagnostic {
  Severity severity = Severity::Error;
  std::string code;
  std::string message;
  Span span;
};

const char* to_string(Severity s);

/// `<severity> <line>:<col> <code> <message>`
std::string format_diagnostic(const Diagnostic& d);

bool has_errors(const std::vector<Diagnostic>& diags);

}  // namespace star

#endif  // STAR_DIAGNOSTIC_HPP_
