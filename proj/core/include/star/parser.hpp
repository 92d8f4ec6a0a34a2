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

#ifndef STAR_PARSER_HPP_
#define STAR_PARSER_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "star/ast.hpp"
#include "star/diagnostic.hpp"

namespace star {

struct ParseResult {
  Domain domain;
  std::vector<Diagnostic> diagnostics;
};

/// Parses a domain file. Total: a malformed statement produces an Error
/// diagnostic and parsing resumes after the next `.`.
ParseResult parse_domain(std::string_view text);

/// Semantic checks over a parsed domain (labels, ground facts, safety of rule
/// heads, session references). Never throws.
std::vector<Diagnostic> validate_domain(const Domain& d);

/// Canonical text, one statement per line, comments dropped.
std::string format_domain(const Domain& d);

/// Parses a comma-separated list of terms such as `in_flat(_),wants(X,Y)`.
/// Returns nullopt and appends to `diags` on malformed input.
std::optional<std::vector<Term>> parse_term_list(
    std::string_view text, std::vector<Diagnostic>* diags = nullptr);

}  // namespace star

#endif  // STAR_PARSER_HPP_
