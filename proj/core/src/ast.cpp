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

#include "star/ast.hpp"

namespace star {

std::string TimeRef::str() const {
  return is_always() ? "always" : std::to_string(point_);
}

std::string RuleLabel::str() const {
  if (!index) return name;
  return name + "(" + std::to_string(*index) + ")";
}

const char* connective(RuleKind kind) {
  switch (kind) {
    case RuleKind::Property:
      return "implies";
    case RuleKind::Causal:
      return "causes";
    case RuleKind::Preclusion:
      return "precludes";
  }
  return "?";
}

const char* to_string(RuleKind kind) {
  switch (kind) {
    case RuleKind::Property:
      return "property";
    case RuleKind::Causal:
      return "causal";
    case RuleKind::Preclusion:
      return "preclusion";
  }
  return "?";
}

bool Visibility::shows(const Term& atom) const {
  if (all) return true;
  for (const auto& p : patterns)
    if (matches(p, atom)) return true;
  return false;
}

const Span* Domain::span_of(StatementKind kind, std::size_t index) const {
  const Span* best = nullptr;
  for (const auto& s : source_spans) {
    if (s.kind != kind) continue;
    if (s.index == index) return &s.span;
    // Fluents statements own a run of patterns starting at s.index.
    if (kind == StatementKind::Fluents && s.index <= index) best = &s.span;
  }
  return best;
}

bool Domain::empty() const {
  return observations.empty() && questions.empty() && rules.empty() &&
         priorities.empty() && sessions.empty() && fluents.fluents.empty();
}

bool equal_ignoring_spans(const Domain& a, const Domain& b) {
  return a.observations == b.observations && a.questions == b.questions &&
         a.rules == b.rules && a.priorities == b.priorities &&
         a.sessions == b.sessions && a.fluents == b.fluents;
}

}  // namespace star
