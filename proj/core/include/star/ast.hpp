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

#ifndef STAR_AST_HPP_
#define STAR_AST_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "star/diagnostic.hpp"
#include "star/term.hpp"

namespace star {

/// Either `always` or a non-negative integer time-point.
class TimeRef {
 public:
  static TimeRef always() { return TimeRef(-1); }
  static TimeRef at(int t) { return TimeRef(t); }

  bool is_always() const { return point_ < 0; }
  /// Only meaningful when !is_always().
  int point() const { return point_; }
  std::string str() const;

  friend bool operator==(const TimeRef&, const TimeRef&) = default;

 private:
  explicit TimeRef(int p) : point_(p) {}
  int point_;
};

struct Observation {
  int session = 0;
  Literal literal;
  TimeRef time = TimeRef::at(0);

  friend bool operator==(const Observation&, const Observation&) = default;
};

/// Rule names: `p(22)`, `c(33)`, `r(4)` or a bare identifier such as `r01`.
struct RuleLabel {
  std::string name;
  std::optional<std::int64_t> index;

  std::string str() const;

  friend bool operator==(const RuleLabel&, const RuleLabel&) = default;
  friend auto operator<=>(const RuleLabel&, const RuleLabel&) = default;
};

enum class RuleKind { Property, Causal, Preclusion };

/// `implies`, `causes`, `precludes`.
const char* connective(RuleKind kind);
const char* to_string(RuleKind kind);

struct Rule {
  RuleLabel label;
  RuleKind kind = RuleKind::Property;
  std::vector<Literal> body;  // empty encodes `true`
  Literal head;

  friend bool operator==(const Rule&, const Rule&) = default;
};

struct Priority {
  RuleLabel stronger;
  RuleLabel weaker;

  friend bool operator==(const Priority&, const Priority&) = default;
};

struct Choice {
  Literal literal;
  int t = 0;

  friend bool operator==(const Choice&, const Choice&) = default;
};

struct Question {
  int id = 0;
  std::vector<Choice> choices;

  friend bool operator==(const Question&, const Question&) = default;
};

/// Which concepts are rendered: everything, or those matching a pattern.
struct Visibility {
  bool all = true;
  std::vector<Term> patterns;

  bool shows(const Term& atom) const;

  friend bool operator==(const Visibility&, const Visibility&) = default;
};

struct SessionDecl {
  int session = 0;
  std::vector<int> questions;
  Visibility visible;

  friend bool operator==(const SessionDecl&, const SessionDecl&) = default;
};

struct FluentsDecl {
  std::vector<Term> fluents;

  friend bool operator==(const FluentsDecl&, const FluentsDecl&) = default;
};

enum class StatementKind {
  Observation,
  Question,
  Rule,
  Priority,
  Session,
  Fluents
};

/// Location of one parsed statement: `index` points into the list of the
/// matching kind (for Fluents, the position of the first pattern it added).
struct StatementSpan {
  StatementKind kind;
  std::size_t index;
  Span span;
};

struct Domain {
  std::vector<Observation> observations;
  std::vector<Question> questions;
  std::vector<Rule> rules;
  std::vector<Priority> priorities;
  std::vector<SessionDecl> sessions;
  FluentsDecl fluents;
  std::vector<StatementSpan> source_spans;  // file order

  const Span* span_of(StatementKind kind, std::size_t index) const;
  bool empty() const;
};

/// Structural equality ignoring source spans.
bool equal_ignoring_spans(const Domain& a, const Domain& b);

}  // namespace star

#endif  // STAR_AST_HPP_
