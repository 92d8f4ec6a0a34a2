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

#ifndef STAR_REASONER_HPP_
#define STAR_REASONER_HPP_

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "star/ast.hpp"
#include "star/grounding.hpp"

namespace star {

enum class ConceptKind { Constant, Fluent, Action };
enum class TruthValue { True, False, Unknown };
enum class ProvenanceKind {
  None,
  Observation,
  ConstantDecl,
  PropertyRule,
  CausalRule,
  Inertia
};

const char* to_string(ConceptKind k);
const char* to_string(TruthValue v);
const char* to_string(ProvenanceKind p);

struct Provenance {
  ProvenanceKind kind = ProvenanceKind::None;
  std::optional<RuleLabel> rule;  // set for PropertyRule and CausalRule

  static Provenance observation() { return {ProvenanceKind::Observation, {}}; }
  static Provenance constant_decl() { return {ProvenanceKind::ConstantDecl, {}}; }
  static Provenance inertia() { return {ProvenanceKind::Inertia, {}}; }
  static Provenance property(RuleLabel l) { return {ProvenanceKind::PropertyRule, std::move(l)}; }
  static Provenance causal(RuleLabel l) { return {ProvenanceKind::CausalRule, std::move(l)}; }

  bool is_rule() const {
    return kind == ProvenanceKind::PropertyRule || kind == ProvenanceKind::CausalRule;
  }
  bool is_observed() const {
    return kind == ProvenanceKind::Observation || kind == ProvenanceKind::ConstantDecl;
  }

  friend bool operator==(const Provenance&, const Provenance&) = default;
};

struct Cell {
  Term atom;
  int t = 0;
  TruthValue value = TruthValue::Unknown;
  bool observed = false;
  Provenance provenance;
  ConceptKind kind = ConceptKind::Action;

  friend bool operator==(const Cell&, const Cell&) = default;
};

/// The (concept x time-point) grid of one session. Cells are stored
/// concept-major: cells[i * (horizon + 1) + t] belongs to concepts[i].
struct ComprehensionModel {
  int session = 0;
  int horizon = 0;
  std::vector<Term> concepts;
  std::vector<Cell> cells;

  const Cell& at(std::size_t concept_index, int t) const {
    return cells[concept_index * static_cast<std::size_t>(horizon + 1) + t];
  }
  /// nullptr when the concept is not on the grid or t is outside 0..horizon.
  const Cell* find(const Term& atom, int t) const;

  friend bool operator==(const ComprehensionModel&, const ComprehensionModel&) = default;
};

/// A support structure for `conclusion` at `t`. Leaves are observations;
/// inner steps are rule instances or persistence from the previous
/// time-point. Preclusion arguments block their conclusion instead of
/// asserting it.
struct Argument {
  enum class Source { Observation, ConstantDecl, Rule, Inertia };

  std::string id;
  Literal conclusion;
  int t = 0;
  Source source = Source::Observation;
  bool precludes = false;
  std::optional<Observation> observation;  // Observation / ConstantDecl
  std::optional<RuleLabel> rule;           // Rule
  RuleKind rule_kind = RuleKind::Property;
  std::size_t instance_id = 0;
  std::vector<std::string> premises;       // argument ids

  friend bool operator==(const Argument&, const Argument&) = default;
};

struct ArgumentReport {
  std::vector<Argument> universal;  // production order
  std::vector<std::string> acceptable;  // sorted
  std::vector<std::string> retracted;   // sorted
  std::vector<std::string> elaborated;  // sorted
  std::vector<std::pair<std::string, std::string>> qualified;  // (winner, defeated), sorted

  friend bool operator==(const ArgumentReport&, const ArgumentReport&) = default;
};

/// The reporting categories a run should populate.
struct TraceSet {
  bool universal = false;
  bool acceptable = false;
  bool retracted = false;
  bool elaborated = false;
  bool qualified = false;

  static TraceSet all() { return {true, true, true, true, true}; }
  bool any() const { return universal || acceptable || retracted || elaborated || qualified; }
  /// Parses a comma-joined list such as "acceptable,qualified"; "all" turns
  /// every category on. Returns nullopt on an unknown name.
  static std::optional<TraceSet> parse(std::string_view list);

  friend bool operator==(const TraceSet&, const TraceSet&) = default;
};

struct Answer {
  int question_id = 0;
  std::vector<std::pair<std::size_t, TruthValue>> per_choice;
  std::optional<std::size_t> selected;

  friend bool operator==(const Answer&, const Answer&) = default;
};

struct SessionResult {
  int session = 0;
  ComprehensionModel model;
  std::vector<Answer> answers;
  ArgumentReport report;
  /// Rendering filter from the session declaration; never affects values.
  Visibility visible;

  friend bool operator==(const SessionResult&, const SessionResult&) = default;
};

class EngineError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The per-time-point fixed point failed to settle within its budget.
class CycleBudgetExceeded : public EngineError {
 public:
  CycleBudgetExceeded(int session, int t, std::size_t budget);
  int session() const { return session_; }
  int time_point() const { return t_; }

 private:
  int session_;
  int t_;
};

class TimeOutOfRange : public EngineError {
 public:
  TimeOutOfRange(int question_id, int t, int horizon);
};

/// Transitive closure of the declared `>>` relation between rule labels.
class PriorityClosure {
 public:
  PriorityClosure() = default;
  explicit PriorityClosure(const std::vector<Priority>& priorities);

  /// True iff `a` is (transitively) declared stronger than `b`. With cyclic
  /// declarations both directions can hold.
  bool stronger(const RuleLabel& a, const RuleLabel& b) const;

 private:
  std::map<RuleLabel, std::set<RuleLabel>> weaker_than_;
};

/// One support competing for a cell.
struct Candidate {
  Literal literal;
  Provenance source;
};

struct Resolution {
  TruthValue value = TruthValue::Unknown;
  Provenance provenance;
  /// Index of the candidate that provides the provenance, if any.
  std::optional<std::size_t> winner;
  /// Candidates that survive conflict resolution and agree with `value`.
  std::vector<std::size_t> survivors;
};

/// Resolves competing supports for one cell. Observations beat rules, rules
/// are compared through the priority closure, any rule beats inertia.
/// Undefeated complementary rule supports annihilate to Unknown. Among the
/// surviving candidates the first one in input order supplies provenance.
Resolution resolve_cell(const std::vector<Candidate>& candidates,
                        const PriorityClosure& priorities);

ConceptKind classify_concept(const Domain& d, const Term& atom);
ConceptKind classify_concept(const GroundProgram& g, const Term& atom);

/// Largest numeric time-point in observations and question choices plus
/// `slack`; just `slack` when there is none.
int compute_horizon(const Domain& d, int slack = 2);
int compute_horizon(const GroundProgram& g, int slack = 2);

/// Builds the comprehension model of `session` over 0..horizon from the
/// observations of sessions <= `session`. Retracted and elaborated sets are
/// relative to session - 1. Answers are left empty.
SessionResult build_model(const GroundProgram& g, int session, int horizon,
                          const TraceSet& trace = {});

/// Throws TimeOutOfRange when a choice lies past the horizon.
Answer answer_question(const ComprehensionModel& m, const Question& q);

using SessionCallback = std::function<void(const SessionResult&)>;

/// One result per declared session in ascending order (or a single implicit
/// session 0 when none is declared). `on_session`, when set, sees each result
/// as soon as it is complete.
std::vector<SessionResult> run_sessions(const Domain& d, int slack,
                                        const TraceSet& trace,
                                        const SessionCallback& on_session = {});

}  // namespace star

#endif  // STAR_REASONER_HPP_
