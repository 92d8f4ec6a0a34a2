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

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "star/parser.hpp"

namespace star {
namespace {

using Signature = std::pair<std::string, std::size_t>;

Signature signature(const Term& t) { return {t.name, t.arity()}; }

class Validator {
 public:
  explicit Validator(const Domain& d) : d_(d) {}

  std::vector<Diagnostic> run() {
    labels();
    priorities();
    questions();
    observations();
    rules();
    sessions();
    fluents();
    return std::move(out_);
  }

 private:
  void report(Severity sev, std::string code, std::string message,
              StatementKind kind, std::size_t index) {
    const Span* span = d_.span_of(kind, index);
    out_.push_back(Diagnostic{sev, std::move(code), std::move(message),
                              span ? *span : Span{}});
  }

  void labels() {
    for (std::size_t i = 0; i < d_.rules.size(); ++i) {
      auto key = d_.rules[i].label.str();
      if (!defined_.insert(key).second)
        report(Severity::Error, "duplicate-label",
               "rule label " + key + " is defined more than once",
               StatementKind::Rule, i);
    }
  }

  void priorities() {
    for (std::size_t i = 0; i < d_.priorities.size(); ++i) {
      const auto& p = d_.priorities[i];
      if (p.stronger == p.weaker)
        report(Severity::Error, "self-priority",
               "rule " + p.stronger.str() + " cannot take priority over itself",
               StatementKind::Priority, i);
      for (const auto* label : {&p.stronger, &p.weaker}) {
        if (!defined_.count(label->str()))
          report(Severity::Error, "undefined-label",
                 "undefined rule label " + label->str(),
                 StatementKind::Priority, i);
        if (p.stronger == p.weaker) break;
      }
    }
  }

  void questions() {
    for (std::size_t i = 0; i < d_.questions.size(); ++i) {
      const auto& q = d_.questions[i];
      if (!question_ids_.insert(q.id).second)
        report(Severity::Error, "duplicate-question",
               "question q(" + std::to_string(q.id) + ") is defined more than once",
               StatementKind::Question, i);
      for (const auto& c : q.choices)
        if (!c.literal.atom.is_ground())
          report(Severity::Error, "nonground-question",
                 "question choice " + c.literal.str() + " must be ground",
                 StatementKind::Question, i);
    }
  }

  void observations() {
    for (std::size_t i = 0; i < d_.observations.size(); ++i)
      if (!d_.observations[i].literal.atom.is_ground())
        report(Severity::Error, "nonground-observation",
               "observation must be ground: " + d_.observations[i].literal.str(),
               StatementKind::Observation, i);
  }

  void rules() {
    for (std::size_t i = 0; i < d_.rules.size(); ++i) {
      const auto& r = d_.rules[i];
      std::vector<std::string> body_vars, head_vars;
      for (const auto& l : r.body) collect_variables(l.atom, body_vars);
      collect_variables(r.head.atom, head_vars);
      for (const auto& v : head_vars) {
        if (std::find(body_vars.begin(), body_vars.end(), v) == body_vars.end())
          report(Severity::Error, "unsafe-head",
                 "variable " + v + " in the head of " + r.label.str() +
                     " does not appear in its body",
                 StatementKind::Rule, i);
      }
    }

    // A head whose concept is mentioned nowhere else can never matter.
    std::multiset<Signature> mentions;
    for (const auto& o : d_.observations) mentions.insert(signature(o.literal.atom));
    for (const auto& q : d_.questions)
      for (const auto& c : q.choices) mentions.insert(signature(c.literal.atom));
    for (const auto& f : d_.fluents.fluents) mentions.insert(signature(f));
    for (const auto& r : d_.rules) {
      for (const auto& l : r.body) mentions.insert(signature(l.atom));
      mentions.insert(signature(r.head.atom));
    }
    for (std::size_t i = 0; i < d_.rules.size(); ++i) {
      const auto& head = d_.rules[i].head.atom;
      if (mentions.count(signature(head)) <= 1)
        report(Severity::Warning, "isolated-head",
               "the head concept " + head.name + "/" +
                   std::to_string(head.arity()) + " of " +
                   d_.rules[i].label.str() + " is not used anywhere else",
               StatementKind::Rule, i);
    }
  }

  void sessions() {
    std::set<int> seen;
    std::set<int> referenced;
    for (std::size_t i = 0; i < d_.sessions.size(); ++i) {
      const auto& s = d_.sessions[i];
      if (!seen.insert(s.session).second)
        report(Severity::Error, "duplicate-session",
               "session s(" + std::to_string(s.session) + ") is declared more than once",
               StatementKind::Session, i);
      for (int q : s.questions) {
        referenced.insert(q);
        if (!question_ids_.count(q))
          report(Severity::Error, "undefined-question",
                 "session s(" + std::to_string(s.session) +
                     ") refers to undefined question q(" + std::to_string(q) + ")",
                 StatementKind::Session, i);
      }
    }
    for (std::size_t i = 0; i < d_.questions.size(); ++i)
      if (!referenced.count(d_.questions[i].id))
        report(Severity::Warning, "unused-question",
               "question q(" + std::to_string(d_.questions[i].id) +
                   ") is not asked in any session",
               StatementKind::Question, i);
  }

  void fluents() {
    std::set<Signature> seen;
    const auto& patterns = d_.fluents.fluents;
    for (std::size_t i = 0; i < patterns.size(); ++i)
      if (!seen.insert(signature(patterns[i])).second)
        report(Severity::Error, "duplicate-fluent",
               "fluent " + patterns[i].name + "/" +
                   std::to_string(patterns[i].arity()) + " is declared more than once",
               StatementKind::Fluents, i);
  }

  const Domain& d_;
  std::vector<Diagnostic> out_;
  std::set<std::string> defined_;
  std::set<int> question_ids_;
};

}  // namespace

std::vector<Diagnostic> validate_domain(const Domain& d) {
  return Validator(d).run();
}

}  // namespace star
