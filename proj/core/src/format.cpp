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

#include <string>

#include "star/parser.hpp"

namespace star {
namespace {

std::string join_terms(const std::vector<Term>& terms) {
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i) out += ',';
    out += terms[i].str();
  }
  return out;
}

std::string format(const Observation& o) {
  return "s(" + std::to_string(o.session) + ") :: " + o.literal.str() + " at " +
         o.time.str() + ".";
}

std::string format(const Question& q) {
  std::string out = "q(" + std::to_string(q.id) + ") ??";
  for (std::size_t i = 0; i < q.choices.size(); ++i) {
    out += i ? "; " : " ";
    out += q.choices[i].literal.str() + " at " + std::to_string(q.choices[i].t);
  }
  return out + ".";
}

std::string format(const Rule& r) {
  std::string out = r.label.str() + " :: ";
  if (r.body.empty()) out += "true";
  for (std::size_t i = 0; i < r.body.size(); ++i) {
    if (i) out += ", ";
    out += r.body[i].str();
  }
  return out + " " + connective(r.kind) + " " + r.head.str() + ".";
}

std::string format(const Priority& p) {
  return p.stronger.str() + " >> " + p.weaker.str() + ".";
}

std::string format(const SessionDecl& s) {
  std::string out = "session(s(" + std::to_string(s.session) + "),[";
  for (std::size_t i = 0; i < s.questions.size(); ++i) {
    if (i) out += ',';
    out += "q(" + std::to_string(s.questions[i]) + ")";
  }
  out += "],";
  out += s.visible.all ? "all" : "[" + join_terms(s.visible.patterns) + "]";
  return out + ").";
}

std::string format(const FluentsDecl& f) {
  return "fluents([" + join_terms(f.fluents) + "]).";
}

// True when every statement has exactly one span, so file order can be used.
bool spans_complete(const Domain& d) {
  std::size_t counts[6] = {};
  for (const auto& s : d.source_spans) {
    std::size_t limit = 0;
    switch (s.kind) {
      case StatementKind::Observation: limit = d.observations.size(); break;
      case StatementKind::Question: limit = d.questions.size(); break;
      case StatementKind::Rule: limit = d.rules.size(); break;
      case StatementKind::Priority: limit = d.priorities.size(); break;
      case StatementKind::Session: limit = d.sessions.size(); break;
      case StatementKind::Fluents: limit = d.fluents.fluents.size() + 1; break;
    }
    if (s.index >= limit) return false;
    ++counts[static_cast<int>(s.kind)];
  }
  return counts[static_cast<int>(StatementKind::Observation)] == d.observations.size() &&
         counts[static_cast<int>(StatementKind::Question)] == d.questions.size() &&
         counts[static_cast<int>(StatementKind::Rule)] == d.rules.size() &&
         counts[static_cast<int>(StatementKind::Priority)] == d.priorities.size() &&
         counts[static_cast<int>(StatementKind::Session)] == d.sessions.size() &&
         (counts[static_cast<int>(StatementKind::Fluents)] > 0) == !d.fluents.fluents.empty();
}

}  // namespace

std::string format_domain(const Domain& d) {
  std::vector<std::string> lines;
  auto emit = [&](std::string line) { lines.push_back(std::move(line)); };

  if (spans_complete(d)) {
    bool fluents_done = false;
    for (const auto& s : d.source_spans) {
      switch (s.kind) {
        case StatementKind::Observation: emit(format(d.observations[s.index])); break;
        case StatementKind::Question: emit(format(d.questions[s.index])); break;
        case StatementKind::Rule: emit(format(d.rules[s.index])); break;
        case StatementKind::Priority: emit(format(d.priorities[s.index])); break;
        case StatementKind::Session: emit(format(d.sessions[s.index])); break;
        case StatementKind::Fluents:
          // Several fluents statements collapse into one declaration.
          if (!fluents_done && !d.fluents.fluents.empty()) emit(format(d.fluents));
          fluents_done = true;
          break;
      }
    }
  } else {
    for (const auto& s : d.sessions) emit(format(s));
    if (!d.fluents.fluents.empty()) emit(format(d.fluents));
    for (const auto& o : d.observations) emit(format(o));
    for (const auto& q : d.questions) emit(format(q));
    for (const auto& r : d.rules) emit(format(r));
    for (const auto& p : d.priorities) emit(format(p));
  }

  std::string out;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (i) out += '\n';
    out += lines[i];
  }
  return out;
}

}  // namespace star
