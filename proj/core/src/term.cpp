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

#include "star/term.hpp"

#include <map>

namespace star {

Term Term::constant(std::string name) {
  return Term{Kind::Constant, std::move(name), {}};
}

Term Term::variable(std::string name) {
  return Term{Kind::Variable, std::move(name), {}};
}

Term Term::compound(std::string functor, std::vector<Term> args) {
  if (args.empty()) return constant(std::move(functor));
  return Term{Kind::Compound, std::move(functor), std::move(args)};
}

bool Term::is_ground() const {
  if (kind == Kind::Variable) return false;
  for (const auto& a : args)
    if (!a.is_ground()) return false;
  return true;
}

namespace {

void append(const Term& t, std::string& out) {
  out += t.name;
  if (t.args.empty()) return;
  out += '(';
  for (std::size_t i = 0; i < t.args.size(); ++i) {
    if (i) out += ',';
    append(t.args[i], out);
  }
  out += ')';
}

bool match_into(const Term& pattern, const Term& ground,
                std::map<std::string, const Term*>& bound) {
  if (pattern.kind == Term::Kind::Variable) {
    if (pattern.name == "_") return true;
    auto [it, fresh] = bound.emplace(pattern.name, &ground);
    return fresh || *it->second == ground;
  }
  if (pattern.kind != ground.kind || pattern.name != ground.name ||
      pattern.args.size() != ground.args.size())
    return false;
  for (std::size_t i = 0; i < pattern.args.size(); ++i)
    if (!match_into(pattern.args[i], ground.args[i], bound)) return false;
  return true;
}

bool is_ident_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
         (c >= '0' && c <= '9') || c == '_';
}

}  // namespace

std::string Term::str() const {
  std::string out;
  append(*this, out);
  return out;
}

std::strong_ordering operator<=>(const Term& a, const Term& b) {
  if (auto c = a.kind <=> b.kind; c != 0) return c;
  if (auto c = a.name <=> b.name; c != 0) return c;
  if (auto c = a.args.size() <=> b.args.size(); c != 0) return c;
  for (std::size_t i = 0; i < a.args.size(); ++i)
    if (auto c = a.args[i] <=> b.args[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

void collect_variables(const Term& t, std::vector<std::string>& out) {
  if (t.kind == Term::Kind::Variable) {
    for (const auto& v : out)
      if (v == t.name) return;
    out.push_back(t.name);
    return;
  }
  for (const auto& a : t.args) collect_variables(a, out);
}

bool matches(const Term& pattern, const Term& ground) {
  std::map<std::string, const Term*> bound;
  return match_into(pattern, ground, bound);
}

bool is_constant_name(std::string_view s) {
  if (s.empty() || !(s[0] >= 'a' && s[0] <= 'z')) return false;
  for (char c : s)
    if (!is_ident_char(c)) return false;
  return true;
}

bool is_variable_name(std::string_view s) {
  if (s.empty() || !((s[0] >= 'A' && s[0] <= 'Z') || s[0] == '_')) return false;
  for (char c : s)
    if (!is_ident_char(c)) return false;
  return true;
}

std::string Literal::str() const {
  return negative ? "-" + atom.str() : atom.str();
}

}  // namespace star
