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

#include "star/grounding.hpp"

#include <map>
#include <set>
#include <string>

namespace star {
namespace {

class UniverseBuilder {
 public:
  void add_atom(const Term& atom) {
    for (const auto& a : atom.args) add_argument(a);
  }

  ConstantUniverse take() { return std::move(u_); }

 private:
  // Every argument position at any depth can hold a variable, so every
  // ground argument subterm is a candidate binding.
  void add_argument(const Term& t) {
    if (t.is_ground() && seen_.insert(t.str()).second) u_.constants.push_back(t);
    for (const auto& a : t.args) add_argument(a);
  }

  ConstantUniverse u_;
  std::set<std::string> seen_;
};

Term substitute(const Term& t, const std::map<std::string, const Term*>& binding) {
  if (t.is_variable()) {
    auto it = binding.find(t.name);
    return it == binding.end() ? t : *it->second;
  }
  if (t.args.empty()) return t;
  std::vector<Term> args;
  args.reserve(t.args.size());
  for (const auto& a : t.args) args.push_back(substitute(a, binding));
  return Term::compound(t.name, std::move(args));
}

Literal substitute(const Literal& l,
                   const std::map<std::string, const Term*>& binding) {
  return Literal{l.negative, substitute(l.atom, binding)};
}

}  // namespace

ConstantUniverse collect_universe(const Domain& d) {
  UniverseBuilder b;
  for (const auto& o : d.observations) b.add_atom(o.literal.atom);
  for (const auto& q : d.questions)
    for (const auto& c : q.choices) b.add_atom(c.literal.atom);
  for (const auto& r : d.rules) {
    for (const auto& l : r.body) b.add_atom(l.atom);
    b.add_atom(r.head.atom);
  }
  return b.take();
}

std::vector<GroundRule> ground_rule(const Rule& r, const ConstantUniverse& u) {
  std::vector<std::string> vars;
  for (const auto& l : r.body) collect_variables(l.atom, vars);
  collect_variables(r.head.atom, vars);

  std::vector<GroundRule> out;
  if (vars.empty()) {
    out.push_back(GroundRule{r.label, r.kind, 0, r.body, r.head});
    return out;
  }
  if (u.empty()) return out;

  const std::size_t n = u.size();
  std::vector<std::size_t> choice(vars.size(), 0);
  std::map<std::string, const Term*> binding;
  for (std::size_t id = 0;; ++id) {
    for (std::size_t v = 0; v < vars.size(); ++v)
      binding[vars[v]] = &u.constants[choice[v]];
    GroundRule g{r.label, r.kind, id, {}, substitute(r.head, binding)};
    g.body.reserve(r.body.size());
    for (const auto& l : r.body) g.body.push_back(substitute(l, binding));
    out.push_back(std::move(g));

    // Odometer increment, last variable fastest.
    std::size_t v = vars.size();
    while (v > 0) {
      --v;
      if (++choice[v] < n) break;
      choice[v] = 0;
      if (v == 0) return out;
    }
  }
}

GroundProgram ground_domain(const Domain& d) {
  GroundProgram g;
  g.universe = collect_universe(d);
  for (const auto& r : d.rules) {
    auto instances = ground_rule(r, g.universe);
    g.rules.insert(g.rules.end(), std::make_move_iterator(instances.begin()),
                   std::make_move_iterator(instances.end()));
  }
  g.observations = d.observations;
  g.questions = d.questions;
  g.priorities = d.priorities;
  g.fluent_patterns = d.fluents;
  return g;
}

}  // namespace star
