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

#include "generators.hpp"

#include <algorithm>
#include <set>

namespace star::testing {

int uniform(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

namespace {

bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

Term ground_concept(int i) {
  static const char* names[] = {"a", "b", "c", "d", "e", "f", "g", "h"};
  if (i % 3 == 2) return Term::compound("on", {Term::constant(names[i])});
  return Term::constant(names[i]);
}

RuleKind random_kind(Rng& rng) {
  int k = uniform(rng, 0, 99);
  return k < 45 ? RuleKind::Property : k < 80 ? RuleKind::Causal : RuleKind::Preclusion;
}

const char* label_name(RuleKind k) {
  return k == RuleKind::Property ? "p" : k == RuleKind::Causal ? "c" : "r";
}

void add_priorities(Rng& rng, Domain& d, int max) {
  std::set<std::pair<std::string, std::string>> seen;
  const int n = uniform(rng, 0, max);
  for (int i = 0; i < n && d.rules.size() >= 2; ++i) {
    const auto& a = d.rules[uniform(rng, 0, static_cast<int>(d.rules.size()) - 1)].label;
    const auto& b = d.rules[uniform(rng, 0, static_cast<int>(d.rules.size()) - 1)].label;
    if (a == b || !seen.insert({a.str(), b.str()}).second) continue;
    d.priorities.push_back(Priority{a, b});
  }
}

}  // namespace

Domain random_ground_domain(Rng& rng, int max_concepts, int max_rules, int max_time) {
  Domain d;
  const int nc = uniform(rng, 1, max_concepts);
  auto lit = [&] { return Literal{coin(rng), ground_concept(uniform(rng, 0, nc - 1))}; };

  const int nr = uniform(rng, 0, max_rules);
  for (int i = 0; i < nr; ++i) {
    Rule r;
    r.kind = random_kind(rng);
    r.label = RuleLabel{label_name(r.kind), i + 1};
    const int body = uniform(rng, 0, 2);
    for (int j = 0; j < body; ++j) r.body.push_back(lit());
    r.head = lit();
    d.rules.push_back(std::move(r));
  }
  add_priorities(rng, d, 3);

  const int no = uniform(rng, 0, 6);
  for (int i = 0; i < no; ++i) {
    TimeRef when = coin(rng, 0.1) ? TimeRef::always() : TimeRef::at(uniform(rng, 0, max_time));
    d.observations.push_back(Observation{coin(rng, 0.8) ? 0 : 1, lit(), when});
  }
  for (int c = 0; c < nc; ++c)
    if (coin(rng, 0.5)) d.fluents.fluents.push_back(ground_concept(c));
  if (coin(rng, 0.3)) {
    Question q{1, {}};
    q.choices.push_back(Choice{lit(), uniform(rng, 0, max_time)});
    if (coin(rng)) q.choices.push_back(Choice{lit(), uniform(rng, 0, max_time)});
    d.questions.push_back(q);
  }
  return d;
}

Rule random_rule_with_vars(Rng& rng, int k) {
  Rule r;
  r.kind = random_kind(rng);
  r.label = RuleLabel{label_name(r.kind), uniform(rng, 0, 99)};
  std::vector<Term> vars;
  for (int i = 0; i < k; ++i) vars.push_back(Term::variable("X" + std::to_string(i)));
  // Spread the variables over one or two body literals, possibly repeated.
  std::vector<Term> args1, args2;
  for (int i = 0; i < k; ++i) (coin(rng) ? args1 : args2).push_back(vars[i]);
  if (k > 0 && coin(rng, 0.3)) args1.push_back(vars[uniform(rng, 0, k - 1)]);
  r.body.push_back(Literal{coin(rng), args1.empty() ? Term::constant("q")
                                                     : Term::compound("q", args1)});
  if (!args2.empty()) r.body.push_back(Literal{coin(rng), Term::compound("s", args2)});
  std::vector<Term> head_args;
  for (int i = 0; i < k; ++i)
    if (coin(rng)) head_args.push_back(vars[i]);
  r.head = Literal{coin(rng), head_args.empty() ? Term::constant("h")
                                                 : Term::compound("h", head_args)};
  return r;
}

namespace {

Term random_term(Rng& rng, int depth, bool allow_vars) {
  static const char* consts[] = {"ann", "mary", "door", "tv", "x_1", "bigName"};
  static const char* vars[] = {"Person", "X", "_Y", "Other"};
  static const char* functors[] = {"wants", "open", "in_flat", "see_at", "p", "s"};
  const int pick = uniform(rng, 0, depth <= 0 ? 1 : 3);
  if (pick == 0) return Term::constant(consts[uniform(rng, 0, 5)]);
  if (pick == 1 && allow_vars) return Term::variable(vars[uniform(rng, 0, 3)]);
  if (pick == 1) return Term::constant(consts[uniform(rng, 0, 5)]);
  std::vector<Term> args;
  const int n = uniform(rng, 1, 3);
  for (int i = 0; i < n; ++i) args.push_back(random_term(rng, depth - 1, allow_vars));
  return Term::compound(functors[uniform(rng, 0, 5)], std::move(args));
}

Term random_atom(Rng& rng, bool allow_vars) {
  static const char* functors[] = {"walk_to", "afraid", "ring", "has", "q", "r"};
  if (coin(rng, 0.25)) return Term::constant(functors[uniform(rng, 0, 5)]);
  std::vector<Term> args;
  const int n = uniform(rng, 1, 3);
  for (int i = 0; i < n; ++i) args.push_back(random_term(rng, 2, allow_vars));
  return Term::compound(functors[uniform(rng, 0, 5)], std::move(args));
}

}  // namespace

Domain random_domain(Rng& rng) {
  Domain d;
  const int no = uniform(rng, 0, 4);
  for (int i = 0; i < no; ++i)
    d.observations.push_back(Observation{uniform(rng, 0, 3),
                                         Literal{coin(rng), random_atom(rng, false)},
                                         coin(rng, 0.2) ? TimeRef::always()
                                                        : TimeRef::at(uniform(rng, 0, 20))});
  const int nq = uniform(rng, 0, 2);
  for (int i = 0; i < nq; ++i) {
    Question q{uniform(rng, 0, 50), {}};
    const int nch = uniform(rng, 1, 3);
    for (int j = 0; j < nch; ++j)
      q.choices.push_back(Choice{Literal{coin(rng), random_atom(rng, false)}, uniform(rng, 0, 9)});
    d.questions.push_back(q);
  }
  const int nr = uniform(rng, 0, 4);
  for (int i = 0; i < nr; ++i) {
    Rule r;
    r.kind = random_kind(rng);
    if (coin(rng, 0.2))
      r.label = RuleLabel{"r0" + std::to_string(i + 1), std::nullopt};
    else
      r.label = RuleLabel{label_name(r.kind), uniform(rng, 0, 40)};
    const int body = uniform(rng, 0, 3);
    for (int j = 0; j < body; ++j) r.body.push_back(Literal{coin(rng), random_atom(rng, true)});
    r.head = Literal{coin(rng), random_atom(rng, true)};
    d.rules.push_back(std::move(r));
  }
  add_priorities(rng, d, 2);
  if (coin(rng, 0.5)) {
    SessionDecl s{uniform(rng, 0, 3), {}, Visibility{}};
    for (const auto& q : d.questions)
      if (coin(rng)) s.questions.push_back(q.id);
    if (coin(rng, 0.3)) {
      s.visible.all = false;
      s.visible.patterns.push_back(random_atom(rng, true));
    }
    d.sessions.push_back(s);
  }
  if (coin(rng, 0.5)) {
    const int nf = uniform(rng, 1, 3);
    for (int i = 0; i < nf; ++i) d.fluents.fluents.push_back(random_atom(rng, true));
  }
  return d;
}

std::string random_noise(Rng& rng, std::size_t max_len) {
  static const std::string alphabet =
      "abcXYZ_09 ()[],;.-:?>%\n\tsqpcr implies causes precludes at always\xc3\xa9";
  std::string out;
  const std::size_t n = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(max_len)));
  for (std::size_t i = 0; i < n; ++i)
    out += alphabet[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(alphabet.size()) - 1))];
  return out;
}

}  // namespace star::testing
