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

#ifndef STAR_GROUNDING_HPP_
#define STAR_GROUNDING_HPP_

#include <vector>

#include "star/ast.hpp"

namespace star {

/// Ground argument terms of a domain, deduplicated, in first-appearance order
/// (observations, then question choices, then rules).
struct ConstantUniverse {
  std::vector<Term> constants;

  std::size_t size() const { return constants.size(); }
  bool empty() const { return constants.empty(); }
  friend bool operator==(const ConstantUniverse&, const ConstantUniverse&) = default;
};

struct GroundRule {
  RuleLabel origin;
  RuleKind kind = RuleKind::Property;
  std::size_t instance_id = 0;
  std::vector<Literal> body;
  Literal head;

  friend bool operator==(const GroundRule&, const GroundRule&) = default;
};

/// Variable-free program handed to the reasoner. Questions ride along so the
/// reasoner can place their concepts on the timeline.
struct GroundProgram {
  std::vector<GroundRule> rules;
  std::vector<Observation> observations;
  std::vector<Question> questions;
  std::vector<Priority> priorities;
  FluentsDecl fluent_patterns;
  ConstantUniverse universe;

  friend bool operator==(const GroundProgram&, const GroundProgram&) = default;
};

ConstantUniverse collect_universe(const Domain& d);

/// Instantiates every distinct variable of `r` with every universe member:
/// |u|^k instances for k variables, enumerated with the first variable varying
/// slowest. A variable-free rule yields itself.
std::vector<GroundRule> ground_rule(const Rule& r, const ConstantUniverse& u);

/// Grounds a validated domain.
GroundProgram ground_domain(const Domain& d);

}  // namespace star

#endif  // STAR_GROUNDING_HPP_
