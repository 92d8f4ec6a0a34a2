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

#ifndef STAR_TESTS_GENERATORS_HPP_
#define STAR_TESTS_GENERATORS_HPP_

#include <cstdint>
#include <random>
#include <string>

#include "star/ast.hpp"

namespace star::testing {

using Rng = std::mt19937_64;

/// Variable-free domain: at most `max_concepts` concepts, `max_rules` rules,
/// time-points in 0..max_time, sessions 0 and 1.
Domain random_ground_domain(Rng& rng, int max_concepts = 6, int max_rules = 4,
                            int max_time = 5);

/// Domain exercising every statement form, variables included. Always valid
/// syntax; validity under validate_domain is not guaranteed.
Domain random_domain(Rng& rng);

/// A rule over variables X0..X(k-1), each appearing in the body.
Rule random_rule_with_vars(Rng& rng, int k);

/// Random printable garbage with STAR punctuation mixed in.
std::string random_noise(Rng& rng, std::size_t max_len);

int uniform(Rng& rng, int lo, int hi);

}  // namespace star::testing

#endif  // STAR_TESTS_GENERATORS_HPP_
