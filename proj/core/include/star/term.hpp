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

#ifndef STAR_TERM_HPP_
#define STAR_TERM_HPP_

#include <compare>
#include <string>
#include <vector>

namespace star {

/// A first-order term: a constant (`ann`), a variable (`Person`) or a
/// compound (`open(door)`). Compounds always have at least one argument;
/// a zero-arity symbol is a constant.
struct Term {
  enum class Kind { Constant, Variable, Compound };

  Kind kind = Kind::Constant;
  std::string name;
  std::vector<Term> args;

  static Term constant(std::string name);
  static Term variable(std::string name);
  static Term compound(std::string functor, std::vector<Term> args);

  bool is_variable() const { return kind == Kind::Variable; }
  bool is_compound() const { return kind == Kind::Compound; }
  bool is_ground() const;
  std::size_t arity() const { return args.size(); }

  /// Canonical text, no whitespace: `wants(mary,open(door))`.
  std::string str() const;

  friend bool operator==(const Term&, const Term&) = default;
  friend std::strong_ordering operator<=>(const Term& a, const Term& b);
};

/// Appends the distinct variable names of `t` to `out` in first-appearance
/// order (names already present in `out` are skipped).
void collect_variables(const Term& t, std::vector<std::string>& out);

/// One-way matching of a pattern (which may hold variables) against a ground
/// term. Repeated pattern variables must bind equal subterms; `_` is
/// anonymous.
bool matches(const Term& pattern, const Term& ground);

bool is_constant_name(std::string_view s);
bool is_variable_name(std::string_view s);

struct Literal {
  bool negative = false;
  Term atom;

  Literal complement() const { return Literal{!negative, atom}; }
  std::string str() const;

  friend bool operator==(const Literal&, const Literal&) = default;
};

}  // namespace star

#endif  // STAR_TERM_HPP_
