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

#ifndef STAR_MODEL_IO_HPP_
#define STAR_MODEL_IO_HPP_

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "star/reasoner.hpp"

namespace star {

// The structured model document. Field names match the JSON keys; enumerated
// values are kept as their lowercase wire strings.

struct DocConcept {
  std::string name;
  std::string kind;  // action | fluent | constant
  friend bool operator==(const DocConcept&, const DocConcept&) = default;
};

struct DocCell {
  std::string concept_name;
  int t = 0;
  std::string value;  // true | false | unknown
  bool observed = false;
  std::string provenance;  // none | observation | constant | property | causal | inertia
  std::optional<std::string> rule;
  friend bool operator==(const DocCell&, const DocCell&) = default;
};

struct DocChoice {
  std::size_t index = 0;
  std::string value;
  friend bool operator==(const DocChoice&, const DocChoice&) = default;
};

struct DocAnswer {
  int question_id = 0;
  std::vector<DocChoice> per_choice;
  std::optional<std::size_t> selected;
  friend bool operator==(const DocAnswer&, const DocAnswer&) = default;
};

struct DocArgument {
  std::string id;
  std::string literal;
  int t = 0;
  std::string source;  // observation | constant | rule | inertia
  bool precludes = false;
  std::optional<std::string> rule;
  std::optional<std::size_t> instance;
  std::vector<std::string> premises;
  friend bool operator==(const DocArgument&, const DocArgument&) = default;
};

struct DocReport {
  std::vector<DocArgument> universal;
  std::vector<std::string> acceptable;
  std::vector<std::string> retracted;
  std::vector<std::string> elaborated;
  std::vector<std::pair<std::string, std::string>> qualified;
  friend bool operator==(const DocReport&, const DocReport&) = default;
};

struct DocSession {
  int id = 0;
  int horizon = 0;
  std::vector<DocConcept> concepts;
  std::vector<DocCell> cells;
  std::vector<DocAnswer> answers;
  DocReport report;
  friend bool operator==(const DocSession&, const DocSession&) = default;
};

struct ModelDocument {
  int schema_version = 1;
  std::vector<DocSession> sessions;
  friend bool operator==(const ModelDocument&, const ModelDocument&) = default;
};

/// Builds the document. Each session is filtered by its own visibility
/// unless `visible` overrides it.
ModelDocument render_model_document(const std::vector<SessionResult>& results,
                                    const std::optional<Visibility>& visible = {});

/// Single-line JSON.
std::string to_json(const ModelDocument& doc);

/// Throws std::invalid_argument on malformed input.
ModelDocument model_document_from_json(std::string_view json);

/// Line-oriented rendering of one session:
///
///   session s(N)
///   t=<t> <sign><concept> <value> <provenance> <kind>
///   answer q(K) = <choice index|true|false|unknown>
///   <category>: <argument id> ...
///
/// Cell lines cover non-unknown visible cells, concept-major. Report lines
/// appear for the categories set in `report`.
std::string render_raw(const SessionResult& r, const Visibility& visible,
                       const TraceSet& report = {});

/// Same as render_raw, one call per line without the trailing newline.
void render_raw_lines(const SessionResult& r, const Visibility& visible,
                      const TraceSet& report,
                      const std::function<void(std::string_view)>& emit);

/// Provenance as printed in raw output: observation, always, inertia or the
/// rule label.
std::string raw_provenance(const Provenance& p);

/// The value printed after `answer q(K) =`.
std::string answer_summary(const Answer& a);

}  // namespace star

#endif  // STAR_MODEL_IO_HPP_
