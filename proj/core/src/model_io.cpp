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

#include "star/model_io.hpp"

#include <stdexcept>

#include "json.hpp"

namespace star {

using nlohmann::json;

// JSON mapping for the document types. Optional fields are omitted when empty
// (`rule`, `instance`) except `selected`, which is written as null.

void to_json(json& j, const DocConcept& c) {
  j = json{{"name", c.name}, {"kind", c.kind}};
}
void from_json(const json& j, DocConcept& c) {
  j.at("name").get_to(c.name);
  j.at("kind").get_to(c.kind);
}

void to_json(json& j, const DocCell& c) {
  j = json{{"concept", c.concept_name},   {"t", c.t},
           {"value", c.value},       {"observed", c.observed},
           {"provenance", c.provenance}};
  if (c.rule) j["rule"] = *c.rule;
}
void from_json(const json& j, DocCell& c) {
  j.at("concept").get_to(c.concept_name);
  j.at("t").get_to(c.t);
  j.at("value").get_to(c.value);
  j.at("observed").get_to(c.observed);
  j.at("provenance").get_to(c.provenance);
  if (auto it = j.find("rule"); it != j.end() && !it->is_null())
    c.rule = it->get<std::string>();
}

void to_json(json& j, const DocChoice& c) {
  j = json{{"index", c.index}, {"value", c.value}};
}
void from_json(const json& j, DocChoice& c) {
  j.at("index").get_to(c.index);
  j.at("value").get_to(c.value);
}

void to_json(json& j, const DocAnswer& a) {
  j = json{{"question_id", a.question_id}, {"per_choice", a.per_choice}};
  j["selected"] = a.selected ? json(*a.selected) : json(nullptr);
}
void from_json(const json& j, DocAnswer& a) {
  j.at("question_id").get_to(a.question_id);
  j.at("per_choice").get_to(a.per_choice);
  if (auto it = j.find("selected"); it != j.end() && !it->is_null())
    a.selected = it->get<std::size_t>();
}

void to_json(json& j, const DocArgument& a) {
  j = json{{"id", a.id},
           {"conclusion", {{"literal", a.literal}, {"t", a.t}}},
           {"source", a.source},
           {"precludes", a.precludes},
           {"premises", a.premises}};
  if (a.rule) j["rule"] = *a.rule;
  if (a.instance) j["instance"] = *a.instance;
}
void from_json(const json& j, DocArgument& a) {
  j.at("id").get_to(a.id);
  j.at("conclusion").at("literal").get_to(a.literal);
  j.at("conclusion").at("t").get_to(a.t);
  j.at("source").get_to(a.source);
  j.at("precludes").get_to(a.precludes);
  j.at("premises").get_to(a.premises);
  if (auto it = j.find("rule"); it != j.end()) a.rule = it->get<std::string>();
  if (auto it = j.find("instance"); it != j.end()) a.instance = it->get<std::size_t>();
}

void to_json(json& j, const DocReport& r) {
  json qualified = json::array();
  for (const auto& [w, l] : r.qualified) qualified.push_back({w, l});
  j = json{{"universal", r.universal},   {"acceptable", r.acceptable},
           {"retracted", r.retracted},   {"elaborated", r.elaborated},
           {"qualified", qualified}};
}
void from_json(const json& j, DocReport& r) {
  j.at("universal").get_to(r.universal);
  j.at("acceptable").get_to(r.acceptable);
  j.at("retracted").get_to(r.retracted);
  j.at("elaborated").get_to(r.elaborated);
  for (const auto& pair : j.at("qualified"))
    r.qualified.emplace_back(pair.at(0).get<std::string>(), pair.at(1).get<std::string>());
}

void to_json(json& j, const DocSession& s) {
  j = json{{"id", s.id},         {"horizon", s.horizon}, {"concepts", s.concepts},
           {"cells", s.cells},   {"answers", s.answers}, {"report", s.report}};
}
void from_json(const json& j, DocSession& s) {
  j.at("id").get_to(s.id);
  j.at("horizon").get_to(s.horizon);
  j.at("concepts").get_to(s.concepts);
  j.at("cells").get_to(s.cells);
  j.at("answers").get_to(s.answers);
  j.at("report").get_to(s.report);
}

namespace {

const char* source_name(Argument::Source s) {
  switch (s) {
    case Argument::Source::Observation: return "observation";
    case Argument::Source::ConstantDecl: return "constant";
    case Argument::Source::Rule: return "rule";
    case Argument::Source::Inertia: return "inertia";
  }
  return "?";
}

DocArgument to_doc(const Argument& a) {
  DocArgument d;
  d.id = a.id;
  d.literal = a.conclusion.str();
  d.t = a.t;
  d.source = source_name(a.source);
  d.precludes = a.precludes;
  if (a.rule) {
    d.rule = a.rule->str();
    d.instance = a.instance_id;
  }
  d.premises = a.premises;
  return d;
}

DocSession to_doc(const SessionResult& r, const Visibility& visible) {
  DocSession s;
  s.id = r.session;
  s.horizon = r.model.horizon;
  const auto& m = r.model;
  for (std::size_t i = 0; i < m.concepts.size(); ++i) {
    if (!visible.shows(m.concepts[i])) continue;
    const std::string name = m.concepts[i].str();
    s.concepts.push_back(DocConcept{name, to_string(m.at(i, 0).kind)});
    for (int t = 0; t <= m.horizon; ++t) {
      const Cell& c = m.at(i, t);
      DocCell dc{name, t, to_string(c.value), c.observed,
                 to_string(c.provenance.kind), std::nullopt};
      if (c.provenance.rule) dc.rule = c.provenance.rule->str();
      s.cells.push_back(std::move(dc));
    }
  }
  for (const auto& a : r.answers) {
    DocAnswer da;
    da.question_id = a.question_id;
    for (const auto& [idx, v] : a.per_choice) da.per_choice.push_back({idx, to_string(v)});
    da.selected = a.selected;
    s.answers.push_back(std::move(da));
  }
  for (const auto& a : r.report.universal) s.report.universal.push_back(to_doc(a));
  s.report.acceptable = r.report.acceptable;
  s.report.retracted = r.report.retracted;
  s.report.elaborated = r.report.elaborated;
  s.report.qualified = r.report.qualified;
  return s;
}

std::string join(const std::vector<std::string>& ids) {
  std::string out;
  for (const auto& id : ids) {
    out += ' ';
    out += id;
  }
  return out;
}

}  // namespace

ModelDocument render_model_document(const std::vector<SessionResult>& results,
                                    const std::optional<Visibility>& visible) {
  ModelDocument doc;
  for (const auto& r : results)
    doc.sessions.push_back(to_doc(r, visible ? *visible : r.visible));
  return doc;
}

std::string to_json(const ModelDocument& doc) {
  json j{{"schema_version", doc.schema_version}, {"sessions", doc.sessions}};
  return j.dump();
}

ModelDocument model_document_from_json(std::string_view text) {
  try {
    json j = json::parse(text);
    ModelDocument doc;
    j.at("schema_version").get_to(doc.schema_version);
    j.at("sessions").get_to(doc.sessions);
    return doc;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed model document: ") + e.what());
  }
}

std::string raw_provenance(const Provenance& p) {
  switch (p.kind) {
    case ProvenanceKind::Observation: return "observation";
    case ProvenanceKind::ConstantDecl: return "always";
    case ProvenanceKind::Inertia: return "inertia";
    case ProvenanceKind::PropertyRule:
    case ProvenanceKind::CausalRule:
      return p.rule ? p.rule->str() : "rule";
    case ProvenanceKind::None: return "none";
  }
  return "?";
}

std::string answer_summary(const Answer& a) {
  if (a.per_choice.size() == 1) return to_string(a.per_choice.front().second);
  if (a.selected) return std::to_string(*a.selected);
  bool all_false = !a.per_choice.empty();
  for (const auto& [_, v] : a.per_choice)
    if (v != TruthValue::False) all_false = false;
  return all_false ? "false" : "unknown";
}

void render_raw_lines(const SessionResult& r, const Visibility& visible,
                      const TraceSet& report,
                      const std::function<void(std::string_view)>& emit) {
  emit("session s(" + std::to_string(r.session) + ")");
  const auto& m = r.model;
  for (std::size_t i = 0; i < m.concepts.size(); ++i) {
    if (!visible.shows(m.concepts[i])) continue;
    const std::string name = m.concepts[i].str();
    for (int t = 0; t <= m.horizon; ++t) {
      const Cell& c = m.at(i, t);
      if (c.value == TruthValue::Unknown) continue;
      std::string line = "t=" + std::to_string(t) + " ";
      if (c.value == TruthValue::False) line += '-';
      line += name;
      line += ' ';
      line += to_string(c.value);
      line += ' ';
      line += raw_provenance(c.provenance);
      line += ' ';
      line += to_string(c.kind);
      emit(line);
    }
  }
  for (const auto& a : r.answers)
    emit("answer q(" + std::to_string(a.question_id) + ") = " + answer_summary(a));

  if (report.universal) {
    std::vector<std::string> ids;
    for (const auto& a : r.report.universal) ids.push_back(a.id);
    emit("universal:" + join(ids));
  }
  if (report.acceptable) emit("acceptable:" + join(r.report.acceptable));
  if (report.retracted) emit("retracted:" + join(r.report.retracted));
  if (report.elaborated) emit("elaborated:" + join(r.report.elaborated));
  if (report.qualified) {
    std::vector<std::string> pairs;
    for (const auto& [w, l] : r.report.qualified) pairs.push_back(w + ">" + l);
    emit("qualified:" + join(pairs));
  }
}

std::string render_raw(const SessionResult& r, const Visibility& visible,
                       const TraceSet& report) {
  std::string out;
  render_raw_lines(r, visible, report, [&](std::string_view line) {
    out += line;
    out += '\n';
  });
  return out;
}

}  // namespace star
