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

#include "star/bk_graph.hpp"

#include <set>
#include <stdexcept>

#include "json.hpp"

namespace star {

using nlohmann::json;

void to_json(json& j, const ConceptNode& n) {
  j = json{{"id", n.id}, {"concept", n.atom}, {"polarity", n.polarity}};
}
void from_json(const json& j, ConceptNode& n) {
  j.at("id").get_to(n.id);
  j.at("concept").get_to(n.atom);
  j.at("polarity").get_to(n.polarity);
}
void to_json(json& j, const RuleNode& n) {
  j = json{{"id", n.id}, {"label", n.label}, {"kind", n.kind}};
}
void from_json(const json& j, RuleNode& n) {
  j.at("id").get_to(n.id);
  j.at("label").get_to(n.label);
  j.at("kind").get_to(n.kind);
}
void to_json(json& j, const GraphEdge& e) {
  j = json{{"from", e.from}, {"to", e.to}, {"style", e.style}, {"role", e.role}};
}
void from_json(const json& j, GraphEdge& e) {
  j.at("from").get_to(e.from);
  j.at("to").get_to(e.to);
  j.at("style").get_to(e.style);
  j.at("role").get_to(e.role);
}

namespace {

std::string rule_id(const RuleLabel& l) { return "rule:" + l.str(); }

std::string quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

GraphDocument export_bk_graph(const Domain& d) {
  GraphDocument g;
  std::set<std::string> seen;
  auto concept_node = [&](const Literal& l) {
    std::string id = l.str();
    if (seen.insert(id).second)
      g.concept_nodes.push_back(
          ConceptNode{id, l.atom.str(), l.negative ? "negative" : "positive"});
    return id;
  };

  for (const auto& r : d.rules) {
    const std::string rid = rule_id(r.label);
    g.rule_nodes.push_back(RuleNode{rid, r.label.str(), to_string(r.kind)});
    for (const auto& l : r.body)
      g.edges.push_back(GraphEdge{concept_node(l), rid, "solid", "body"});
    g.edges.push_back(GraphEdge{rid, concept_node(r.head), "solid", "head"});
  }
  for (const auto& p : d.priorities)
    g.edges.push_back(
        GraphEdge{rule_id(p.stronger), rule_id(p.weaker), "dashed", "priority"});
  return g;
}

std::string to_json(const GraphDocument& g) {
  return json{{"concept_nodes", g.concept_nodes},
              {"rule_nodes", g.rule_nodes},
              {"edges", g.edges}}
      .dump();
}

GraphDocument graph_document_from_json(std::string_view text) {
  try {
    json j = json::parse(text);
    GraphDocument g;
    j.at("concept_nodes").get_to(g.concept_nodes);
    j.at("rule_nodes").get_to(g.rule_nodes);
    j.at("edges").get_to(g.edges);
    return g;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed graph document: ") + e.what());
  }
}

std::string to_dot(const GraphDocument& g) {
  std::string out = "digraph background_knowledge {\n";
  for (const auto& n : g.concept_nodes) {
    out += "  " + quote(n.id) + " [label=" + quote(n.id) + ", style=filled, fillcolor=";
    out += n.polarity == "negative" ? "red" : "green";
    out += "];\n";
  }
  for (const auto& n : g.rule_nodes)
    out += "  " + quote(n.id) + " [label=" + quote(n.label) + ", shape=box];\n";
  for (const auto& e : g.edges) {
    out += "  " + quote(e.from) + " -> " + quote(e.to);
    if (e.style == "dashed") out += " [style=dashed]";
    out += ";\n";
  }
  return out + "}\n";
}

}  // namespace star
