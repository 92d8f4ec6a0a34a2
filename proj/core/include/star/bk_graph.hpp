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

#ifndef STAR_BK_GRAPH_HPP_
#define STAR_BK_GRAPH_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "star/ast.hpp"

namespace star {

// Background-knowledge graph: literals and rules are nodes; body literals
// point into their rule, rules point at their head, and priorities are dashed
// edges from the stronger rule to the weaker one.

struct ConceptNode {
  std::string id;        // the literal as written, e.g. "-z"
  std::string atom;      // without the sign
  std::string polarity;  // positive | negative
  friend bool operator==(const ConceptNode&, const ConceptNode&) = default;
};

struct RuleNode {
  std::string id;  // "rule:" + label
  std::string label;
  std::string kind;  // property | causal | preclusion
  friend bool operator==(const RuleNode&, const RuleNode&) = default;
};

struct GraphEdge {
  std::string from;
  std::string to;
  std::string style;  // solid | dashed
  std::string role;   // body | head | priority
  friend bool operator==(const GraphEdge&, const GraphEdge&) = default;
};

struct GraphDocument {
  std::vector<ConceptNode> concept_nodes;
  std::vector<RuleNode> rule_nodes;
  std::vector<GraphEdge> edges;
  friend bool operator==(const GraphDocument&, const GraphDocument&) = default;
};

GraphDocument export_bk_graph(const Domain& d);

std::string to_json(const GraphDocument& g);
/// Throws std::invalid_argument on malformed input.
GraphDocument graph_document_from_json(std::string_view json);

/// Graphviz rendering: green/red literal nodes, boxed rule nodes, dashed
/// priority edges.
std::string to_dot(const GraphDocument& g);

}  // namespace star

#endif  // STAR_BK_GRAPH_HPP_
