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

#include <gtest/gtest.h>

#include "star/parser.hpp"
#include "story_files.hpp"

namespace star {
namespace {

Term c(const char* n) { return Term::constant(n); }
Term v(const char* n) { return Term::variable(n); }
Term f(const char* n, std::vector<Term> a) { return Term::compound(n, std::move(a)); }

ParseResult parse_ok(std::string_view text) {
  ParseResult r = parse_domain(text);
  for (const auto& d : r.diagnostics) ADD_FAILURE() << format_diagnostic(d);
  return r;
}

std::vector<std::string> codes(const ParseResult& r) {
  std::vector<std::string> out;
  for (const auto& d : r.diagnostics) out.push_back(d.code);
  return out;
}

TEST(Parser, ObservationAtTimePoint) {
  auto r = parse_ok("s(0) :: ring(ann,doorbell) at 2.");
  ASSERT_EQ(r.domain.observations.size(), 1u);
  const auto& o = r.domain.observations[0];
  EXPECT_EQ(o.session, 0);
  EXPECT_FALSE(o.literal.negative);
  EXPECT_EQ(o.literal.atom, f("ring", {c("ann"), c("doorbell")}));
  EXPECT_EQ(o.time, TimeRef::at(2));
}

TEST(Parser, ObservationAlwaysAndNegation) {
  auto r = parse_ok("s(3) :: person(ann) at always.\ns(1)::-afraid(ann) at 0.");
  ASSERT_EQ(r.domain.observations.size(), 2u);
  EXPECT_TRUE(r.domain.observations[0].time.is_always());
  EXPECT_EQ(r.domain.observations[0].session, 3);
  EXPECT_TRUE(r.domain.observations[1].literal.negative);
}

TEST(Parser, EmptyInput) {
  auto r = parse_domain("");
  EXPECT_TRUE(r.domain.empty());
  EXPECT_TRUE(r.diagnostics.empty());
}

TEST(Parser, CommentsOnly) {
  auto r = parse_domain("% nothing here\n   % still nothing\n");
  EXPECT_TRUE(r.domain.empty());
  EXPECT_TRUE(r.diagnostics.empty());
}

TEST(Parser, SingleChoiceQuestion) {
  auto r = parse_ok("q(1) ?? has(ann,doorkeys) at 1.");
  ASSERT_EQ(r.domain.questions.size(), 1u);
  const auto& q = r.domain.questions[0];
  EXPECT_EQ(q.id, 1);
  ASSERT_EQ(q.choices.size(), 1u);
  EXPECT_EQ(q.choices[0].literal.atom, f("has", {c("ann"), c("doorkeys")}));
  EXPECT_EQ(q.choices[0].t, 1);
}

TEST(Parser, MultipleChoiceQuestion) {
  auto r = parse_ok("q(2) ?? wants(mary,find_out_who_at(door)) at 4;\n"
                    "       wants(mary,open(door)) at 4.");
  ASSERT_EQ(r.domain.questions.size(), 1u);
  ASSERT_EQ(r.domain.questions[0].choices.size(), 2u);
  EXPECT_EQ(r.domain.questions[0].choices[1].literal.atom.str(), "wants(mary,open(door))");
}

TEST(Parser, Priority) {
  auto r = parse_ok("p(23) >> p(22).");
  ASSERT_EQ(r.domain.priorities.size(), 1u);
  EXPECT_EQ(r.domain.priorities[0].stronger, (RuleLabel{"p", 23}));
  EXPECT_EQ(r.domain.priorities[0].weaker, (RuleLabel{"p", 22}));
}

TEST(Parser, PropertyRule) {
  auto r = parse_ok(
      "p(22) :: walk_to(Person,door), in_flat(Person) implies wants(Person,open(door)).");
  ASSERT_EQ(r.domain.rules.size(), 1u);
  const Rule& rule = r.domain.rules[0];
  EXPECT_EQ(rule.label, (RuleLabel{"p", 22}));
  EXPECT_EQ(rule.kind, RuleKind::Property);
  ASSERT_EQ(rule.body.size(), 2u);
  EXPECT_EQ(rule.body[0], (Literal{false, f("walk_to", {v("Person"), c("door")})}));
  EXPECT_EQ(rule.body[1], (Literal{false, f("in_flat", {v("Person")})}));
  EXPECT_EQ(rule.head, (Literal{false, f("wants", {v("Person"), f("open", {c("door")})})}));
}

TEST(Parser, RuleKindsFollowConnective) {
  auto r = parse_ok("c(1) :: a causes b.\nr(2) :: a precludes -b.\nr01 :: a, -z implies c.");
  ASSERT_EQ(r.domain.rules.size(), 3u);
  EXPECT_EQ(r.domain.rules[0].kind, RuleKind::Causal);
  EXPECT_EQ(r.domain.rules[1].kind, RuleKind::Preclusion);
  EXPECT_TRUE(r.domain.rules[1].head.negative);
  EXPECT_EQ(r.domain.rules[2].label, (RuleLabel{"r01", std::nullopt}));
  EXPECT_TRUE(r.domain.rules[2].body[1].negative);
}

TEST(Parser, TrueBodyIsEmpty) {
  auto r = parse_ok("p(1) :: true implies a.");
  ASSERT_EQ(r.domain.rules.size(), 1u);
  EXPECT_TRUE(r.domain.rules[0].body.empty());
}

TEST(Parser, SessionAndFluents) {
  auto r = parse_ok("session(s(0),[q(1),q(2)],all).\n"
                    "session(s(1),[],[wants(_,_)]).\n"
                    "fluents([in_flat(_), wants(_,_)]).");
  ASSERT_EQ(r.domain.sessions.size(), 2u);
  EXPECT_EQ(r.domain.sessions[0].questions, (std::vector<int>{1, 2}));
  EXPECT_TRUE(r.domain.sessions[0].visible.all);
  EXPECT_FALSE(r.domain.sessions[1].visible.all);
  ASSERT_EQ(r.domain.sessions[1].visible.patterns.size(), 1u);
  EXPECT_EQ(r.domain.fluents.fluents.size(), 2u);
}

TEST(Parser, StatementIntroducersAreOrdinaryFunctorsInsideTerms) {
  auto r = parse_ok("s(0) :: q(p(c(r(s)))) at 1.");
  ASSERT_EQ(r.domain.observations.size(), 1u);
  EXPECT_EQ(r.domain.observations[0].literal.atom.str(), "q(p(c(r(s))))");
}

TEST(Parser, WhitespaceIsInsignificant) {
  auto a = parse_ok("s(0)::in_flat( mary )   at\n 3.");
  auto b = parse_ok("s(0) :: in_flat(mary) at 3.");
  EXPECT_TRUE(equal_ignoring_spans(a.domain, b.domain));
}

TEST(Parser, RecoversAtNextDot) {
  auto r = parse_domain("s(0) :: at 2.\ns(0) :: a at 1.\nnonsense here.\np(1) :: a implies b.");
  EXPECT_EQ(r.domain.observations.size(), 1u);
  EXPECT_EQ(r.domain.rules.size(), 1u);
  EXPECT_GE(r.diagnostics.size(), 2u);
  for (const auto& d : r.diagnostics) EXPECT_EQ(d.severity, Severity::Error);
}

TEST(Parser, FailedStatementProducesNothing) {
  auto r = parse_domain("fluents([a(_)]) s(0) :: b at 1.");
  EXPECT_TRUE(r.domain.fluents.fluents.empty());
  EXPECT_TRUE(r.domain.observations.empty());
  EXPECT_FALSE(r.diagnostics.empty());
}

TEST(Parser, MissingFinalDot) {
  auto r = parse_domain("s(0) :: a at 1");
  EXPECT_TRUE(r.domain.observations.empty());
  ASSERT_EQ(r.diagnostics.size(), 1u);
  EXPECT_EQ(r.diagnostics[0].code, "syntax");
}

TEST(Parser, QuestionWithAlwaysIsAnError) {
  auto r = parse_domain("q(1) ?? a at always.");
  EXPECT_TRUE(r.domain.questions.empty());
  EXPECT_EQ(codes(r), std::vector<std::string>{"question-always"});
}

TEST(Parser, WhitespaceAfterNegationIsAnError) {
  auto r = parse_domain("p(1) :: - a implies b.");
  EXPECT_TRUE(r.domain.rules.empty());
  EXPECT_EQ(codes(r), std::vector<std::string>{"negation-whitespace"});
}

TEST(Parser, DoubleNegationIsAnError) {
  auto r = parse_domain("s(0) :: --a at 1.");
  EXPECT_TRUE(r.domain.observations.empty());
  EXPECT_FALSE(r.diagnostics.empty());
}

TEST(Parser, VariableAsLiteralIsAnError) {
  auto r = parse_domain("p(1) :: X implies b.");
  EXPECT_TRUE(r.domain.rules.empty());
  EXPECT_EQ(codes(r), std::vector<std::string>{"variable-literal"});
}

TEST(Parser, InvalidCharacter) {
  auto r = parse_domain("s(0) :: a$ at 1.\ns(0) :: b at 1.");
  EXPECT_EQ(r.domain.observations.size(), 1u);
  ASSERT_FALSE(r.diagnostics.empty());
  EXPECT_EQ(r.diagnostics[0].code, "invalid-character");
}

TEST(Parser, HugeIntegerIsRangeError) {
  auto r = parse_domain("s(99999999999999999999) :: a at 1.");
  EXPECT_TRUE(r.domain.observations.empty());
  EXPECT_EQ(codes(r), std::vector<std::string>{"integer-range"});
}

TEST(Parser, DiagnosticSpanCoversOffendingToken) {
  const std::string text = "s(0) :: a at 1.\ns(0) :: b at soon.";
  auto r = parse_domain(text);
  ASSERT_EQ(r.diagnostics.size(), 1u);
  const Span& s = r.diagnostics[0].span;
  EXPECT_EQ(s.line, 2);
  EXPECT_EQ(text.substr(s.offset, s.length), "soon");
  EXPECT_EQ(s.column, 14);
}

TEST(Parser, SpansCoverEveryStatementInFileOrder) {
  auto r = parse_ok("s(0) :: a at 1.\np(1) :: a implies b.\ns(0) :: b at 2.");
  ASSERT_EQ(r.domain.source_spans.size(), 3u);
  EXPECT_EQ(r.domain.source_spans[0].kind, StatementKind::Observation);
  EXPECT_EQ(r.domain.source_spans[1].kind, StatementKind::Rule);
  EXPECT_EQ(r.domain.source_spans[2].kind, StatementKind::Observation);
  EXPECT_EQ(r.domain.source_spans[2].index, 1u);
  const Span* rule = r.domain.span_of(StatementKind::Rule, 0);
  ASSERT_NE(rule, nullptr);
  EXPECT_EQ(rule->line, 2);
  EXPECT_EQ(rule->column, 1);
}

TEST(Parser, ShippedStoryParsesCleanly) {
  auto r = parse_ok(testing::read_story_file("ann_mary.dmn"));
  EXPECT_EQ(r.domain.questions.size(), 2u);
  EXPECT_EQ(r.domain.rules.size(), 3u);
  EXPECT_EQ(r.domain.priorities.size(), 2u);
  EXPECT_EQ(r.domain.sessions.size(), 1u);
}

TEST(ParseTermList, AcceptsCommaJoinedPatterns) {
  auto terms = parse_term_list("wants(_,_), in_flat(X),a");
  ASSERT_TRUE(terms);
  EXPECT_EQ(terms->size(), 3u);
  EXPECT_FALSE(parse_term_list("wants(,"));
}

}  // namespace
}  // namespace star
