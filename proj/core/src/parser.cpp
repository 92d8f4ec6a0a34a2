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

#include "star/parser.hpp"

#include <charconv>
#include <limits>

#include "star/lexer.hpp"

namespace star {
namespace {

struct SyntaxError {
  Diagnostic diag;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(lex(text)) {}

  ParseResult run() {
    ParseResult result;
    while (peek().kind != TokenKind::End) {
      const std::size_t start = pos_;
      try {
        statement(result.domain);
      } catch (const SyntaxError& e) {
        result.diagnostics.push_back(e.diag);
        recover(start);
      }
    }
    return result;
  }

  std::optional<std::vector<Term>> term_list(std::vector<Diagnostic>* diags) {
    try {
      std::vector<Term> terms;
      terms.push_back(term());
      while (accept(TokenKind::Comma)) terms.push_back(term());
      expect(TokenKind::End, "end of list");
      return terms;
    } catch (const SyntaxError& e) {
      if (diags) diags->push_back(e.diag);
      return std::nullopt;
    }
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    std::size_t i = pos_ + ahead;
    return i < tokens_.size() ? tokens_[i] : tokens_.back();
  }

  const Token& take() {
    const Token& t = peek();
    if (t.kind != TokenKind::End) ++pos_;
    return t;
  }

  bool accept(TokenKind kind) {
    if (peek().kind != kind) return false;
    take();
    return true;
  }

  [[noreturn]] void fail(const Token& at, std::string code,
                         std::string message) const {
    throw SyntaxError{Diagnostic{Severity::Error, std::move(code),
                                 std::move(message), at.span}};
  }

  [[noreturn]] void unexpected(const Token& at, std::string_view wanted) const {
    if (at.kind == TokenKind::Invalid)
      fail(at, "invalid-character",
           "unexpected character '" + std::string(at.text) + "'");
    std::string found = at.kind == TokenKind::End
                            ? std::string("end of input")
                            : "'" + std::string(at.text) + "'";
    fail(at, "syntax", "expected " + std::string(wanted) + ", found " + found);
  }

  const Token& expect(TokenKind kind, std::string_view wanted) {
    if (peek().kind != kind) unexpected(peek(), wanted);
    return take();
  }

  void expect_word(std::string_view word) {
    const Token& t = peek();
    if (t.kind != TokenKind::Identifier || t.text != word)
      unexpected(t, "'" + std::string(word) + "'");
    take();
  }

  bool peek_word(std::string_view word, std::size_t ahead = 0) const {
    return peek(ahead).kind == TokenKind::Identifier &&
           peek(ahead).text == word;
  }

  template <typename Int>
  Int integer() {
    const Token& t = expect(TokenKind::Integer, "an integer");
    Int value{};
    auto [ptr, ec] =
        std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
    if (ec != std::errc() || ptr != t.text.data() + t.text.size())
      fail(t, "integer-range", "integer '" + std::string(t.text) + "' is out of range");
    return value;
  }

  // Skips past the statement that failed. Always makes progress.
  void recover(std::size_t start) {
    if (pos_ == start && peek().kind != TokenKind::End &&
        peek().kind != TokenKind::Dot)
      take();
    while (peek().kind != TokenKind::End) {
      if (take().kind == TokenKind::Dot) return;
    }
  }

  Span finish_span(std::size_t first) const {
    const Token& a = tokens_[first];
    const Token& b = tokens_[pos_ - 1];
    Span s = a.span;
    s.length = b.span.offset + b.span.length - a.span.offset;
    return s;
  }

  bool at_introducer(std::string_view name, TokenKind op) const {
    return peek_word(name) && peek(1).kind == TokenKind::LParen &&
           peek(2).kind == TokenKind::Integer &&
           peek(3).kind == TokenKind::RParen && peek(4).kind == op;
  }

  void statement(Domain& d) {
    const std::size_t first = pos_;
    if (peek().kind != TokenKind::Identifier) unexpected(peek(), "a statement");

    // Nothing reaches the domain until the closing '.' has been read.
    if (peek_word("session") && peek(1).kind == TokenKind::LParen) {
      auto s = session_decl();
      commit(d, first, StatementKind::Session, d.sessions.size());
      d.sessions.push_back(std::move(s));
    } else if (peek_word("fluents") && peek(1).kind == TokenKind::LParen) {
      auto patterns = fluents_decl();
      commit(d, first, StatementKind::Fluents, d.fluents.fluents.size());
      d.fluents.fluents.insert(d.fluents.fluents.end(), patterns.begin(),
                               patterns.end());
    } else if (at_introducer("s", TokenKind::ColonColon)) {
      auto o = observation();
      commit(d, first, StatementKind::Observation, d.observations.size());
      d.observations.push_back(std::move(o));
    } else if (at_introducer("q", TokenKind::QuestionQuestion)) {
      auto q = question();
      commit(d, first, StatementKind::Question, d.questions.size());
      d.questions.push_back(std::move(q));
    } else {
      RuleLabel label = rule_label();
      if (accept(TokenKind::ColonColon)) {
        auto r = rule(std::move(label));
        commit(d, first, StatementKind::Rule, d.rules.size());
        d.rules.push_back(std::move(r));
      } else if (accept(TokenKind::GreaterGreater)) {
        RuleLabel weaker = rule_label();
        commit(d, first, StatementKind::Priority, d.priorities.size());
        d.priorities.push_back(Priority{std::move(label), std::move(weaker)});
      } else {
        unexpected(peek(), "'::' or '>>' after rule label");
      }
    }
  }

  void commit(Domain& d, std::size_t first, StatementKind kind,
              std::size_t index) {
    expect(TokenKind::Dot, "'.'");
    d.source_spans.push_back(StatementSpan{kind, index, finish_span(first)});
  }

  Observation observation() {
    take();  // s
    take();  // (
    Observation o;
    o.session = integer<int>();
    take();  // )
    take();  // ::
    o.literal = literal();
    expect_word("at");
    if (peek_word("always")) {
      take();
      o.time = TimeRef::always();
    } else {
      o.time = TimeRef::at(integer<int>());
    }
    return o;
  }

  Question question() {
    take();  // q
    take();  // (
    Question q;
    q.id = integer<int>();
    take();  // )
    take();  // ??
    do {
      Choice c;
      c.literal = literal();
      expect_word("at");
      if (peek_word("always"))
        fail(peek(), "question-always",
             "questions must name a numeric time-point, not 'always'");
      c.t = integer<int>();
      q.choices.push_back(std::move(c));
    } while (accept(TokenKind::Semicolon));
    return q;
  }

  RuleLabel rule_label() {
    RuleLabel label;
    label.name = std::string(expect(TokenKind::Identifier, "a rule label").text);
    if (accept(TokenKind::LParen)) {
      label.index = integer<std::int64_t>();
      expect(TokenKind::RParen, "')'");
    }
    return label;
  }

  static std::optional<RuleKind> verb(const Token& t) {
    if (t.kind != TokenKind::Identifier) return std::nullopt;
    if (t.text == "implies") return RuleKind::Property;
    if (t.text == "causes") return RuleKind::Causal;
    if (t.text == "precludes") return RuleKind::Preclusion;
    return std::nullopt;
  }

  Rule rule(RuleLabel label) {
    Rule r;
    r.label = std::move(label);
    if (peek_word("true") && verb(peek(1))) {
      take();
    } else {
      r.body.push_back(literal());
      while (accept(TokenKind::Comma)) r.body.push_back(literal());
    }
    auto kind = verb(peek());
    if (!kind) unexpected(peek(), "'implies', 'causes' or 'precludes'");
    take();
    r.kind = *kind;
    r.head = literal();
    return r;
  }

  SessionDecl session_decl() {
    take();  // session
    take();  // (
    SessionDecl s;
    expect_word("s");
    expect(TokenKind::LParen, "'('");
    s.session = integer<int>();
    expect(TokenKind::RParen, "')'");
    expect(TokenKind::Comma, "','");
    expect(TokenKind::LBracket, "'['");
    if (!accept(TokenKind::RBracket)) {
      do {
        expect_word("q");
        expect(TokenKind::LParen, "'('");
        s.questions.push_back(integer<int>());
        expect(TokenKind::RParen, "')'");
      } while (accept(TokenKind::Comma));
      expect(TokenKind::RBracket, "']'");
    }
    expect(TokenKind::Comma, "','");
    if (peek_word("all") && peek(1).kind != TokenKind::LParen) {
      take();
    } else {
      s.visible.all = false;
      s.visible.patterns = bracketed_terms();
    }
    expect(TokenKind::RParen, "')'");
    return s;
  }

  std::vector<Term> fluents_decl() {
    take();  // fluents
    take();  // (
    auto patterns = bracketed_terms();
    expect(TokenKind::RParen, "')'");
    return patterns;
  }

  std::vector<Term> bracketed_terms() {
    std::vector<Term> out;
    expect(TokenKind::LBracket, "'[' or 'all'");
    if (accept(TokenKind::RBracket)) return out;
    do {
      const Token& at = peek();
      Term t = term();
      if (t.is_variable()) fail(at, "variable-literal", "expected a concept pattern, found variable '" + t.name + "'");
      out.push_back(std::move(t));
    } while (accept(TokenKind::Comma));
    expect(TokenKind::RBracket, "']'");
    return out;
  }

  Literal literal() {
    Literal lit;
    if (peek().kind == TokenKind::Minus) {
      const Token& minus = take();
      if (minus.spaced_after)
        fail(minus, "negation-whitespace",
             "'-' must be written directly before the concept");
      lit.negative = true;
    }
    const Token& at = peek();
    lit.atom = term();
    if (lit.atom.is_variable())
      fail(at, "variable-literal",
           "a literal cannot be a bare variable '" + lit.atom.name + "'");
    return lit;
  }

  Term term() {
    const Token& t = peek();
    if (t.kind == TokenKind::Variable) {
      take();
      return Term::variable(std::string(t.text));
    }
    if (t.kind != TokenKind::Identifier) unexpected(t, "a term");
    take();
    std::string name(t.text);
    if (!accept(TokenKind::LParen)) return Term::constant(std::move(name));
    std::vector<Term> args;
    args.push_back(term());
    while (accept(TokenKind::Comma)) args.push_back(term());
    expect(TokenKind::RParen, "')' or ','");
    return Term::compound(std::move(name), std::move(args));
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

ParseResult parse_domain(std::string_view text) { return Parser(text).run(); }

std::optional<std::vector<Term>> parse_term_list(std::string_view text,
                                                 std::vector<Diagnostic>* diags) {
  return Parser(text).term_list(diags);
}

}  // namespace star
