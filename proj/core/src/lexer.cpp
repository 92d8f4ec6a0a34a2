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

#include "star/lexer.hpp"

namespace star {

const char* to_string(TokenKind kind) {
  switch (kind) {
    case TokenKind::Identifier: return "identifier";
    case TokenKind::Variable: return "variable";
    case TokenKind::Integer: return "integer";
    case TokenKind::LParen: return "'('";
    case TokenKind::RParen: return "')'";
    case TokenKind::LBracket: return "'['";
    case TokenKind::RBracket: return "']'";
    case TokenKind::Comma: return "','";
    case TokenKind::Semicolon: return "';'";
    case TokenKind::Dot: return "'.'";
    case TokenKind::Minus: return "'-'";
    case TokenKind::ColonColon: return "'::'";
    case TokenKind::QuestionQuestion: return "'?" "?'";
    case TokenKind::GreaterGreater: return "'>>'";
    case TokenKind::Invalid: return "invalid character";
    case TokenKind::End: return "end of input";
  }
  return "?";
}

namespace {

bool is_lower(char c) { return c >= 'a' && c <= 'z'; }
bool is_upper(char c) { return c >= 'A' && c <= 'Z'; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_word(char c) { return is_lower(c) || is_upper(c) || is_digit(c) || c == '_'; }
bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\v'; }

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      bool skipped = skip_trivia();
      if (!out.empty() && out.back().kind == TokenKind::Minus)
        out.back().spaced_after = skipped;
      if (pos_ >= src_.size()) {
        out.push_back(make(TokenKind::End, pos_, pos_, line_, col_));
        return out;
      }
      out.push_back(next());
    }
  }

 private:
  // Returns true when anything was skipped.
  bool skip_trivia() {
    std::size_t start = pos_;
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (is_space(c)) {
        advance();
      } else if (c == '%') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      } else {
        break;
      }
    }
    return pos_ != start;
  }

  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else if ((static_cast<unsigned char>(src_[pos_]) & 0xC0) != 0x80) {
      // Columns count code points, not UTF-8 continuation bytes.
      ++col_;
    }
    ++pos_;
  }

  Token make(TokenKind kind, std::size_t begin, std::size_t end, int line,
             int col) const {
    Token t;
    t.kind = kind;
    t.text = src_.substr(begin, end - begin);
    t.span = Span{begin, end - begin, line, col};
    return t;
  }

  Token next() {
    const std::size_t begin = pos_;
    const int line = line_, col = col_;
    const char c = src_[pos_];
    auto two = [&](char second) {
      return pos_ + 1 < src_.size() && src_[pos_ + 1] == second;
    };
    auto single = [&](TokenKind k) {
      advance();
      return make(k, begin, pos_, line, col);
    };
    auto pair = [&](TokenKind k) {
      advance();
      advance();
      return make(k, begin, pos_, line, col);
    };

    if (is_lower(c) || is_upper(c) || c == '_') {
      while (pos_ < src_.size() && is_word(src_[pos_])) advance();
      return make(is_lower(c) ? TokenKind::Identifier : TokenKind::Variable,
                  begin, pos_, line, col);
    }
    if (is_digit(c)) {
      while (pos_ < src_.size() && is_digit(src_[pos_])) advance();
      return make(TokenKind::Integer, begin, pos_, line, col);
    }
    switch (c) {
      case '(': return single(TokenKind::LParen);
      case ')': return single(TokenKind::RParen);
      case '[': return single(TokenKind::LBracket);
      case ']': return single(TokenKind::RBracket);
      case ',': return single(TokenKind::Comma);
      case ';': return single(TokenKind::Semicolon);
      case '.': return single(TokenKind::Dot);
      case '-': return single(TokenKind::Minus);
      case ':':
        if (two(':')) return pair(TokenKind::ColonColon);
        break;
      case '?':
        if (two('?')) return pair(TokenKind::QuestionQuestion);
        break;
      case '>':
        if (two('>')) return pair(TokenKind::GreaterGreater);
        break;
      default:
        break;
    }
    // Swallow a whole UTF-8 sequence so the diagnostic covers one character.
    advance();
    while (pos_ < src_.size() &&
           (static_cast<unsigned char>(src_[pos_]) & 0xC0) == 0x80)
      advance();
    return make(TokenKind::Invalid, begin, pos_, line, col);
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

}  // namespace

std::vector<Token> lex(std::string_view source) { return Lexer(source).run(); }

}  // namespace star
