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

#ifndef STAR_LEXER_HPP_
#define STAR_LEXER_HPP_

#include <string_view>
#include <vector>

#include "star/diagnostic.hpp"

namespace star {

enum class TokenKind {
  Identifier,  // [a-z][A-Za-z0-9_]*
  Variable,    // [A-Z_][A-Za-z0-9_]*
  Integer,
  LParen,
  RParen,
  LBracket,
  RBracket,
  Comma,
  Semicolon,
  Dot,
  Minus,
  ColonColon,      // ::
  QuestionQuestion,  // ??
  GreaterGreater,  // >>
  Invalid,
  End,
};

const char* to_string(TokenKind kind);

struct Token {
  TokenKind kind = TokenKind::End;
  std::string_view text;
  Span span;
  /// Set on Minus when whitespace or a comment separates it from the next
  /// token.
  bool spaced_after = false;
};

/// Splits `source` into tokens. Comments (`%` to end of line) and whitespace
/// are dropped. Never fails: unrecognized bytes become Invalid tokens. The
/// last token is always End. Token text views point into `source`.
std::vector<Token> lex(std::string_view source);

}  // namespace star

#endif  // STAR_LEXER_HPP_
