// Copyright 2026 The Presto Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#ifndef PRESTO_SRC_LEXER_HPP_
#define PRESTO_SRC_LEXER_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "presto/ast.hpp"

namespace presto::detail {

enum class TokenKind {
  Identifier,
  Int,
  Hex,
  LBrace, RBrace, LParen, RParen,
  Semicolon, Colon, Comma, Dot, DotDot,
  Arrow,     // ->
  FatArrow,  // =>
  Assign,
  Plus, Minus, Star, StarStar, Slash, Percent,
  Gt, Lt, Ge, Le, EqEq, NotEq,
  End,
};

struct Token {
  TokenKind kind;
  std::string text;
  SourcePos pos;
};

/// Human-readable name of a token kind, as used in expected-sets.
std::string describe(TokenKind kind);

/// Splits source into tokens, dropping whitespace and // and /* */ comments.
/// The last token is always End. Throws ParseError on stray characters and
/// unterminated block comments.
std::vector<Token> tokenize(std::string_view source);

}  // namespace presto::detail

#endif  // PRESTO_SRC_LEXER_HPP_
