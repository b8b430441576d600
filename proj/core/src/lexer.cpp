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
#include "lexer.hpp"

#include <cctype>

#include "presto/errors.hpp"

namespace presto::detail {

std::string describe(TokenKind kind) {
  switch (kind) {
    case TokenKind::Identifier: return "identifier";
    case TokenKind::Int: return "integer literal";
    case TokenKind::Hex: return "hex literal";
    case TokenKind::LBrace: return "'{'";
    case TokenKind::RBrace: return "'}'";
    case TokenKind::LParen: return "'('";
    case TokenKind::RParen: return "')'";
    case TokenKind::Semicolon: return "';'";
    case TokenKind::Colon: return "':'";
    case TokenKind::Comma: return "','";
    case TokenKind::Dot: return "'.'";
    case TokenKind::DotDot: return "'..'";
    case TokenKind::Arrow: return "'->'";
    case TokenKind::FatArrow: return "'=>'";
    case TokenKind::Assign: return "'='";
    case TokenKind::Plus: return "'+'";
    case TokenKind::Minus: return "'-'";
    case TokenKind::Star: return "'*'";
    case TokenKind::StarStar: return "'**'";
    case TokenKind::Slash: return "'/'";
    case TokenKind::Percent: return "'%'";
    case TokenKind::Gt: return "'>'";
    case TokenKind::Lt: return "'<'";
    case TokenKind::Ge: return "'>='";
    case TokenKind::Le: return "'<='";
    case TokenKind::EqEq: return "'=='";
    case TokenKind::NotEq: return "'!='";
    case TokenKind::End: return "end of input";
  }
  return "token";
}

namespace {

bool is_ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_';
}
bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}
bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_hex_digit(char c) { return std::isxdigit(static_cast<unsigned char>(c)) != 0; }

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_trivia();
      SourcePos start = pos_;
      if (at_end()) {
        out.push_back({TokenKind::End, "", start});
        return out;
      }
      out.push_back(next(start));
    }
  }

 private:
  bool at_end() const { return index_ >= src_.size(); }
  char peek(std::size_t ahead = 0) const {
    return index_ + ahead < src_.size() ? src_[index_ + ahead] : '\0';
  }
  char advance() {
    char c = src_[index_++];
    if (c == '\n') {
      ++pos_.line;
      pos_.column = 1;
    } else {
      ++pos_.column;
    }
    return c;
  }

  void skip_trivia() {
    while (!at_end()) {
      char c = peek();
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance();
      } else if (c == '/' && peek(1) == '/') {
        while (!at_end() && peek() != '\n') advance();
      } else if (c == '/' && peek(1) == '*') {
        SourcePos open = pos_;
        advance();
        advance();
        bool closed = false;
        while (!at_end()) {
          if (peek() == '*' && peek(1) == '/') {
            advance();
            advance();
            closed = true;
            break;
          }
          advance();
        }
        if (!closed) {
          throw ParseError(open.line, open.column, "unterminated block comment");
        }
      } else {
        return;
      }
    }
  }

  Token make(TokenKind kind, SourcePos start, std::size_t from) const {
    return {kind, std::string(src_.substr(from, index_ - from)), start};
  }

  Token next(SourcePos start) {
    std::size_t from = index_;
    char c = peek();

    if (is_ident_start(c)) {
      while (is_ident_char(peek())) advance();
      return make(TokenKind::Identifier, start, from);
    }
    if (c == '0' && (peek(1) == 'x' || peek(1) == 'X')) {
      advance();
      advance();
      if (!is_hex_digit(peek())) {
        throw ParseError(pos_.line, pos_.column, {"hex digit"}, describe_char(peek()));
      }
      while (is_hex_digit(peek())) advance();
      if (is_ident_char(peek())) {
        throw ParseError(pos_.line, pos_.column, {"hex digit"}, describe_char(peek()));
      }
      return make(TokenKind::Hex, start, from);
    }
    if (is_digit(c)) {
      while (is_digit(peek())) advance();
      if (is_ident_start(peek())) {
        throw ParseError(pos_.line, pos_.column, {"digit"}, describe_char(peek()));
      }
      return make(TokenKind::Int, start, from);
    }

    auto two = [&](char second, TokenKind yes, TokenKind no) {
      advance();
      if (peek() == second) {
        advance();
        return make(yes, start, from);
      }
      return make(no, start, from);
    };

    switch (c) {
      case '{': advance(); return make(TokenKind::LBrace, start, from);
      case '}': advance(); return make(TokenKind::RBrace, start, from);
      case '(': advance(); return make(TokenKind::LParen, start, from);
      case ')': advance(); return make(TokenKind::RParen, start, from);
      case ';': advance(); return make(TokenKind::Semicolon, start, from);
      case ':': advance(); return make(TokenKind::Colon, start, from);
      case ',': advance(); return make(TokenKind::Comma, start, from);
      case '+': advance(); return make(TokenKind::Plus, start, from);
      case '/': advance(); return make(TokenKind::Slash, start, from);
      case '%': advance(); return make(TokenKind::Percent, start, from);
      case '.': return two('.', TokenKind::DotDot, TokenKind::Dot);
      case '-': return two('>', TokenKind::Arrow, TokenKind::Minus);
      case '*': return two('*', TokenKind::StarStar, TokenKind::Star);
      case '>': return two('=', TokenKind::Ge, TokenKind::Gt);
      case '<': return two('=', TokenKind::Le, TokenKind::Lt);
      case '=':
        advance();
        if (peek() == '=') {
          advance();
          return make(TokenKind::EqEq, start, from);
        }
        if (peek() == '>') {
          advance();
          return make(TokenKind::FatArrow, start, from);
        }
        return make(TokenKind::Assign, start, from);
      case '!':
        advance();
        if (peek() == '=') {
          advance();
          return make(TokenKind::NotEq, start, from);
        }
        throw ParseError(pos_.line, pos_.column, {"'='"}, describe_char(peek()));
      default:
        throw ParseError(start.line, start.column, "unexpected character " + describe_char(c));
    }
  }

  static std::string describe_char(char c) {
    if (c == '\0') return "end of input";
    auto u = static_cast<unsigned char>(c);
    if (u < 0x20 || u >= 0x7f) {
      static constexpr char kHex[] = "0123456789abcdef";
      return std::string("byte 0x") + kHex[u >> 4] + kHex[u & 0xf];
    }
    return std::string("'") + c + "'";
  }

  std::string_view src_;
  std::size_t index_ = 0;
  SourcePos pos_;
};

}  // namespace

std::vector<Token> tokenize(std::string_view source) { return Lexer(source).run(); }

}  // namespace presto::detail
