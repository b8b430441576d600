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

#include "presto/parser.hpp"

#include <array>
#include <charconv>
#include <set>
#include <string>
#include <utility>

#include "lexer.hpp"
#include "presto/errors.hpp"

namespace presto {
namespace {

using detail::Token;
using detail::TokenKind;

constexpr std::array<std::string_view, 12> kKeywords = {
    "program", "let", "mapping", "func", "if",   "else",
    "for",     "in",  "struct",  "return", "true", "false",
};

bool is_keyword(std::string_view text) {
  for (auto kw : kKeywords) {
    if (kw == text) return true;
  }
  return false;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  PrestoProgram program() {
    expect_keyword("program");
    PrestoProgram out;
    out.name = expect_identifier();
    expect(TokenKind::LBrace);
    out.statements = items(/*top_level=*/true);
    expect(TokenKind::RBrace);
    expect(TokenKind::End);
    return out;
  }

 private:
  // ---- token plumbing -------------------------------------------------------

  const Token& peek(std::size_t ahead = 0) const {
    std::size_t i = index_ + ahead;
    return i < tokens_.size() ? tokens_[i] : tokens_.back();
  }

  const Token& advance() {
    const Token& t = tokens_[index_];
    if (index_ + 1 < tokens_.size()) ++index_;
    return t;
  }

  void note(std::string label) {
    if (expected_at_ != index_) {
      expected_.clear();
      expected_at_ = index_;
    }
    expected_.insert(std::move(label));
  }

  bool check(TokenKind kind) {
    if (peek().kind == kind) return true;
    note(detail::describe(kind));
    return false;
  }

  bool accept(TokenKind kind) {
    if (!check(kind)) return false;
    advance();
    return true;
  }

  bool check_keyword(std::string_view kw) {
    if (peek().kind == TokenKind::Identifier && peek().text == kw) return true;
    note("'" + std::string(kw) + "'");
    return false;
  }

  bool accept_keyword(std::string_view kw) {
    if (!check_keyword(kw)) return false;
    advance();
    return true;
  }

  [[noreturn]] void fail() const {
    const Token& t = peek();
    std::set<std::string> expected;
    if (expected_at_ == index_) expected = expected_;
    std::string found = t.kind == TokenKind::End ? "end of input" : "'" + t.text + "'";
    throw ParseError(t.pos.line, t.pos.column, std::move(expected), std::move(found));
  }

  const Token& expect(TokenKind kind) {
    if (!check(kind)) fail();
    return advance();
  }

  void expect_keyword(std::string_view kw) {
    if (!accept_keyword(kw)) fail();
  }

  std::string expect_identifier() {
    if (peek().kind == TokenKind::Identifier && !is_keyword(peek().text)) {
      return advance().text;
    }
    note("identifier");
    fail();
  }

  class DepthGuard {
   public:
    explicit DepthGuard(Parser& p) : p_(p) {
      if (++p_.depth_ > kMaxNestingDepth) {
        const Token& t = p_.peek();
        throw ParseError(t.pos.line, t.pos.column, "nesting deeper than " +
                                                       std::to_string(kMaxNestingDepth) +
                                                       " levels");
      }
    }
    ~DepthGuard() { --p_.depth_; }
    DepthGuard(const DepthGuard&) = delete;
    DepthGuard& operator=(const DepthGuard&) = delete;

   private:
    Parser& p_;
  };

  // ---- items ----------------------------------------------------------------

  Block items(bool top_level) {
    Block out;
    while (!check(TokenKind::RBrace)) {
      out.push_back(item(top_level));
    }
    return out;
  }

  Block block() {
    DepthGuard guard(*this);
    expect(TokenKind::LBrace);
    Block out = items(/*top_level=*/false);
    expect(TokenKind::RBrace);
    return out;
  }

  Item item(bool top_level) {
    SourcePos pos = peek().pos;
    auto oscs = [&](Oscs o) { return Item{std::move(o), pos}; };
    auto stmt = [&](Statement s) {
      expect(TokenKind::Semicolon);
      return Item{std::move(s), pos};
    };

    if (check_keyword("if")) return oscs(if_stmt());
    if (check_keyword("for")) return oscs(for_stmt());
    if (top_level) {
      if (check_keyword("func")) return oscs(func_decl());
      if (check_keyword("struct")) return oscs(struct_decl());
      if (check_keyword("mapping")) return stmt(mapping_decl());
    }
    if (check_keyword("let")) return stmt(var_decl());
    if (check_keyword("return")) return stmt(return_stmt());

    std::string name = expect_identifier();
    if (accept(TokenKind::Assign)) {
      return stmt(Assignment{std::move(name), expression()});
    }
    if (check(TokenKind::LParen)) {
      return stmt(CallStatement{call_rest(std::move(name))});
    }
    fail();
  }

  If if_stmt() {
    expect_keyword("if");
    expect(TokenKind::LParen);
    Expression cond = expression();
    expect(TokenKind::RParen);
    If out{std::move(cond), block(), std::nullopt};
    if (accept_keyword("else")) out.else_block = block();
    return out;
  }

  For for_stmt() {
    expect_keyword("for");
    std::string var = expect_identifier();
    expect_keyword("in");
    Expression start = expression();
    expect(TokenKind::DotDot);
    Expression end = expression();
    return For{std::move(var), std::move(start), std::move(end), block()};
  }

  FuncDecl func_decl() {
    expect_keyword("func");
    FuncDecl out;
    out.name = expect_identifier();
    expect(TokenKind::LParen);
    if (!check(TokenKind::RParen)) {
      do {
        Param p;
        p.name = expect_identifier();
        expect(TokenKind::Colon);
        p.type = type();
        out.params.push_back(std::move(p));
      } while (accept(TokenKind::Comma));
    }
    expect(TokenKind::RParen);
    expect(TokenKind::Arrow);
    out.return_type = type();
    out.body = block();
    return out;
  }

  StructDecl struct_decl() {
    expect_keyword("struct");
    StructDecl out;
    out.name = expect_identifier();
    expect(TokenKind::LBrace);
    while (!check(TokenKind::RBrace)) {
      StructField f;
      f.type = type();
      f.name = expect_identifier();
      expect(TokenKind::Semicolon);
      out.fields.push_back(std::move(f));
    }
    expect(TokenKind::RBrace);
    return out;
  }

  MappingDecl mapping_decl() {
    expect_keyword("mapping");
    MappingDecl out;
    out.name = expect_identifier();
    expect(TokenKind::Colon);
    expect(TokenKind::LParen);
    out.key_name = expect_identifier();
    out.key_type = type();
    expect(TokenKind::FatArrow);
    out.value_name = expect_identifier();
    out.value_type = type();
    expect(TokenKind::RParen);
    return out;
  }

  VarDecl var_decl() {
    expect_keyword("let");
    VarDecl out;
    out.name = expect_identifier();
    expect(TokenKind::Colon);
    out.type = type();
    expect(TokenKind::Assign);
    out.init = expression();
    return out;
  }

  Return return_stmt() {
    expect_keyword("return");
    if (check(TokenKind::Semicolon)) return Return{};
    return Return{expression()};
  }

  PrestoType type() {
    if (peek().kind == TokenKind::Identifier && !is_keyword(peek().text)) {
      return PrestoType::from_name(advance().text);
    }
    note("type");
    fail();
  }

  // ---- expressions ----------------------------------------------------------

  Expression expression() {
    DepthGuard guard(*this);
    SourcePos pos = peek().pos;
    Expression lhs = additive();
    static constexpr std::array<std::pair<TokenKind, CompareOp>, 6> kOps = {{
        {TokenKind::Gt, CompareOp::Gt},
        {TokenKind::Lt, CompareOp::Lt},
        {TokenKind::Ge, CompareOp::Ge},
        {TokenKind::Le, CompareOp::Le},
        {TokenKind::EqEq, CompareOp::Eq},
        {TokenKind::NotEq, CompareOp::Ne},
    }};
    for (auto [kind, op] : kOps) {
      if (accept(kind)) {
        Expression rhs = additive();
        return Expression{Comparison{op, std::move(lhs), std::move(rhs)}, pos};
      }
    }
    return lhs;
  }

  Expression additive() {
    SourcePos pos = peek().pos;
    Expression lhs = multiplicative();
    for (;;) {
      BinaryOp op;
      if (accept(TokenKind::Plus)) {
        op = BinaryOp::Add;
      } else if (accept(TokenKind::Minus)) {
        op = BinaryOp::Sub;
      } else {
        return lhs;
      }
      Expression rhs = multiplicative();
      lhs = Expression{Binary{op, std::move(lhs), std::move(rhs)}, pos};
    }
  }

  Expression multiplicative() {
    SourcePos pos = peek().pos;
    Expression lhs = power();
    for (;;) {
      BinaryOp op;
      if (accept(TokenKind::Star)) {
        op = BinaryOp::Mul;
      } else if (accept(TokenKind::Slash)) {
        op = BinaryOp::Div;
      } else if (accept(TokenKind::Percent)) {
        op = BinaryOp::Mod;
      } else {
        return lhs;
      }
      Expression rhs = power();
      lhs = Expression{Binary{op, std::move(lhs), std::move(rhs)}, pos};
    }
  }

  // Right-associative: a ** b ** c == a ** (b ** c).
  Expression power() {
    SourcePos pos = peek().pos;
    Expression base = postfix();
    if (accept(TokenKind::StarStar)) {
      DepthGuard guard(*this);
      Expression exponent = power();
      return Expression{Binary{BinaryOp::Pow, std::move(base), std::move(exponent)}, pos};
    }
    return base;
  }

  Expression postfix() {
    SourcePos pos = peek().pos;
    Expression target = primary();
    while (accept(TokenKind::Dot)) {
      target = Expression{FieldAccess{std::move(target), expect_identifier()}, pos};
    }
    return target;
  }

  Expression primary() {
    const Token& t = peek();
    SourcePos pos = t.pos;
    switch (t.kind) {
      case TokenKind::Int: {
        std::uint64_t value = 0;
        auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
        if (ec != std::errc() || ptr != t.text.data() + t.text.size()) {
          throw ParseError(pos.line, pos.column,
                           "integer literal " + t.text + " does not fit in u64");
        }
        advance();
        return Expression{IntLiteral{value}, pos};
      }
      case TokenKind::Hex: {
        auto lit = HexLiteral::from_digits(std::string_view(t.text).substr(2));
        advance();
        return Expression{std::move(lit), pos};
      }
      case TokenKind::LParen: {
        advance();
        Expression inner = expression();
        expect(TokenKind::RParen);
        return inner;
      }
      case TokenKind::Identifier: {
        if (t.text == "true" || t.text == "false") {
          bool value = t.text == "true";
          advance();
          return Expression{BoolLiteral{value}, pos};
        }
        std::string name = expect_identifier();
        if (check(TokenKind::LParen)) {
          return Expression{call_rest(std::move(name)), pos};
        }
        return Expression{Identifier{std::move(name)}, pos};
      }
      default:
        note("expression");
        fail();
    }
  }

  CustomFunctionCall call_rest(std::string name) {
    expect(TokenKind::LParen);
    CustomFunctionCall call{std::move(name), {}};
    if (!check(TokenKind::RParen)) {
      do {
        call.args.push_back(expression());
      } while (accept(TokenKind::Comma));
    }
    expect(TokenKind::RParen);
    return call;
  }

  std::vector<Token> tokens_;
  std::size_t index_ = 0;
  std::size_t depth_ = 0;
  std::set<std::string> expected_;
  std::size_t expected_at_ = static_cast<std::size_t>(-1);
};

}  // namespace

PrestoProgram parse_program(std::string_view source) {
  return Parser(detail::tokenize(source)).program();
}

}  // namespace presto
