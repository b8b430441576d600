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

#include <gtest/gtest.h>

#include <random>

#include "presto/errors.hpp"
#include "presto/parser.hpp"
#include "test_support.hpp"

namespace presto {
namespace {

const Expression& global_init(const PrestoProgram& p, std::size_t i) {
  return item_as<VarDecl>(p.statements.at(i))->init;
}

TEST(Parser, EmptyProgram) {
  auto p = parse_program("program empty {}");
  EXPECT_EQ(p.name, "empty");
  EXPECT_TRUE(p.statements.empty());
}

TEST(Parser, TokenSampleShape) {
  auto p = parse_program(testing::sample("token"));
  EXPECT_EQ(p.name, "token");
  ASSERT_EQ(p.statements.size(), 9u);
  EXPECT_NE(item_as<MappingDecl>(p.statements[0]), nullptr);
  const auto* s = item_as<StructDecl>(p.statements[1]);
  ASSERT_NE(s, nullptr);
  ASSERT_EQ(s->fields.size(), 2u);
  EXPECT_EQ(s->fields[0].type.kind, TypeKind::Secretkey);
  EXPECT_EQ(s->fields[1].name, "amount");
  const auto* mint = item_as<FuncDecl>(p.statements[2]);
  ASSERT_NE(mint, nullptr);
  EXPECT_EQ(mint->name, "mint");
  EXPECT_EQ(mint->return_type.kind, TypeKind::None);
  ASSERT_EQ(mint->params.size(), 2u);
  EXPECT_EQ(mint->params[0].type.kind, TypeKind::Pubkey);
  const auto* m = item_as<MappingDecl>(p.statements[0]);
  EXPECT_EQ(m->name, "account");
  EXPECT_EQ(m->key_name, "owner");
  EXPECT_EQ(m->value_type.kind, TypeKind::U64);
  EXPECT_NE(item_as<If>(p.statements[8]), nullptr);
}

TEST(Parser, Deterministic) {
  auto src = testing::sample("merkle_tree");
  EXPECT_EQ(parse_program(src), parse_program(src));
}

TEST(Parser, PrecedenceAndAssociativity) {
  auto p = parse_program("program p { let a: u64 = 1 + 2 * 3; let b: u64 = 10 - 4 - 3; let c: u64 = 2 ** 3 ** 2; }");
  const auto& a = std::get<Binary>(global_init(p, 0).node);
  EXPECT_EQ(a.op, BinaryOp::Add);
  EXPECT_EQ(std::get<Binary>(a.rhs->node).op, BinaryOp::Mul);
  const auto& b = std::get<Binary>(global_init(p, 1).node);
  EXPECT_EQ(b.op, BinaryOp::Sub);
  EXPECT_TRUE(std::holds_alternative<Binary>(b.lhs->node));  // (10 - 4) - 3
  EXPECT_TRUE(std::holds_alternative<IntLiteral>(b.rhs->node));
  const auto& c = std::get<Binary>(global_init(p, 2).node);
  EXPECT_EQ(c.op, BinaryOp::Pow);
  EXPECT_TRUE(std::holds_alternative<IntLiteral>(c.lhs->node));  // 2 ** (3 ** 2)
  EXPECT_TRUE(std::holds_alternative<Binary>(c.rhs->node));
}

TEST(Parser, ComparisonBindsLooserThanArithmetic) {
  auto p = parse_program("program p { let a: bool = 1 + 2 >= 3 * 4; }");
  const auto& c = std::get<Comparison>(global_init(p, 0).node);
  EXPECT_EQ(c.op, CompareOp::Ge);
  EXPECT_EQ(std::get<Binary>(c.lhs->node).op, BinaryOp::Add);
  EXPECT_EQ(std::get<Binary>(c.rhs->node).op, BinaryOp::Mul);
}

TEST(Parser, ComparisonIsNonAssociative) {
  EXPECT_THROW(parse_program("program p { let a: bool = 1 < 2 < 3; }"), ParseError);
}

TEST(Parser, HexLiteralsPadOddNibbles) {
  auto p = parse_program("program p { let a: bytes = 0x12345; let b: bytes = 0xdeadbeef1; }");
  EXPECT_EQ(std::get<HexLiteral>(global_init(p, 0).node).canonical(), "0x012345");
  EXPECT_EQ(std::get<HexLiteral>(global_init(p, 1).node).canonical(), "0x0deadbeef1");
}

TEST(Parser, IntegerBounds) {
  auto p = parse_program("program p { let a: u64 = 18446744073709551615; }");
  EXPECT_EQ(std::get<IntLiteral>(global_init(p, 0).node).value, UINT64_MAX);
  EXPECT_THROW(parse_program("program p { let a: u64 = 18446744073709551616; }"), ParseError);
}

TEST(Parser, FieldAccessAndCalls) {
  auto p = parse_program("program p { let a: u64 = f(x, g()).amount; }");
  const auto& fa = std::get<FieldAccess>(global_init(p, 0).node);
  EXPECT_EQ(fa.field, "amount");
  const auto& call = std::get<CustomFunctionCall>(fa.target->node);
  EXPECT_EQ(call.name, "f");
  ASSERT_EQ(call.args.size(), 2u);
}

TEST(Parser, ForAndElse) {
  auto p = parse_program("program p { for i in 0..10 { x = i; } if (a == b) { } else { y = 1; } }");
  const auto* f = item_as<For>(p.statements[0]);
  ASSERT_NE(f, nullptr);
  EXPECT_EQ(f->var, "i");
  EXPECT_EQ(std::get<IntLiteral>(f->end.node).value, 10u);
  const auto* i = item_as<If>(p.statements[1]);
  ASSERT_NE(i, nullptr);
  ASSERT_TRUE(i->else_block.has_value());
  EXPECT_EQ(i->else_block->size(), 1u);
}

TEST(Parser, CommentsAreSkipped) {
  auto p = parse_program("// head\nprogram p { /* a\n b */ let x: u64 = 1; // tail\n}");
  EXPECT_EQ(p.statements.size(), 1u);
  EXPECT_THROW(parse_program("program p { /* open "), ParseError);
}

TEST(Parser, SourcePositions) {
  auto p = parse_program("program p {\n  let x: u64 = 1;\n    return;\n}");
  EXPECT_EQ(p.statements[0].pos, (SourcePos{2, 3}));
  EXPECT_EQ(p.statements[1].pos, (SourcePos{3, 5}));
}

TEST(Parser, MissingSemicolonReportsExpectedSet) {
  try {
    parse_program("program p {\n  let x: u64 = 1\n}");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_EQ(e.column(), 1u);
    EXPECT_TRUE(e.expected().contains("';'")) << e.what();
    EXPECT_NE(std::string(e.what()).find("found"), std::string::npos);
  }
}

TEST(Parser, DeclarationsOnlyAtTopLevel) {
  EXPECT_THROW(parse_program("program p { func f() -> None { func g() -> None { } } }"), ParseError);
  EXPECT_THROW(parse_program("program p { if (a) { mapping m: (k pubkey => v u64); } }"), ParseError);
}

TEST(Parser, RejectsMalformedInput) {
  for (const char* src : {"", "program", "program p", "program p {", "program p { } extra", "program p { let : u64 = 1; }",
                          "program p { let x u64 = 1; }", "program p { x = ; }", "program p { @ }",
                          "program p { for i in 0 { } }", "program p { f(1,); }", "program p { let x: u64 = (1; }"}) {
    EXPECT_THROW(parse_program(src), ParseError) << src;
  }
}

TEST(Parser, NestingLimitIsAnError) {
  std::string deep = "program p { let x: u64 = " + std::string(10000, '(') + "1" + std::string(10000, ')') + "; }";
  EXPECT_THROW(parse_program(deep), ParseError);
  std::string blocks = "program p { ";
  for (int i = 0; i < 5000; ++i) blocks += "if (a) { ";
  EXPECT_THROW(parse_program(blocks), ParseError);
}

// Random token soup: the parser must either succeed or throw ParseError.
TEST(ParserFuzz, RandomTokenCorpusNeverCrashes) {
  const std::vector<std::string> vocab = {
      "program", "p", "x", "{", "}", "(", ")", ";", ":", ",", ".", "..", "->", "=>", "=", "+", "-", "*", "**",
      "/", "%", ">", "<", ">=", "<=", "==", "!=", "let", "func", "if", "else", "for", "in", "struct",
      "mapping", "return", "true", "false", "u64", "bytes", "0xab", "0x1", "42", "sha256", "@", "/*", "*/", "//"};
  std::mt19937_64 rng(20240917);
  std::uniform_int_distribution<std::size_t> pick(0, vocab.size() - 1);
  std::uniform_int_distribution<int> len(0, 40);
  int accepted = 0;
  for (int i = 0; i < 10000; ++i) {
    std::string src = i % 2 ? "program p { " : "";
    for (int n = len(rng); n > 0; --n) src += vocab[pick(rng)] + " ";
    if (i % 4 == 1) src += "}";
    try {
      parse_program(src);
      ++accepted;
    } catch (const ParseError&) {
    } catch (const std::exception& e) {
      FAIL() << "non-ParseError exception " << e.what() << " on: " << src;
    }
  }
  SUCCEED() << accepted << " inputs accepted";
}

TEST(ParserFuzz, RandomBytesNeverCrash) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> byte(0, 255);
  for (int i = 0; i < 2000; ++i) {
    std::string src = "program p { ";
    for (int n = 0; n < 64; ++n) src += static_cast<char>(byte(rng));
    try {
      parse_program(src);
    } catch (const ParseError&) {
    }
  }
}

}  // namespace
}  // namespace presto
