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

#include "presto/context.hpp"
#include "presto/errors.hpp"
#include "presto/interpreter.hpp"
#include "presto/parser.hpp"
#include "test_support.hpp"

namespace presto {
namespace {

UsageTable run(std::string_view src) {
  auto program = parse_program(src);
  auto ctx = build_context(program);
  return interpret(ctx, program);
}

TEST(Interpreter, TokenMatchesPublishedProfile) {
  auto usage = run(testing::sample("token"));
  EXPECT_EQ(usage.to_json(), R"({"int_ops": 6, "get_balance": 7, "set_balance": 6})");
}

TEST(Interpreter, TokenPerFunctionTables) {
  auto program = parse_program(testing::sample("token"));
  auto ctx = build_context(program);
  auto profile = profile_program(ctx, program);
  const auto& mint = profile.functions.at("mint").table;
  EXPECT_EQ(mint.count(UsageKey::IntOps), 1u);
  EXPECT_EQ(mint.count(UsageKey::GetBalance), 1u);
  EXPECT_EQ(mint.count(UsageKey::SetBalance), 1u);
  const auto& transfer = profile.functions.at("transfer").table;
  EXPECT_EQ(transfer.count(UsageKey::IntOps), 2u);
  EXPECT_EQ(transfer.count(UsageKey::GetBalance), 2u);
  EXPECT_EQ(transfer.count(UsageKey::SetBalance), 2u);
  EXPECT_TRUE(profile.uses_storage);
}

// Hand expansion: build_hash = 3 sha256, build_merkle_root = 3 * 3, one global
// call = 9 more.
TEST(Interpreter, MerkleHandExpansion) {
  auto usage = run(testing::sample("merkle_tree"));
  EXPECT_EQ(usage.to_json(), R"({"sha256": 21})");
  EXPECT_EQ(usage.count(UsageKey::IntOps), 0u);
}

TEST(Interpreter, EmptyProgram) {
  auto program = parse_program("program empty {}");
  auto ctx = build_context(program);
  auto usage = interpret(ctx, program);
  EXPECT_TRUE(usage.empty());
  EXPECT_EQ(usage.to_json(), "{}");
  EXPECT_FALSE(ctx.uses_storage);
}

TEST(Interpreter, ComparisonsAreFree) {
  EXPECT_TRUE(run("program p { let b: bool = 1 < 2; }").empty());
}

TEST(Interpreter, BranchesAreBothCounted) {
  auto usage = run("program p { let x: u64 = 1; if (x > 0) { x = x + 1; } else { x = x * 2 * 3; } }");
  EXPECT_EQ(usage.count(UsageKey::IntOps), 3u);
}

TEST(Interpreter, LiteralLoopsMultiply) {
  EXPECT_EQ(run("program p { let x: u64 = 0; for i in 2..7 { x = x + i; } }").count(UsageKey::IntOps), 5u);
  EXPECT_EQ(run("program p { let x: u64 = 0; for i in 7..2 { x = x + i; } }").count(UsageKey::IntOps), 0u);
  // Non-literal bounds: body counted once.
  EXPECT_EQ(run("program p { let n: u64 = 4; let x: u64 = 0; for i in 0..n { x = x + i; } }").count(UsageKey::IntOps),
            1u);
}

TEST(Interpreter, ExtendVecIsFree) {
  auto usage = run("program p { let a: bytes = extend_vec(0x01, 0x02); let h: bytes = keccak256(a); }");
  EXPECT_EQ(usage.to_json(), R"({"keccak256": 1})");
}

TEST(Interpreter, AllBuiltinKinds) {
  auto usage = run(R"(program p {
    mapping m: (k pubkey => v u64);
    let a: bytes = sha256(0x01);
    let b: bytes = keccak256(0x01);
    let c: bytes = mimc(0x01);
    let d: bool = ecdsa_verify(0x02, 0x03, 0x04);
    let e: u64 = get_balance(0x05);
    set_balance(0x05, e + 1);
  })");
  EXPECT_EQ(usage.to_json(),
            R"({"int_ops": 1, "sha256": 1, "keccak256": 1, "mimc": 1, "ecdsa": 1, "get_balance": 1, "set_balance": 1})");
}

TEST(Interpreter, Recursion) {
  EXPECT_THROW(run("program p { func f(x: u64) -> u64 { return f(x); } }"), RecursionUnsupported);
  try {
    run("program p { func a() -> None { b(); } func b() -> None { a(); } }");
    FAIL();
  } catch (const RecursionUnsupported& e) {
    EXPECT_GE(e.cycle().size(), 2u);
  }
}

TEST(Interpreter, UnknownFunction) {
  try {
    run("program p { nope(1); }");
    FAIL();
  } catch (const UnknownFunction& e) {
    EXPECT_EQ(e.name(), "nope");
  }
}

TEST(Interpreter, CountsSaturate) {
  std::string src = "program p { let x: u64 = 0; for i in 0..18446744073709551615 { "
                    "for j in 0..18446744073709551615 { x = x + 1; } } }";
  EXPECT_EQ(run(src).count(UsageKey::IntOps), UINT64_MAX);
}

TEST(Interpreter, Deterministic) {
  auto src = testing::sample("token");
  EXPECT_EQ(run(src), run(src));
}

// total = (1 + call sites) * table(f) for a function body with a random mix of
// operations.
TEST(InterpreterProperty, LinearInDuplicatedCallSites) {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> ops(0, 6), sites(0, 12);
  for (int trial = 0; trial < 100; ++trial) {
    int adds = ops(rng), hashes = ops(rng), keccaks = ops(rng);
    std::string body = "let acc: u64 = 0;";
    for (int i = 0; i < adds; ++i) body += " acc = acc + 1;";
    for (int i = 0; i < hashes; ++i) body += " let h" + std::to_string(i) + ": bytes = sha256(x);";
    for (int i = 0; i < keccaks; ++i) body += " let k" + std::to_string(i) + ": bytes = keccak256(x);";
    int n = sites(rng);
    std::string src = "program p { func f(x: bytes) -> None { " + body + " } ";
    for (int i = 0; i < n; ++i) src += "f(0x01); ";
    src += "}";
    auto usage = run(src);
    std::uint64_t factor = static_cast<std::uint64_t>(n) + 1;
    EXPECT_EQ(usage.count(UsageKey::IntOps), factor * adds) << src;
    EXPECT_EQ(usage.count(UsageKey::Sha256), factor * hashes) << src;
    EXPECT_EQ(usage.count(UsageKey::Keccak256), factor * keccaks) << src;
  }
}

// Adding a statement never lowers any count.
TEST(InterpreterProperty, MonotoneUnderAppendedStatements) {
  const std::vector<std::string> extras = {"let a: u64 = 1 + 2;", "let h: bytes = sha256(0x01);", "g();",
                                           "for i in 0..3 { let z: u64 = i * 2; }", "let b: bool = 1 > 2;"};
  std::string base = "program p { func g() -> None { let q: bytes = mimc(0x01); } ";
  UsageTable prev = run(base + "}");
  for (const auto& e : extras) {
    base += e + " ";
    UsageTable next = run(base + "}");
    for (int k = 0; k < static_cast<int>(kUsageKeyCount); ++k) {
      EXPECT_GE(next.count(static_cast<UsageKey>(k)), prev.count(static_cast<UsageKey>(k)));
    }
    prev = next;
  }
}

TEST(UsageTable, JsonAndArithmetic) {
  UsageTable t;
  t.add(UsageKey::SetBalance, 2);
  t.add(UsageKey::IntOps);
  EXPECT_EQ(t.to_json(), R"({"int_ops": 1, "set_balance": 2})");
  auto s = t.scaled(3);
  EXPECT_EQ(s.count("set_balance"), 6u);
  s.merge(t);
  EXPECT_EQ(s.count(UsageKey::IntOps), 4u);
  EXPECT_EQ(t.scaled(0).to_json(), "{}");
  UsageTable big;
  big.add(UsageKey::Mimc, UINT64_MAX);
  big.add(UsageKey::Mimc, 5);
  EXPECT_EQ(big.count(UsageKey::Mimc), UINT64_MAX);
  EXPECT_EQ(big.scaled(2).count(UsageKey::Mimc), UINT64_MAX);
}

}  // namespace
}  // namespace presto
