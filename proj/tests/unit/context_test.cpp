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
#include <regex>

#include "presto/context.hpp"
#include "presto/errors.hpp"
#include "presto/parser.hpp"
#include "test_support.hpp"

namespace presto {
namespace {

CompilerContext context_of(std::string_view src) { return build_context(parse_program(src)); }

// Independent oracle: every hex literal in the source text, canonicalized, in
// order of first appearance. Valid when every hex literal is a storage key.
std::vector<std::string> hex_scan(const std::string& src) {
  std::vector<std::string> out;
  std::regex hex("0x([0-9a-fA-F]+)");
  for (auto it = std::sregex_iterator(src.begin(), src.end(), hex); it != std::sregex_iterator(); ++it) {
    std::string digits = (*it)[1];
    if (digits.size() % 2) digits = "0" + digits;
    for (auto& c : digits) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    std::string key = "0x" + digits;
    if (std::find(out.begin(), out.end(), key) == out.end()) out.push_back(key);
  }
  return out;
}

TEST(Context, TokenProgram) {
  auto ctx = context_of(testing::sample("token"));
  EXPECT_EQ(ctx.program_name, "token");
  EXPECT_TRUE(ctx.uses_storage);
  EXPECT_EQ(ctx.keys, (std::vector<std::string>{"0xdeadbeef", "0x0deadbeef1"}));
  EXPECT_EQ(ctx.constraints, (std::vector<std::string>{"bal", "isPositiveBalance"}));
  EXPECT_EQ(ctx.funcs.size(), 2u);
  EXPECT_TRUE(ctx.structs.contains("Token"));
  ASSERT_NE(ctx.storage_mapping(), nullptr);
  EXPECT_EQ(ctx.storage_mapping()->name, "account");
  EXPECT_TRUE(ctx.is_constraint("bal"));
  EXPECT_FALSE(ctx.is_constraint("r2"));
}

TEST(Context, TokenKeysMatchTextScan) {
  auto src = testing::sample("token");
  EXPECT_EQ(context_of(src).keys, hex_scan(src));
}

TEST(Context, MerkleProgramHasNoStorage) {
  auto ctx = context_of(testing::sample("merkle_tree"));
  EXPECT_FALSE(ctx.uses_storage);
  EXPECT_TRUE(ctx.keys.empty());
  EXPECT_EQ(ctx.constraints, (std::vector<std::string>{"leaf1", "leaf2", "leaf3", "leaf4", "merkle_root"}));
}

TEST(Context, KeysFlowThroughNestedCalls) {
  auto ctx = context_of(R"(program p {
    mapping m: (k pubkey => v u64);
    func inner(who: pubkey) -> u64 { return get_balance(who); }
    func outer(a: u64, b: pubkey) -> u64 { return inner(b); }
    let x: u64 = outer(0x01, 0xAB);
    let y: u64 = get_balance(0xab);
    set_balance(0x0c, 3);
  })");
  // 0x01 flows into a non-key parameter.
  EXPECT_EQ(ctx.keys, (std::vector<std::string>{"0xab", "0x0c"}));
}

TEST(Context, LocalAliasesOfKeysAreResolved) {
  auto ctx = context_of(R"(program p {
    mapping m: (k pubkey => v u64);
    let who: pubkey = 0xbeef;
    let v: u64 = get_balance(who);
  })");
  EXPECT_EQ(ctx.keys, (std::vector<std::string>{"0xbeef"}));
}

// Random programs where every hex literal is a key: propagation agrees with
// the text scan.
TEST(ContextProperty, KeysAgreeWithTextScan) {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> digits(1, 10), hexdigit(0, 15), n(1, 8), which(0, 2);
  for (int trial = 0; trial < 200; ++trial) {
    std::string src = "program p {\n mapping m: (k pubkey => v u64);\n"
                      " func put(a: u64, who: pubkey) -> None { set_balance(who, a); }\n"
                      " func peek(who: pubkey) -> u64 { return get_balance(who); }\n";
    for (int s = n(rng); s > 0; --s) {
      std::string key = "0x";
      for (int d = digits(rng); d > 0; --d) key += "0123456789abcdef"[hexdigit(rng)];
      switch (which(rng)) {
        case 0: src += " put(1, " + key + ");\n"; break;
        case 1: src += " let v" + std::to_string(s) + ": u64 = peek(" + key + ");\n"; break;
        default: src += " set_balance(" + key + ", 2);\n"; break;
      }
    }
    src += "}";
    EXPECT_EQ(context_of(src).keys, hex_scan(src)) << src;
  }
}

TEST(Context, DuplicateDefinitions) {
  EXPECT_THROW(context_of("program p { func f() -> None {} func f() -> None {} }"), DuplicateDefinition);
  EXPECT_THROW(context_of("program p { struct S { u64 a; } func S() -> None {} }"), DuplicateDefinition);
  EXPECT_THROW(context_of("program p { func sha256(x: bytes) -> bytes { return x; } }"), DuplicateDefinition);
}

TEST(Context, TypeChecks) {
  EXPECT_THROW(context_of("program p { let x: Missing = 1; }"), ContextError);
  EXPECT_THROW(context_of("program p { func f(a: None) -> None {} }"), ContextError);
  EXPECT_NO_THROW(context_of("program p { struct S { u64 a; } func f(s: S) -> S { return s; } }"));
}

TEST(Context, ArityChecks) {
  EXPECT_THROW(context_of("program p { let h: bytes = sha256(0x01, 0x02); }"), ContextError);
  EXPECT_THROW(context_of("program p { func f(a: u64) -> None {} f(); }"), ContextError);
}

TEST(Context, StorageNeedsExactlyOneMapping) {
  EXPECT_THROW(context_of("program p { let b: u64 = get_balance(0x01); }"), ContextError);
  EXPECT_THROW(context_of("program p { mapping a: (k pubkey => v u64); mapping b: (k pubkey => v u64); "
                          "let x: u64 = get_balance(0x01); }"),
               ContextError);
}

TEST(Context, UnknownCalleeIsLeftToTheInterpreter) {
  EXPECT_NO_THROW(context_of("program p { nope(1); }"));
}

}  // namespace
}  // namespace presto
