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

#include <fstream>
#include <regex>

#include "presto/codegen.hpp"
#include "presto/errors.hpp"
#include "presto/parser.hpp"
#include "test_support.hpp"

namespace presto {
namespace {

struct Compiled {
  PrestoProgram program;
  CompilerContext ctx;
};

Compiled compile(std::string_view src) {
  Compiled c{parse_program(src), {}};
  c.ctx = build_context(c.program);
  return c;
}

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + needle.size())) ++n;
  return n;
}

std::size_t count_regex(const std::string& text, const std::string& pattern) {
  std::regex re(pattern);
  return static_cast<std::size_t>(std::distance(std::sregex_iterator(text.begin(), text.end(), re), std::sregex_iterator()));
}

// Body of the first brace-balanced block that follows `header`.
std::string block_after(const std::string& text, const std::string& header) {
  auto start = text.find(header);
  if (start == std::string::npos) return {};
  auto open = text.find('{', start);
  int depth = 0;
  for (auto i = open; i < text.size(); ++i) {
    if (text[i] == '{') ++depth;
    if (text[i] == '}' && --depth == 0) return text.substr(open + 1, i - open - 1);
  }
  return {};
}

void expect_golden(const std::string& name, const std::string& actual) {
  auto path = testing::golden_path(name);
  if (testing::update_goldens()) {
    std::ofstream(path, std::ios::binary) << actual;
    return;
  }
  ASSERT_TRUE(std::filesystem::exists(path)) << "missing golden " << path << "; rerun with PRESTO_UPDATE_GOLDENS=1";
  EXPECT_EQ(actual, testing::read_text(path)) << "golden mismatch: " << name;
}

// ---- Risc Zero ----------------------------------------------------------------

TEST(RiscZeroCodegen, TokenHostPlumbing) {
  auto c = compile(testing::sample("token"));
  auto art = emit_risczero(c.program, c.ctx);
  EXPECT_EQ(art.backend, BackendId::RiscZero);
  ASSERT_EQ(art.files.size(), 2u);
  const auto* host = art.find("host/main.rs");
  ASSERT_NE(host, nullptr);
  EXPECT_EQ(count(host->content, "BTreeMap::new()"), 1u);
  EXPECT_EQ(count(host->content, "let account: BTreeMap<Pubkey, u64>"), 1u);
  EXPECT_EQ(count(host->content, ".write(&"), 1u);
  EXPECT_EQ(count(host->content, ".write(&account).unwrap()"), 1u);
  EXPECT_NE(host->content.find("let env = ExecutorEnv::builder()"), std::string::npos);
  const auto* guest = art.find("guest/main.rs");
  ASSERT_NE(guest, nullptr);
  EXPECT_NE(guest->content.find("env::read()"), std::string::npos);
}

TEST(RiscZeroCodegen, MerkleGuestHashes) {
  auto c = compile(testing::sample("merkle_tree"));
  auto art = emit_risczero(c.program, c.ctx);
  const auto& guest = art.find("guest/main.rs")->content;
  auto body = block_after(guest, "fn build_hash(");
  EXPECT_EQ(count_regex(body, R"(\bsha256\()"), 3u) << body;
  const auto& host = art.find("host/main.rs")->content;
  EXPECT_EQ(host.find("BTreeMap"), std::string::npos);
  EXPECT_EQ(host.find(".write("), std::string::npos);
}

TEST(RiscZeroCodegen, EmptyProgram) {
  auto c = compile("program empty {}");
  auto art = emit_risczero(c.program, c.ctx);
  EXPECT_EQ(block_after(art.find("guest/main.rs")->content, "fn main()"), "\n");
  const auto& host = art.find("host/main.rs")->content;
  EXPECT_NE(host.find("ExecutorEnv::builder()\n        .build()"), std::string::npos);
  EXPECT_EQ(host.find("BTreeMap"), std::string::npos);
}

TEST(RiscZeroCodegen, StructuralFidelity) {
  for (const char* name : {"token", "merkle_tree"}) {
    auto c = compile(testing::sample(name));
    std::string guest = emit_risczero(c.program, c.ctx).find("guest/main.rs")->content;
    std::size_t helpers = count_regex(guest, R"(\nfn (to_key|sha256|keccak256|mimc|ecdsa_verify)\()");
    EXPECT_EQ(count_regex(guest, R"(\nfn \w+\()") - helpers, c.ctx.funcs.size() + 1) << name;  // + main
    for (const auto& g : c.ctx.constraints) {
      EXPECT_EQ(count_regex(guest, "let (mut )?" + g + ":"), 1u) << g;
      EXPECT_NE(guest.find("env::commit(&" + g + ");"), std::string::npos) << g;
    }
  }
}

TEST(RiscZeroCodegen, StorageFunctionsTakeTheMap) {
  auto c = compile(testing::sample("token"));
  std::string guest = emit_risczero(c.program, c.ctx).find("guest/main.rs")->content;
  EXPECT_NE(guest.find("fn mint(account: &mut BTreeMap<Pubkey, u64>, r0: Pubkey, r1: u64)"), std::string::npos);
  EXPECT_NE(guest.find("mint(&mut account, to_key(&[0xde, 0xad, 0xbe, 0xef]), 10);"), std::string::npos);
  EXPECT_NE(guest.find("let mut isPositiveBalance: bool = false;"), std::string::npos);
}

TEST(RiscZeroCodegen, Operators) {
  auto c = compile("program p { let a: u64 = (1 + 2) * 3 - 4 % 5; let b: u64 = a ** 2 + 2 ** a; let c: bool = a - (b - 1) >= 2; "
                   "for i in 0..3 { if (a != 1) { a = a / 2; } else { b = 0; } } }");
  std::string guest = emit_risczero(c.program, c.ctx).find("guest/main.rs")->content;
  EXPECT_NE(guest.find("let mut a: u64 = (1 + 2) * 3 - 4 % 5;"), std::string::npos) << guest;
  EXPECT_NE(guest.find("u64::pow(a, 2) + u64::pow(2, a as u32)"), std::string::npos) << guest;
  EXPECT_NE(guest.find("let c: bool = a - (b - 1) >= 2;"), std::string::npos) << guest;
  EXPECT_NE(guest.find("for i in 0..3 {"), std::string::npos);
  EXPECT_NE(guest.find("} else {"), std::string::npos);
}

TEST(RiscZeroCodegen, UnknownCallIsUnsupported) {
  auto c = compile("program p { nope(1); }");
  EXPECT_THROW(emit_risczero(c.program, c.ctx), UnsupportedConstruct);
}

// ---- Gnark ------------------------------------------------------------------------

TEST(GnarkCodegen, TokenCircuitStruct) {
  auto c = compile(testing::sample("token"));
  auto art = emit_gnark(c.program, c.ctx);
  ASSERT_EQ(art.files.size(), 1u);
  const auto& go = art.find("circuit/main.go")->content;
  auto fields = block_after(go, "type tokenCircuit struct");
  EXPECT_NE(fields.find("Bal frontend.Variable"), std::string::npos);
  EXPECT_NE(fields.find("IsPositiveBalance frontend.Variable"), std::string::npos);
  EXPECT_NE(fields.find("Keys [2]frontend.Variable"), std::string::npos);
  EXPECT_NE(fields.find("Values [2]frontend.Variable"), std::string::npos);
  EXPECT_EQ(count_regex(fields, R"(\n\t\w+ )"), c.ctx.constraints.size() + 2);
  EXPECT_TRUE(art.warnings.empty());
}

TEST(GnarkCodegen, TokenDefineThreadsTheApi) {
  auto c = compile(testing::sample("token"));
  std::string go = emit_gnark(c.program, c.ctx).find("circuit/main.go")->content;
  auto define = block_after(go, "Define(api frontend.API) error");
  EXPECT_NE(define.find("circuit.mint(api, frontend.Variable(\"0xdeadbeef\"), 10)"), std::string::npos) << define;
  EXPECT_NE(define.find("circuit.transfer(api, "), std::string::npos);
  EXPECT_NE(define.find("if api.Cmp(bal, 1) == 1 {"), std::string::npos);
  EXPECT_NE(define.find("circuit.IsPositiveBalance = isPositiveBalance"), std::string::npos);
  EXPECT_NE(define.find("circuit.Bal = bal"), std::string::npos);
  EXPECT_NE(go.find("func (circuit *tokenCircuit) mint(api frontend.API, r0 frontend.Variable, r1 frontend.Variable)"),
            std::string::npos);
  EXPECT_NE(go.find("keys := [2]frontend.Variable{\"0xdeadbeef\", \"0x0deadbeef1\"}"), std::string::npos);
  EXPECT_NE(go.find("ecc.BN254.ScalarField()"), std::string::npos);
  EXPECT_NE(go.find("groth16.Verify("), std::string::npos);
}

TEST(GnarkCodegen, EmptyProgram) {
  auto c = compile("program empty {}");
  std::string go = emit_gnark(c.program, c.ctx).find("circuit/main.go")->content;
  EXPECT_NE(go.find("type emptyCircuit struct {\n}"), std::string::npos);
  EXPECT_EQ(block_after(go, "Define(api frontend.API) error"), "\n\treturn nil\n");
  EXPECT_EQ(go.find("Keys"), std::string::npos);
}

TEST(GnarkCodegen, KeyLengthLaw) {
  for (int n = 1; n <= 6; ++n) {
    std::string src = "program p { mapping m: (k pubkey => v u64); ";
    for (int i = 0; i < n; ++i) src += "set_balance(0x" + std::to_string(10 + i) + ", 1); ";
    src += "}";
    auto c = compile(src);
    std::string go = emit_gnark(c.program, c.ctx).find("circuit/main.go")->content;
    EXPECT_NE(go.find("Keys [" + std::to_string(n) + "]frontend.Variable"), std::string::npos);
    EXPECT_NE(go.find("Values [" + std::to_string(n) + "]frontend.Variable"), std::string::npos);
  }
}

TEST(GnarkCodegen, CapitalizationLaw) {
  auto c = compile("program p { let alpha: u64 = 1; let Beta: u64 = 2; let _g: u64 = 3; }");
  std::string go = emit_gnark(c.program, c.ctx).find("circuit/main.go")->content;
  for (const auto& [var, field] : std::vector<std::pair<std::string, std::string>>{{"alpha", "Alpha"}, {"Beta", "Beta"}, {"_g", "_g"}}) {
    EXPECT_NE(go.find("\t" + field + " frontend.Variable"), std::string::npos) << field;
    EXPECT_NE(go.find("circuit." + field + " = " + var), std::string::npos) << field;
  }
}

TEST(GnarkCodegen, StorageWithoutKeys) {
  auto c = compile("program p { mapping m: (k pubkey => v u64); }");
  EXPECT_TRUE(c.ctx.uses_storage);
  EXPECT_THROW(emit_gnark(c.program, c.ctx), StorageWithoutKeys);
}

TEST(GnarkCodegen, UnsupportedOperators) {
  auto mod = compile("program p { let a: u64 = 7 % 2; }");
  EXPECT_THROW(emit_gnark(mod.program, mod.ctx), UnsupportedConstruct);
  auto pow = compile("program p { let n: u64 = 3; let a: u64 = 2 ** n; }");
  EXPECT_THROW(emit_gnark(pow.program, pow.ctx), UnsupportedConstruct);
  auto big = compile("program p { let a: u64 = 2 ** 65; }");
  EXPECT_THROW(emit_gnark(big.program, big.ctx), UnsupportedConstruct);
  auto ok = compile("program p { let x: u64 = 5; let a: u64 = x ** 3; }");
  EXPECT_NE(emit_gnark(ok.program, ok.ctx).files[0].content.find("api.Mul(x, x, x)"), std::string::npos);
}

TEST(GnarkCodegen, PlonkEmitsGroth16WithWarning) {
  auto c = compile(testing::sample("token"));
  auto plonk = emit_gnark(c.program, c.ctx, BackendId::GnarkPlonk);
  auto groth = emit_gnark(c.program, c.ctx, BackendId::GnarkGroth16);
  EXPECT_EQ(plonk.backend, BackendId::GnarkPlonk);
  ASSERT_EQ(plonk.warnings.size(), 1u);
  EXPECT_EQ(plonk.files, groth.files);
}

TEST(GnarkCodegen, ComparisonValues) {
  auto c = compile("program p { let a: u64 = 3; let b: bool = a >= 2; let e: bool = a == 3; }");
  std::string go = emit_gnark(c.program, c.ctx).files[0].content;
  EXPECT_NE(go.find("var b frontend.Variable = api.Sub(1, api.IsZero(api.Add(api.Cmp(a, 2), 1)))"), std::string::npos);
  EXPECT_NE(go.find("var e frontend.Variable = api.IsZero(api.Sub(a, 3))"), std::string::npos);
}

// ---- shared ----------------------------------------------------------------------

TEST(Codegen, Deterministic) {
  for (const char* name : {"token", "merkle_tree"}) {
    auto a = compile(testing::sample(name));
    auto b = compile(testing::sample(name));
    EXPECT_EQ(emit_risczero(a.program, a.ctx), emit_risczero(b.program, b.ctx));
    EXPECT_EQ(emit_gnark(a.program, a.ctx), emit_gnark(b.program, b.ctx));
  }
}

TEST(Codegen, Goldens) {
  for (const char* name : {"token", "merkle_tree"}) {
    auto c = compile(testing::sample(name));
    auto rz = emit_risczero(c.program, c.ctx);
    expect_golden(std::string(name) + ".guest.rs", rz.find("guest/main.rs")->content);
    expect_golden(std::string(name) + ".host.rs", rz.find("host/main.rs")->content);
    expect_golden(std::string(name) + ".circuit.go", emit_gnark(c.program, c.ctx).find("circuit/main.go")->content);
  }
}

TEST(Codegen, WriteArtifact) {
  auto dir = std::filesystem::temp_directory_path() / "presto_codegen_write_test";
  std::filesystem::remove_all(dir);
  auto c = compile(testing::sample("token"));
  auto art = emit_for_backend(BackendId::RiscZero, c.program, c.ctx);
  write_artifact(art, dir);
  EXPECT_EQ(testing::read_text(dir / "guest" / "main.rs"), art.find("guest/main.rs")->content);
  EXPECT_TRUE(std::filesystem::exists(dir / "host" / "main.rs"));
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace presto
