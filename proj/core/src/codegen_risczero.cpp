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

#include <fmt/format.h>

#include "codegen_util.hpp"
#include "presto/codegen.hpp"
#include "presto/errors.hpp"

namespace presto {

namespace {

using detail::CodeWriter;
using detail::TypeScopes;

constexpr std::string_view kBackend = "risc_zero";

std::string byte_list(const HexLiteral& hex) {
  std::string out;
  for (std::size_t i = 0; i < hex.bytes.size(); ++i) {
    if (i) out += ", ";
    out += fmt::format("0x{:02x}", hex.bytes[i]);
  }
  return out;
}

int precedence(const Expression& e) {
  if (const auto* b = std::get_if<Binary>(&e.node)) {
    switch (b->op) {
      case BinaryOp::Add:
      case BinaryOp::Sub:
        return 1;
      case BinaryOp::Mul:
      case BinaryOp::Div:
      case BinaryOp::Mod:
        return 2;
      case BinaryOp::Pow:
        return 4;  // emitted as a call
    }
  }
  if (std::holds_alternative<Comparison>(e.node)) return 0;
  return 4;
}

class RustEmitter {
 public:
  RustEmitter(const PrestoProgram& program, const CompilerContext& ctx)
      : program_(program), ctx_(ctx), storage_fns_(detail::storage_functions(ctx)) {
    if (ctx.uses_storage) mapping_ = ctx.storage_mapping();
  }

  EmittedArtifact run() {
    EmittedArtifact out;
    out.backend = BackendId::RiscZero;
    out.files.push_back({"guest/main.rs", guest()});
    out.files.push_back({"host/main.rs", host()});
    return out;
  }

 private:
  std::string type_name(const PrestoType& t) const {
    switch (t.kind) {
      case TypeKind::U64:
        return "u64";
      case TypeKind::Bool:
        return "bool";
      case TypeKind::Bytes:
        return "Vec<u8>";
      case TypeKind::Pubkey:
        return "Pubkey";
      case TypeKind::Secretkey:
        return "Secretkey";
      case TypeKind::Struct:
        return t.struct_name;
      case TypeKind::None:
        return "()";
    }
    return "()";
  }

  std::string param_type(const PrestoType& t) const {
    return t.kind == TypeKind::Bytes ? "&[u8]" : type_name(t);
  }

  std::string map_type() const {
    return fmt::format("BTreeMap<{}, {}>", type_name(mapping_->key_type),
                       type_name(mapping_->value_type));
  }

  // A map handle usable at a call site: owned in main, borrowed in functions.
  std::string map_arg() const {
    return in_function_ ? mapping_->name : "&mut " + mapping_->name;
  }

  std::string hex(const HexLiteral& h, const PrestoType* expected) {
    TypeKind kind = expected ? expected->kind : TypeKind::Bytes;
    switch (kind) {
      case TypeKind::Pubkey:
      case TypeKind::Secretkey:
        if (h.bytes.size() > 32) throw UnsupportedConstruct(std::string(kBackend), "key literal longer than 32 bytes");
        need_to_key_ = true;
        return fmt::format("to_key(&[{}])", byte_list(h));
      case TypeKind::U64:
        if (h.bytes.size() <= 8) return h.canonical();
        throw UnsupportedConstruct(std::string(kBackend), "integer literal wider than 64 bits");
      default:
        return fmt::format("vec![{}]", byte_list(h));
    }
  }

  // Expression coercible to &[u8].
  std::string slice(const Expression& e) {
    if (const auto* h = std::get_if<HexLiteral>(&e.node)) return fmt::format("&[{}u8][..]", h->bytes.empty() ? "" : byte_list(*h));
    return fmt::format("&{}[..]", expr(e, nullptr));
  }

  std::string wrapped(const Expression& e, int parent, bool right) {
    std::string s = expr(e, nullptr);
    int p = precedence(e);
    if (p < parent || (right && p == parent)) return "(" + s + ")";
    return s;
  }

  std::string call(const CustomFunctionCall& c) {
    if (auto b = find_builtin(c.name)) {
      const auto& sig = signature(*b);
      auto arg = [&](std::size_t i) {
        PrestoType t = PrestoType::builtin(sig.params[i]);
        return expr(c.args[i], &t);
      };
      switch (*b) {
        case Builtin::Sha256:
        case Builtin::Keccak256:
        case Builtin::Mimc:
          return fmt::format("{}({})", sig.name, slice(c.args[0]));
        case Builtin::EcdsaVerify:
          return fmt::format("ecdsa_verify(&{}, {}, {})", arg(0), slice(c.args[1]), slice(c.args[2]));
        case Builtin::ExtendVec:
          return fmt::format("[{}, {}].concat()", slice(c.args[0]), slice(c.args[1]));
        case Builtin::GetBalance:
          return fmt::format("{}.get(&{}).cloned().unwrap_or_default()", mapping_->name, arg(0));
        case Builtin::SetBalance:
          return fmt::format("{}.insert({}, {})", mapping_->name, arg(0), arg(1));
      }
    }
    auto f = ctx_.funcs.find(c.name);
    if (f == ctx_.funcs.end()) throw UnsupportedConstruct(std::string(kBackend), "call to unknown function " + c.name);
    std::vector<std::string> args;
    if (storage_fns_.contains(c.name)) args.push_back(map_arg());
    for (std::size_t i = 0; i < c.args.size(); ++i) {
      const PrestoType& t = f->second.params[i].type;
      const Expression& a = c.args[i];
      if (t.kind == TypeKind::Bytes) {
        args.push_back(slice(a));
      } else if (t.kind == TypeKind::Struct &&
                 (std::holds_alternative<Identifier>(a.node) || std::holds_alternative<FieldAccess>(a.node))) {
        args.push_back(expr(a, &t) + ".clone()");
      } else {
        args.push_back(expr(a, &t));
      }
    }
    return fmt::format("{}({})", c.name, fmt::join(args, ", "));
  }

  std::string expr(const Expression& e, const PrestoType* expected) {
    return std::visit(
        Overloaded{
            [&](const IntLiteral& v) { return std::to_string(v.value); },
            [&](const HexLiteral& v) { return hex(v, expected); },
            [&](const BoolLiteral& v) { return std::string(v.value ? "true" : "false"); },
            [&](const Identifier& v) { return v.name; },
            [&](const Binary& v) {
              static const PrestoType u64 = PrestoType::builtin(TypeKind::U64);
              if (v.op == BinaryOp::Pow) {
                std::string exponent = expr(*v.rhs, &u64);
                if (!std::holds_alternative<IntLiteral>(v.rhs->node)) {
                  if (precedence(*v.rhs) < 4) exponent = "(" + exponent + ")";
                  exponent += " as u32";
                }
                return fmt::format("u64::pow({}, {})", expr(*v.lhs, &u64), exponent);
              }
              int p = precedence(e);
              return fmt::format("{} {} {}", wrapped(*v.lhs, p, false), to_string(v.op), wrapped(*v.rhs, p, true));
            },
            [&](const Comparison& v) {
              return fmt::format("{} {} {}", wrapped(*v.lhs, 1, false), to_string(v.op), wrapped(*v.rhs, 1, true));
            },
            [&](const CustomFunctionCall& v) { return call(v); },
            [&](const FieldAccess& v) { return fmt::format("{}.{}", wrapped(*v.target, 4, false), v.field); },
        },
        e.node);
  }

  void block(CodeWriter& w, const Block& b, const std::set<std::string>& mutated) {
    scopes_.push();
    for (const Item& item : b) this->item(w, item, mutated);
    scopes_.pop();
  }

  void item(CodeWriter& w, const Item& it, const std::set<std::string>& mutated) {
    if (const auto* d = item_as<VarDecl>(it)) {
      scopes_.declare(d->name, d->type);
      w.line(fmt::format("let {}{}: {} = {};", mutated.contains(d->name) ? "mut " : "", d->name,
                         type_name(d->type), expr(d->init, &d->type)));
    } else if (const auto* a = item_as<Assignment>(it)) {
      w.line(fmt::format("{} = {};", a->name, expr(a->value, scopes_.find(a->name))));
    } else if (const auto* c = item_as<CallStatement>(it)) {
      w.line(call(c->call) + ";");
    } else if (const auto* r = item_as<Return>(it)) {
      if (r->value) {
        w.line(fmt::format("return {};", expr(*r->value, return_type_)));
      } else {
        w.line("return;");
      }
    } else if (const auto* i = item_as<If>(it)) {
      w.open(fmt::format("if {} {{", expr(i->condition, nullptr)));
      block(w, i->then_block, mutated);
      if (i->else_block) {
        w.middle("} else {");
        block(w, *i->else_block, mutated);
      }
      w.close();
    } else if (const auto* f = item_as<For>(it)) {
      static const PrestoType u64 = PrestoType::builtin(TypeKind::U64);
      w.open(fmt::format("for {} in {}..{} {{", f->var, expr(f->start, &u64), expr(f->end, &u64)));
      scopes_.push();
      scopes_.declare(f->var, u64);
      block(w, f->body, mutated);
      scopes_.pop();
      w.close();
    }
  }

  void function(CodeWriter& w, const FuncDecl& f) {
    std::vector<std::string> params;
    if (storage_fns_.contains(f.name)) params.push_back(fmt::format("{}: &mut {}", mapping_->name, map_type()));
    for (const auto& p : f.params) params.push_back(fmt::format("{}: {}", p.name, param_type(p.type)));
    std::string ret = f.return_type.kind == TypeKind::None ? "" : " -> " + type_name(f.return_type);
    w.open(fmt::format("fn {}({}){} {{", f.name, fmt::join(params, ", "), ret));
    in_function_ = true;
    return_type_ = &f.return_type;
    scopes_.push();
    for (const auto& p : f.params) scopes_.declare(p.name, p.type);
    block(w, f.body, detail::assigned_names(f.body));
    scopes_.pop();
    in_function_ = false;
    return_type_ = nullptr;
    w.close();
  }

  std::string guest() {
    CodeWriter body("    ");
    for (const auto& [name, s] : ctx_.structs) {
      body.line("#[derive(Clone, Debug, Default, serde::Serialize, serde::Deserialize)]");
      body.open(fmt::format("struct {} {{", name));
      for (const auto& field : s.fields) body.line(fmt::format("{}: {},", field.name, type_name(field.type)));
      body.close();
      body.blank();
    }
    for (const Item& it : program_.statements) {
      if (const auto* f = item_as<FuncDecl>(it)) {
        function(body, *f);
        body.blank();
      }
    }

    body.open("fn main() {");
    if (mapping_) {
      body.line(fmt::format("let mut {}: {} = env::read();", mapping_->name, map_type()));
      body.blank();
    }
    scopes_.push();
    auto mutated = detail::assigned_names(program_.statements);
    for (const Item& it : program_.statements) {
      if (item_as<FuncDecl>(it) || item_as<StructDecl>(it) || item_as<MappingDecl>(it)) continue;
      item(body, it, mutated);
    }
    scopes_.pop();
    if (!ctx_.constraints.empty()) body.blank();
    for (const auto& name : ctx_.constraints) body.line(fmt::format("env::commit(&{});", name));
    body.close();

    auto used = detail::used_builtins(program_);
    CodeWriter w("    ");
    w.line(fmt::format("// Generated by prestoc from program `{}`. Do not edit.", program_.name));
    w.line("#![no_main]");
    w.line("#![allow(non_snake_case, unused_mut, unused_variables, dead_code)]");
    w.blank();
    w.line("use risc0_zkvm::guest::env;");
    if (mapping_) w.line("use std::collections::BTreeMap;");
    w.blank();
    w.line("risc0_zkvm::guest::entry!(main);");
    w.blank();
    w.line("type Pubkey = [u8; 32];");
    w.line("type Secretkey = [u8; 32];");
    w.blank();
    if (need_to_key_) {
      w.open("fn to_key(bytes: &[u8]) -> [u8; 32] {");
      w.line("let mut out = [0u8; 32];");
      w.line("out[32 - bytes.len()..].copy_from_slice(bytes);");
      w.line("out");
      w.close();
      w.blank();
    }
    if (used.contains(Builtin::Sha256)) {
      w.open("fn sha256(data: &[u8]) -> Vec<u8> {");
      w.line("use risc0_zkvm::sha::{Impl, Sha256};");
      w.line("Impl::hash_bytes(data).as_bytes().to_vec()");
      w.close();
      w.blank();
    }
    if (used.contains(Builtin::Keccak256)) {
      w.open("fn keccak256(data: &[u8]) -> Vec<u8> {");
      w.line("use tiny_keccak::{Hasher, Keccak};");
      w.line("let mut out = [0u8; 32];");
      w.line("let mut hasher = Keccak::v256();");
      w.line("hasher.update(data);");
      w.line("hasher.finalize(&mut out);");
      w.line("out.to_vec()");
      w.close();
      w.blank();
    }
    if (used.contains(Builtin::Mimc)) {
      w.open("fn mimc(data: &[u8]) -> Vec<u8> {");
      w.line("presto_runtime::mimc(data)");
      w.close();
      w.blank();
    }
    if (used.contains(Builtin::EcdsaVerify)) {
      w.open("fn ecdsa_verify(key: &Pubkey, msg: &[u8], sig: &[u8]) -> bool {");
      w.line("presto_runtime::ecdsa_verify(key, msg, sig)");
      w.close();
      w.blank();
    }
    return w.str() + body.str();
  }

  std::string host() const {
    CodeWriter w("    ");
    w.line(fmt::format("// Generated by prestoc from program `{}`. Do not edit.", program_.name));
    w.line("use methods::{GUEST_ELF, GUEST_ID};");
    w.line("use risc0_zkvm::{default_prover, ExecutorEnv};");
    if (mapping_) {
      w.line("use std::collections::BTreeMap;");
      w.blank();
      w.line("type Pubkey = [u8; 32];");
      w.line("type Secretkey = [u8; 32];");
    }
    w.blank();
    w.open("fn main() {");
    if (mapping_) {
      w.line(fmt::format("let {}: {} = BTreeMap::new();", mapping_->name, map_type()));
      w.blank();
    }
    w.line("let env = ExecutorEnv::builder()");
    if (mapping_) w.line(fmt::format("    .write(&{}).unwrap()", mapping_->name));
    w.line("    .build()");
    w.line("    .unwrap();");
    w.blank();
    w.line("let prover = default_prover();");
    w.line("let receipt = prover.prove(env, GUEST_ELF).unwrap().receipt;");
    w.line("receipt.verify(GUEST_ID).unwrap();");
    w.close();
    return w.str();
  }

  const PrestoProgram& program_;
  const CompilerContext& ctx_;
  std::set<std::string> storage_fns_;
  const MappingDecl* mapping_ = nullptr;
  TypeScopes scopes_;
  const PrestoType* return_type_ = nullptr;
  bool in_function_ = false;
  bool need_to_key_ = false;
};

}  // namespace

EmittedArtifact emit_risczero(const PrestoProgram& program, const CompilerContext& ctx) {
  return RustEmitter(program, ctx).run();
}

}  // namespace presto
