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

constexpr std::string_view kBackend = "gnark";
constexpr std::uint64_t kMaxUnrolledPower = 64;

class GoEmitter {
 public:
  GoEmitter(const PrestoProgram& program, const CompilerContext& ctx)
      : program_(program), ctx_(ctx), circuit_(program.name + "Circuit") {}

  EmittedArtifact run(BackendId target) {
    if (ctx_.uses_storage && ctx_.keys.empty()) throw StorageWithoutKeys();
    EmittedArtifact out;
    out.backend = target;
    if (target == BackendId::GnarkPlonk) {
      out.warnings.push_back("Plonk emission is not supported; emitted the Groth16 scaffold");
    }
    out.files.push_back({"circuit/main.go", file()});
    return out;
  }

 private:
  [[noreturn]] void unsupported(const std::string& what) const {
    throw UnsupportedConstruct(std::string(kBackend), what);
  }

  std::string type_name(const PrestoType& t) const {
    return t.kind == TypeKind::Struct ? t.struct_name : "frontend.Variable";
  }

  std::string call(const CustomFunctionCall& c) {
    std::vector<std::string> args{"api"};
    for (const auto& a : c.args) args.push_back(value(a));
    auto joined = fmt::format("{}", fmt::join(args, ", "));
    if (auto b = find_builtin(c.name)) {
      switch (*b) {
        case Builtin::GetBalance:
        case Builtin::SetBalance:
          return fmt::format("circuit.{}({})", c.name, joined);
        case Builtin::Sha256:
          uses_std_ = true;
          return fmt::format("prestostd.Sha256({})", joined);
        case Builtin::Keccak256:
          uses_std_ = true;
          return fmt::format("prestostd.Keccak256({})", joined);
        case Builtin::Mimc:
          uses_std_ = true;
          return fmt::format("prestostd.MiMC({})", joined);
        case Builtin::EcdsaVerify:
          uses_std_ = true;
          return fmt::format("prestostd.EcdsaVerify({})", joined);
        case Builtin::ExtendVec:
          uses_std_ = true;
          return fmt::format("prestostd.ExtendVec({})", joined);
      }
    }
    if (!ctx_.funcs.contains(c.name)) unsupported("call to unknown function " + c.name);
    return fmt::format("circuit.{}({})", c.name, joined);
  }

  std::string power(const Binary& b) {
    const auto* exponent = std::get_if<IntLiteral>(&b.rhs->node);
    if (!exponent) unsupported("** with a non-literal exponent");
    if (exponent->value > kMaxUnrolledPower) unsupported("** with an exponent above 64");
    if (exponent->value == 0) return "1";
    std::string base = value(*b.lhs);
    if (exponent->value == 1) return base;
    std::vector<std::string> factors(exponent->value, base);
    return fmt::format("api.Mul({})", fmt::join(factors, ", "));
  }

  // Comparison as a 0/1 circuit value.
  std::string compare_value(const Comparison& c) {
    std::string a = value(*c.lhs);
    std::string b = value(*c.rhs);
    switch (c.op) {
      case CompareOp::Gt:
        return fmt::format("api.IsZero(api.Sub(api.Cmp({}, {}), 1))", a, b);
      case CompareOp::Lt:
        return fmt::format("api.IsZero(api.Add(api.Cmp({}, {}), 1))", a, b);
      case CompareOp::Ge:
        return fmt::format("api.Sub(1, api.IsZero(api.Add(api.Cmp({}, {}), 1)))", a, b);
      case CompareOp::Le:
        return fmt::format("api.Sub(1, api.IsZero(api.Sub(api.Cmp({}, {}), 1)))", a, b);
      case CompareOp::Eq:
        return fmt::format("api.IsZero(api.Sub({}, {}))", a, b);
      case CompareOp::Ne:
        return fmt::format("api.Sub(1, api.IsZero(api.Sub({}, {})))", a, b);
    }
    return {};
  }

  // Branch condition as a host-level test over an API compare result.
  std::string condition(const Expression& e) {
    const auto* c = std::get_if<Comparison>(&e.node);
    if (!c) return fmt::format("api.Cmp({}, 0) != 0", value(e));
    std::string cmp = fmt::format("api.Cmp({}, {})", value(*c->lhs), value(*c->rhs));
    switch (c->op) {
      case CompareOp::Gt:
        return cmp + " == 1";
      case CompareOp::Lt:
        return cmp + " == -1";
      case CompareOp::Ge:
        return cmp + " != -1";
      case CompareOp::Le:
        return cmp + " != 1";
      case CompareOp::Eq:
        return cmp + " == 0";
      case CompareOp::Ne:
        return cmp + " != 0";
    }
    return cmp;
  }

  std::string value(const Expression& e) {
    return std::visit(
        Overloaded{
            [&](const IntLiteral& v) { return std::to_string(v.value); },
            [&](const HexLiteral& v) { return fmt::format("frontend.Variable(\"{}\")", v.canonical()); },
            [&](const BoolLiteral& v) { return std::string(v.value ? "1" : "0"); },
            [&](const Identifier& v) { return v.name; },
            [&](const Binary& v) -> std::string {
              switch (v.op) {
                case BinaryOp::Add:
                  return fmt::format("api.Add({}, {})", value(*v.lhs), value(*v.rhs));
                case BinaryOp::Sub:
                  return fmt::format("api.Sub({}, {})", value(*v.lhs), value(*v.rhs));
                case BinaryOp::Mul:
                  return fmt::format("api.Mul({}, {})", value(*v.lhs), value(*v.rhs));
                case BinaryOp::Div:
                  return fmt::format("api.Div({}, {})", value(*v.lhs), value(*v.rhs));
                case BinaryOp::Mod:
                  unsupported("% has no field-arithmetic translation");
                case BinaryOp::Pow:
                  return power(v);
              }
              return {};
            },
            [&](const Comparison& v) { return compare_value(v); },
            [&](const CustomFunctionCall& v) { return call(v); },
            [&](const FieldAccess& v) { return fmt::format("{}.{}", value(*v.target), v.field); },
        },
        e.node);
  }

  void block(CodeWriter& w, const Block& b) {
    for (const Item& it : b) item(w, it);
  }

  void item(CodeWriter& w, const Item& it) {
    if (const auto* d = item_as<VarDecl>(it)) {
      w.line(fmt::format("var {} {} = {}", d->name, type_name(d->type), value(d->init)));
    } else if (const auto* a = item_as<Assignment>(it)) {
      w.line(fmt::format("{} = {}", a->name, value(a->value)));
    } else if (const auto* c = item_as<CallStatement>(it)) {
      w.line(call(c->call));
    } else if (const auto* r = item_as<Return>(it)) {
      if (in_define_) {
        w.line("return nil");
      } else if (r->value) {
        w.line("return " + value(*r->value));
      } else {
        w.line("return");
      }
    } else if (const auto* i = item_as<If>(it)) {
      w.open(fmt::format("if {} {{", condition(i->condition)));
      block(w, i->then_block);
      if (i->else_block) {
        w.middle("} else {");
        block(w, *i->else_block);
      }
      w.close();
    } else if (const auto* f = item_as<For>(it)) {
      w.open(fmt::format("for {0} := {1}; {0} < {2}; {0}++ {{", f->var, value(f->start), value(f->end)));
      block(w, f->body);
      w.close();
    }
  }

  void function(CodeWriter& w, const FuncDecl& f) {
    std::vector<std::string> params{"api frontend.API"};
    for (const auto& p : f.params) params.push_back(fmt::format("{} {}", p.name, type_name(p.type)));
    std::string ret = f.return_type.kind == TypeKind::None ? "" : " " + type_name(f.return_type);
    w.open(fmt::format("func (circuit *{}) {}({}){} {{", circuit_, f.name, fmt::join(params, ", "), ret));
    block(w, f.body);
    w.close();
  }

  void storage_helpers(CodeWriter& w) const {
    w.open(fmt::format("func (circuit *{}) get_balance(api frontend.API, key frontend.Variable) frontend.Variable {{", circuit_));
    w.line("var result frontend.Variable = 0");
    w.open("for i := 0; i < len(circuit.Keys); i++ {");
    w.line("result = api.Select(api.IsZero(api.Sub(circuit.Keys[i], key)), circuit.Values[i], result)");
    w.close();
    w.line("return result");
    w.close();
    w.blank();
    w.open(fmt::format("func (circuit *{}) set_balance(api frontend.API, key frontend.Variable, value frontend.Variable) {{", circuit_));
    w.open("for i := 0; i < len(circuit.Keys); i++ {");
    w.line("circuit.Values[i] = api.Select(api.IsZero(api.Sub(circuit.Keys[i], key)), value, circuit.Values[i])");
    w.close();
    w.close();
    w.blank();
  }

  void main_func(CodeWriter& w) const {
    std::size_t n = ctx_.keys.size();
    w.open("func main() {");
    w.line(fmt::format("var circuit {}", circuit_));
    std::vector<std::string> init;
    for (const auto& name : ctx_.constraints) init.push_back(detail::capitalize(name) + ": 0");
    if (ctx_.uses_storage) {
      std::vector<std::string> keys;
      for (const auto& k : ctx_.keys) keys.push_back(fmt::format("\"{}\"", k));
      std::vector<std::string> zeros(n, "0");
      w.line(fmt::format("keys := [{}]frontend.Variable{{{}}}", n, fmt::join(keys, ", ")));
      w.line(fmt::format("values := [{}]frontend.Variable{{{}}}", n, fmt::join(zeros, ", ")));
      init.push_back("Keys: keys");
      init.push_back("Values: values");
    }
    w.line(fmt::format("assignment := &{}{{{}}}", circuit_, fmt::join(init, ", ")));
    w.blank();
    w.line("witness, err := frontend.NewWitness(assignment, ecc.BN254.ScalarField())");
    w.line("check(err)");
    w.line("publicWitness, err := witness.Public()");
    w.line("check(err)");
    w.blank();
    w.line("ccs, err := frontend.Compile(ecc.BN254.ScalarField(), r1cs.NewBuilder, &circuit)");
    w.line("check(err)");
    w.line("pk, vk, err := groth16.Setup(ccs)");
    w.line("check(err)");
    w.line("proof, err := groth16.Prove(ccs, pk, witness)");
    w.line("check(err)");
    w.line("check(groth16.Verify(proof, vk, publicWitness))");
    w.close();
    w.blank();
    w.open("func check(err error) {");
    w.open("if err != nil {");
    w.line("panic(err)");
    w.close();
    w.close();
  }

  std::string file() {
    CodeWriter body("\t");
    for (const auto& [name, s] : ctx_.structs) {
      body.open(fmt::format("type {} struct {{", name));
      for (const auto& field : s.fields) body.line(fmt::format("{} {}", field.name, type_name(field.type)));
      body.close();
      body.blank();
    }

    body.open(fmt::format("type {} struct {{", circuit_));
    for (const auto& name : ctx_.constraints) {
      body.line(fmt::format("{} frontend.Variable `gnark:\",public\"`", detail::capitalize(name)));
    }
    if (ctx_.uses_storage) {
      body.line(fmt::format("Keys [{}]frontend.Variable", ctx_.keys.size()));
      body.line(fmt::format("Values [{}]frontend.Variable", ctx_.keys.size()));
    }
    body.close();
    body.blank();

    if (ctx_.uses_storage) storage_helpers(body);
    for (const Item& it : program_.statements) {
      if (const auto* f = item_as<FuncDecl>(it)) {
        function(body, *f);
        body.blank();
      }
    }

    body.open(fmt::format("func (circuit *{}) Define(api frontend.API) error {{", circuit_));
    in_define_ = true;
    for (const Item& it : program_.statements) {
      if (item_as<FuncDecl>(it) || item_as<StructDecl>(it) || item_as<MappingDecl>(it)) continue;
      item(body, it);
    }
    in_define_ = false;
    if (!ctx_.constraints.empty()) body.blank();
    for (const auto& name : ctx_.constraints) {
      body.line(fmt::format("circuit.{} = {}", detail::capitalize(name), name));
    }
    body.line("return nil");
    body.close();
    body.blank();
    main_func(body);

    CodeWriter w("\t");
    w.line(fmt::format("// Code generated by prestoc from program {}. DO NOT EDIT.", program_.name));
    w.line("package main");
    w.blank();
    w.open("import (");
    if (uses_std_) w.line("\"presto/prestostd\"");
    if (uses_std_) w.blank();
    w.line("\"github.com/consensys/gnark-crypto/ecc\"");
    w.line("\"github.com/consensys/gnark/backend/groth16\"");
    w.line("\"github.com/consensys/gnark/frontend\"");
    w.line("\"github.com/consensys/gnark/frontend/cs/r1cs\"");
    w.close(")");
    w.blank();
    return w.str() + body.str();
  }

  const PrestoProgram& program_;
  const CompilerContext& ctx_;
  std::string circuit_;
  bool in_define_ = false;
  bool uses_std_ = false;
};

}  // namespace

EmittedArtifact emit_gnark(const PrestoProgram& program, const CompilerContext& ctx, BackendId target) {
  return GoEmitter(program, ctx).run(target);
}

}  // namespace presto
