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

#include "presto/context.hpp"

#include <algorithm>
#include <array>
#include <functional>

#include "presto/errors.hpp"

namespace presto {

namespace {

const std::array<BuiltinSignature, 7>& builtin_table() {
  static const std::array<BuiltinSignature, 7> kTable = {{
      {"sha256", Builtin::Sha256, {TypeKind::Bytes}, TypeKind::Bytes},
      {"keccak256", Builtin::Keccak256, {TypeKind::Bytes}, TypeKind::Bytes},
      {"mimc", Builtin::Mimc, {TypeKind::Bytes}, TypeKind::Bytes},
      {"ecdsa_verify", Builtin::EcdsaVerify,
       {TypeKind::Pubkey, TypeKind::Bytes, TypeKind::Bytes}, TypeKind::Bool},
      {"extend_vec", Builtin::ExtendVec, {TypeKind::Bytes, TypeKind::Bytes}, TypeKind::Bytes},
      {"get_balance", Builtin::GetBalance, {TypeKind::Pubkey}, TypeKind::U64},
      {"set_balance", Builtin::SetBalance, {TypeKind::Pubkey, TypeKind::U64}, TypeKind::None},
  }};
  return kTable;
}

}  // namespace

std::optional<Builtin> find_builtin(std::string_view name) {
  for (const auto& sig : builtin_table()) {
    if (sig.name == name) return sig.id;
  }
  return std::nullopt;
}

const BuiltinSignature& signature(Builtin builtin) {
  return builtin_table()[static_cast<std::size_t>(builtin)];
}

bool CompilerContext::is_constraint(std::string_view name) const {
  return std::find(constraints.begin(), constraints.end(), name) != constraints.end();
}

const MappingDecl* CompilerContext::storage_mapping() const {
  return mappings.size() == 1 ? &mappings.begin()->second : nullptr;
}

namespace {

// A name visible in the walker's scope. Parameters record their index so key
// usage can be attributed back to call sites; locals may carry a known key.
struct Binding {
  std::optional<std::size_t> param;
  std::optional<std::string> key;
};

class Scopes {
 public:
  void push() { frames_.emplace_back(); }
  void pop() { frames_.pop_back(); }

  void declare(const std::string& name, Binding b) { frames_.back()[name] = std::move(b); }

  const Binding* find(const std::string& name) const {
    for (auto it = frames_.rbegin(); it != frames_.rend(); ++it) {
      if (auto f = it->find(name); f != it->end()) return &f->second;
    }
    return nullptr;
  }

  // Assignments in an inner block are conditional from the outer scope's
  // point of view, so the outer binding loses its known key.
  void assign(const std::string& name, std::optional<std::string> key) {
    for (auto it = frames_.rbegin(); it != frames_.rend(); ++it) {
      if (auto f = it->find(name); f != it->end()) {
        f->second.param.reset();
        f->second.key = (it == frames_.rbegin()) ? std::move(key) : std::nullopt;
        return;
      }
    }
  }

 private:
  std::vector<std::map<std::string, Binding>> frames_;
};

std::optional<std::string> known_key(const Expression& e, const Scopes& scopes) {
  if (const auto* hex = std::get_if<HexLiteral>(&e.node)) return hex->canonical();
  if (const auto* id = std::get_if<Identifier>(&e.node)) {
    if (const Binding* b = scopes.find(id->name)) return b->key;
  }
  return std::nullopt;
}

using CallVisitor = std::function<void(const CustomFunctionCall&, const Scopes&)>;

// Walks blocks in source order, tracking variable bindings, and reports every
// call site (statement calls and calls nested inside expressions).
class CallWalker {
 public:
  explicit CallWalker(CallVisitor visit) : visit_(std::move(visit)) {}

  void walk_function(const FuncDecl& f) {
    scopes_.push();
    for (std::size_t i = 0; i < f.params.size(); ++i) {
      scopes_.declare(f.params[i].name, Binding{i, std::nullopt});
    }
    walk_block(f.body, /*descend_into_functions=*/false);
    scopes_.pop();
  }

  void walk_global(const Block& block) {
    scopes_.push();
    walk_block(block, /*descend_into_functions=*/true);
    scopes_.pop();
  }

  std::optional<std::string> key_of(const Expression& e) const {
    return known_key(e, scopes_);
  }

 private:
  void walk_block(const Block& block, bool descend_into_functions) {
    for (const Item& item : block) {
      if (const auto* s = std::get_if<Statement>(&item.node)) {
        walk_statement(*s);
        continue;
      }
      std::visit(Overloaded{
                     [&](const If& i) {
                       walk_expr(i.condition);
                       nested(i.then_block);
                       if (i.else_block) nested(*i.else_block);
                     },
                     [&](const For& f) {
                       walk_expr(f.start);
                       walk_expr(f.end);
                       scopes_.push();
                       scopes_.declare(f.var, Binding{});
                       walk_block(f.body, false);
                       scopes_.pop();
                     },
                     [&](const FuncDecl& f) {
                       if (descend_into_functions) {
                         CallWalker inner(visit_);
                         inner.walk_function(f);
                       }
                     },
                     [](const StructDecl&) {},
                 },
                 std::get<Oscs>(item.node));
    }
  }

  void nested(const Block& block) {
    scopes_.push();
    walk_block(block, false);
    scopes_.pop();
  }

  void walk_statement(const Statement& s) {
    std::visit(Overloaded{
                   [&](const VarDecl& d) {
                     walk_expr(d.init);
                     scopes_.declare(d.name, Binding{std::nullopt, key_of(d.init)});
                   },
                   [&](const Assignment& a) {
                     walk_expr(a.value);
                     scopes_.assign(a.name, key_of(a.value));
                   },
                   [&](const CallStatement& c) { walk_call(c.call); },
                   [&](const Return& r) {
                     if (r.value) walk_expr(*r.value);
                   },
                   [](const MappingDecl&) {},
               },
               s);
  }

  void walk_call(const CustomFunctionCall& call) {
    for (const auto& arg : call.args) walk_expr(arg);
    visit_(call, scopes_);
  }

  void walk_expr(const Expression& e) {
    std::visit(Overloaded{
                   [&](const Binary& b) {
                     walk_expr(*b.lhs);
                     walk_expr(*b.rhs);
                   },
                   [&](const Comparison& c) {
                     walk_expr(*c.lhs);
                     walk_expr(*c.rhs);
                   },
                   [&](const CustomFunctionCall& c) { walk_call(c); },
                   [&](const FieldAccess& f) { walk_expr(*f.target); },
                   [](const auto&) {},
               },
               e.node);
  }

  CallVisitor visit_;
  Scopes scopes_;
};

std::optional<std::size_t> param_of(const Expression& e, const Scopes& scopes) {
  if (const auto* id = std::get_if<Identifier>(&e.node)) {
    if (const Binding* b = scopes.find(id->name)) return b->param;
  }
  return std::nullopt;
}

class ContextBuilder {
 public:
  explicit ContextBuilder(const PrestoProgram& program) : program_(program) {}

  CompilerContext build() {
    ctx_.program_name = program_.name;
    register_declarations();
    check_types();
    check_calls();
    collect_keys();
    return std::move(ctx_);
  }

 private:
  void claim(const std::string& name) {
    if (find_builtin(name) || !names_.insert(name).second) throw DuplicateDefinition(name);
  }

  void register_declarations() {
    for (const Item& item : program_.statements) {
      if (const auto* f = item_as<FuncDecl>(item)) {
        claim(f->name);
        ctx_.funcs.emplace(f->name, *f);
        order_.push_back(f);
      } else if (const auto* s = item_as<StructDecl>(item)) {
        claim(s->name);
        ctx_.structs.emplace(s->name, *s);
      } else if (const auto* m = item_as<MappingDecl>(item)) {
        claim(m->name);
        ctx_.mappings.emplace(m->name, *m);
      } else if (const auto* v = item_as<VarDecl>(item)) {
        if (!ctx_.is_constraint(v->name)) ctx_.constraints.push_back(v->name);
      }
    }
  }

  void check_type(const PrestoType& t, bool allow_none, const std::string& where) const {
    if (t.kind == TypeKind::Struct && !ctx_.structs.contains(t.struct_name)) {
      throw ContextError("unknown type '" + t.struct_name + "' in " + where);
    }
    if (t.kind == TypeKind::None && !allow_none) {
      throw ContextError("type None is only valid as a return type (in " + where + ")");
    }
  }

  void check_block_types(const Block& block) const {
    for (const Item& item : block) {
      if (const auto* v = item_as<VarDecl>(item)) {
        check_type(v->type, false, "declaration of '" + v->name + "'");
      } else if (const auto* i = item_as<If>(item)) {
        check_block_types(i->then_block);
        if (i->else_block) check_block_types(*i->else_block);
      } else if (const auto* f = item_as<For>(item)) {
        check_block_types(f->body);
      }
    }
  }

  void check_types() const {
    for (const auto& [name, s] : ctx_.structs) {
      for (const auto& field : s.fields) {
        check_type(field.type, false, "struct " + name);
      }
    }
    for (const auto& [name, m] : ctx_.mappings) {
      check_type(m.key_type, false, "mapping " + name);
      check_type(m.value_type, false, "mapping " + name);
    }
    for (const auto& [name, f] : ctx_.funcs) {
      for (const auto& p : f.params) check_type(p.type, false, "parameter of " + name);
      check_type(f.return_type, true, "return type of " + name);
      check_block_types(f.body);
    }
    check_block_types(program_.statements);
  }

  void check_calls() {
    CallWalker walker([&](const CustomFunctionCall& call, const Scopes&) {
      std::size_t want = 0;
      if (auto b = find_builtin(call.name)) {
        want = signature(*b).params.size();
        if (is_storage_builtin(*b)) {
          ctx_.uses_storage = true;
          if (ctx_.mappings.empty()) {
            throw ContextError(call.name + " requires a mapping declaration");
          }
          if (ctx_.mappings.size() > 1) {
            throw ContextError(call.name + " is ambiguous with more than one mapping declared");
          }
        }
      } else if (auto it = ctx_.funcs.find(call.name); it != ctx_.funcs.end()) {
        want = it->second.params.size();
      } else {
        return;  // unknown callee: reported by the interpreter
      }
      if (call.args.size() != want) {
        throw ContextError("'" + call.name + "' expects " + std::to_string(want) +
                           " argument(s), got " + std::to_string(call.args.size()));
      }
    });
    walker.walk_global(program_.statements);
    if (!ctx_.mappings.empty()) ctx_.uses_storage = true;
  }

  // Indices of arguments that end up as a storage key for each callee.
  std::vector<std::size_t> key_positions(const std::string& callee) const {
    if (auto b = find_builtin(callee)) {
      if (is_storage_builtin(*b)) return {0};
      return {};
    }
    auto it = key_params_.find(callee);
    if (it == key_params_.end()) return {};
    return {it->second.begin(), it->second.end()};
  }

  void collect_keys() {
    // Propagate "this parameter is used as a key" to a fixed point; the sets
    // only grow, so this terminates even on recursive call graphs.
    for (bool changed = true; changed;) {
      changed = false;
      for (const FuncDecl* f : order_) {
        CallWalker walker([&](const CustomFunctionCall& call, const Scopes& scopes) {
          for (std::size_t pos : key_positions(call.name)) {
            if (pos >= call.args.size()) continue;
            if (auto p = param_of(call.args[pos], scopes)) {
              changed |= key_params_[f->name].insert(*p).second;
            }
          }
        });
        walker.walk_function(*f);
      }
    }

    CallWalker collector([&](const CustomFunctionCall& call, const Scopes& scopes) {
      for (std::size_t pos : key_positions(call.name)) {
        if (pos >= call.args.size()) continue;
        std::optional<std::string> key = known_key(call.args[pos], scopes);
        if (key && std::find(ctx_.keys.begin(), ctx_.keys.end(), *key) == ctx_.keys.end()) {
          ctx_.keys.push_back(*key);
        }
      }
    });
    collector.walk_global(program_.statements);
  }

  const PrestoProgram& program_;
  CompilerContext ctx_;
  std::set<std::string> names_;
  std::vector<const FuncDecl*> order_;
  std::map<std::string, std::set<std::size_t>> key_params_;
};

}  // namespace

CompilerContext build_context(const PrestoProgram& program) {
  return ContextBuilder(program).build();
}

}  // namespace presto
