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

#include "presto/interpreter.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <vector>

#include "presto/errors.hpp"

namespace presto {
namespace {

std::optional<UsageKey> builtin_usage(Builtin b) {
  switch (b) {
    case Builtin::Sha256: return UsageKey::Sha256;
    case Builtin::Keccak256: return UsageKey::Keccak256;
    case Builtin::Mimc: return UsageKey::Mimc;
    case Builtin::EcdsaVerify: return UsageKey::Ecdsa;
    case Builtin::GetBalance: return UsageKey::GetBalance;
    case Builtin::SetBalance: return UsageKey::SetBalance;
    case Builtin::ExtendVec: return std::nullopt;
  }
  return std::nullopt;
}

void collect_callees(const Block& block, const CompilerContext& ctx, std::set<std::string>& out) {
  for_each_call(block, [&](const CustomFunctionCall& call) {
    if (find_builtin(call.name)) return;
    if (!ctx.funcs.contains(call.name)) throw UnknownFunction(call.name);
    out.insert(call.name);
  });
}

class Profiler {
 public:
  Profiler(const CompilerContext& ctx, const PrestoProgram& program)
      : ctx_(ctx), program_(program) {}

  ProgramProfile run() {
    build_call_graph();
    check_acyclic();

    ProgramProfile out;
    for (const Item& item : program_.statements) {
      if (const auto* f = item_as<FuncDecl>(item)) {
        const UsageTable& t = table_of(f->name);
        out.total.merge(t);
        out.functions[f->name] = FunctionProfile{
            f->name, t, t.contains(UsageKey::GetBalance) || t.contains(UsageKey::SetBalance)};
      }
    }
    out.total.merge(count_block(program_.statements));
    out.uses_storage = out.total.contains(UsageKey::GetBalance) ||
                       out.total.contains(UsageKey::SetBalance) || !ctx_.mappings.empty();
    return out;
  }

 private:
  void build_call_graph() {
    std::set<std::string> global;
    collect_callees(program_.statements, ctx_, global);
    for (const auto& [name, f] : ctx_.funcs) {
      collect_callees(f.body, ctx_, graph_[name]);
    }
  }

  void check_acyclic() {
    enum class Mark { None, Active, Done };
    std::map<std::string, Mark> marks;
    std::vector<std::string> stack;

    std::function<void(const std::string&)> dfs = [&](const std::string& f) {
      marks[f] = Mark::Active;
      stack.push_back(f);
      for (const auto& g : graph_[f]) {
        if (marks[g] == Mark::Active) {
          auto from = std::find(stack.begin(), stack.end(), g);
          std::vector<std::string> cycle(from, stack.end());
          cycle.push_back(g);
          throw RecursionUnsupported(std::move(cycle));
        }
        if (marks[g] == Mark::None) dfs(g);
      }
      stack.pop_back();
      marks[f] = Mark::Done;
    };
    for (const auto& [name, _] : ctx_.funcs) {
      if (marks[name] == Mark::None) dfs(name);
    }
  }

  const UsageTable& table_of(const std::string& name) {
    if (auto it = memo_.find(name); it != memo_.end()) return it->second;
    UsageTable t = count_block(ctx_.funcs.at(name).body);
    return memo_.emplace(name, t).first->second;
  }

  UsageTable count_block(const Block& block) {
    UsageTable t;
    for (const Item& item : block) {
      if (const auto* s = std::get_if<Statement>(&item.node)) {
        std::visit(Overloaded{
                       [&](const VarDecl& d) { t.merge(count_expr(d.init)); },
                       [&](const Assignment& a) { t.merge(count_expr(a.value)); },
                       [&](const CallStatement& c) { t.merge(count_call(c.call)); },
                       [&](const Return& r) {
                         if (r.value) t.merge(count_expr(*r.value));
                       },
                       [](const MappingDecl&) {},
                   },
                   *s);
        continue;
      }
      std::visit(Overloaded{
                     [&](const If& i) {
                       t.merge(count_expr(i.condition));
                       t.merge(count_block(i.then_block));
                       if (i.else_block) t.merge(count_block(*i.else_block));
                     },
                     [&](const For& f) {
                       t.merge(count_expr(f.start));
                       t.merge(count_expr(f.end));
                       t.merge(count_block(f.body).scaled(trip_count(f)));
                     },
                     // Function bodies are counted through table_of.
                     [](const FuncDecl&) {},
                     [](const StructDecl&) {},
                 },
                 std::get<Oscs>(item.node));
    }
    return t;
  }

  static std::uint64_t trip_count(const For& f) {
    const auto* lo = std::get_if<IntLiteral>(&f.start.node);
    const auto* hi = std::get_if<IntLiteral>(&f.end.node);
    if (lo == nullptr || hi == nullptr) return 1;
    return hi->value > lo->value ? hi->value - lo->value : 0;
  }

  UsageTable count_call(const CustomFunctionCall& call) {
    UsageTable t;
    for (const auto& arg : call.args) t.merge(count_expr(arg));
    if (auto b = find_builtin(call.name)) {
      if (auto key = builtin_usage(*b)) t.add(*key);
    } else {
      t.merge(table_of(call.name));
    }
    return t;
  }

  UsageTable count_expr(const Expression& e) {
    UsageTable t;
    std::visit(Overloaded{
                   [&](const Binary& b) {
                     t.add(UsageKey::IntOps);
                     t.merge(count_expr(*b.lhs));
                     t.merge(count_expr(*b.rhs));
                   },
                   [&](const Comparison& c) {
                     t.merge(count_expr(*c.lhs));
                     t.merge(count_expr(*c.rhs));
                   },
                   [&](const CustomFunctionCall& c) { t.merge(count_call(c)); },
                   [&](const FieldAccess& f) { t.merge(count_expr(*f.target)); },
                   [](const auto&) {},
               },
               e.node);
    return t;
  }

  const CompilerContext& ctx_;
  const PrestoProgram& program_;
  std::map<std::string, std::set<std::string>> graph_;
  std::map<std::string, UsageTable> memo_;
};

}  // namespace

ProgramProfile profile_program(const CompilerContext& ctx, const PrestoProgram& program) {
  return Profiler(ctx, program).run();
}

UsageTable interpret(CompilerContext& ctx, const PrestoProgram& program) {
  ProgramProfile p = profile_program(ctx, program);
  ctx.uses_storage = p.uses_storage;
  return p.total;
}

}  // namespace presto
