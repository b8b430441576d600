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

#ifndef PRESTO_CONTEXT_HPP_
#define PRESTO_CONTEXT_HPP_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "presto/ast.hpp"

namespace presto {

// ---- builtins ---------------------------------------------------------------

enum class Builtin { Sha256, Keccak256, Mimc, EcdsaVerify, ExtendVec, GetBalance, SetBalance };

struct BuiltinSignature {
  std::string_view name;
  Builtin id;
  std::vector<TypeKind> params;
  TypeKind result;
};

std::optional<Builtin> find_builtin(std::string_view name);
const BuiltinSignature& signature(Builtin builtin);

/// get_balance / set_balance: accessors bound to the program's single mapping.
/// The storage key is always argument 0.
constexpr bool is_storage_builtin(Builtin b) {
  return b == Builtin::GetBalance || b == Builtin::SetBalance;
}

// ---- context ----------------------------------------------------------------

/// Cross-cutting metadata gathered from one program.
struct CompilerContext {
  std::map<std::string, FuncDecl> funcs;
  std::map<std::string, StructDecl> structs;
  std::map<std::string, MappingDecl> mappings;
  std::set<std::string> imports;  // always empty; no module system yet
  /// Global-scope variable names in declaration order. These become public
  /// circuit variables / journal commits in the generated code.
  std::vector<std::string> constraints;
  /// Distinct storage keys (canonical hex) in first-use order.
  std::vector<std::string> keys;
  /// Whether global declarations are promoted to constraint variables.
  bool add_constraint = true;
  std::string program_name;
  bool uses_storage = false;

  bool is_constraint(std::string_view name) const;
  /// The mapping that get_balance/set_balance operate on, if exactly one exists.
  const MappingDecl* storage_mapping() const;
};

/// Registers declarations, runs the static checks (name collisions, known
/// type names, call arity, storage binding) and collects storage keys.
///
/// Storage keys are hex literals that reach argument 0 of a storage builtin,
/// either directly, through a variable bound to a literal, or through user
/// function parameters that are themselves used as keys.
///
/// Throws DuplicateDefinition or ContextError.
CompilerContext build_context(const PrestoProgram& program);

}  // namespace presto

#endif  // PRESTO_CONTEXT_HPP_
