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

#ifndef PRESTO_INTERPRETER_HPP_
#define PRESTO_INTERPRETER_HPP_

#include <map>
#include <string>

#include "presto/ast.hpp"
#include "presto/context.hpp"
#include "presto/usage_table.hpp"

namespace presto {

struct FunctionProfile {
  std::string name;
  /// Direct operations in the body plus the tables of every user function it
  /// calls, once per call site.
  UsageTable table;
  bool uses_storage = false;
};

struct ProgramProfile {
  UsageTable total;
  std::map<std::string, FunctionProfile> functions;
  bool uses_storage = false;
};

/// Static workload profile of a program.
///
/// Counting rules:
///  - every Binary node is one "int_ops"; Comparison nodes count nothing;
///  - builtin calls count under their own key (extend_vec counts nothing);
///  - a call to a user function adds that function's whole table;
///  - both branches of an if are counted and the condition is never evaluated;
///  - a for body is multiplied by its trip count when both bounds are integer
///    literals, and counted once otherwise.
///
/// The total is the sum of every declared function's table (each declaration
/// is traversed once, called or not) plus the global scope.
///
/// Throws UnknownFunction for calls to undeclared non-builtins and
/// RecursionUnsupported when the call graph has a cycle.
ProgramProfile profile_program(const CompilerContext& ctx, const PrestoProgram& program);

/// profile_program(...).total, also finalizing ctx.uses_storage.
UsageTable interpret(CompilerContext& ctx, const PrestoProgram& program);

}  // namespace presto

#endif  // PRESTO_INTERPRETER_HPP_
