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

#ifndef PRESTO_SRC_CODEGEN_UTIL_HPP_
#define PRESTO_SRC_CODEGEN_UTIL_HPP_

#include <map>
#include <set>
#include <string>
#include <string_view>

#include "presto/ast.hpp"
#include "presto/context.hpp"

namespace presto::detail {

/// Line-oriented text builder with block indentation.
class CodeWriter {
 public:
  explicit CodeWriter(std::string indent_unit) : unit_(std::move(indent_unit)) {}

  void line(std::string_view text);
  void blank() { out_ += '\n'; }
  void open(std::string_view header) {
    line(header);
    ++depth_;
  }
  void close(std::string_view footer = "}") {
    --depth_;
    line(footer);
  }
  /// Line at the enclosing depth between two blocks, e.g. "} else {".
  void middle(std::string_view text) {
    --depth_;
    line(text);
    ++depth_;
  }
  std::string str() const { return out_; }

 private:
  std::string unit_;
  std::string out_;
  int depth_ = 0;
};

/// User functions that reach a storage builtin, directly or through calls.
std::set<std::string> storage_functions(const CompilerContext& ctx);

/// Builtins called anywhere in the program.
std::set<Builtin> used_builtins(const PrestoProgram& program);

/// Names assigned (not declared) anywhere in the block, recursively.
std::set<std::string> assigned_names(const Block& block);

std::string capitalize(std::string_view name);

/// Lexically scoped name -> type table used for type-directed emission.
class TypeScopes {
 public:
  void push() { frames_.emplace_back(); }
  void pop() { frames_.pop_back(); }
  void declare(const std::string& name, PrestoType type) { frames_.back()[name] = std::move(type); }
  const PrestoType* find(const std::string& name) const;

 private:
  std::vector<std::map<std::string, PrestoType>> frames_;
};

}  // namespace presto::detail

#endif  // PRESTO_SRC_CODEGEN_UTIL_HPP_
