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
#ifndef PRESTO_AST_HPP_
#define PRESTO_AST_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <type_traits>
#include <variant>
#include <vector>

#include "presto/box.hpp"

namespace presto {

struct SourcePos {
  std::size_t line = 1;
  std::size_t column = 1;
  bool operator==(const SourcePos&) const = default;
};

// ---- types ------------------------------------------------------------------

enum class TypeKind { U64, Bool, Bytes, Pubkey, Secretkey, None, Struct };

struct PrestoType {
  TypeKind kind = TypeKind::None;
  std::string struct_name;  // only for TypeKind::Struct

  static PrestoType builtin(TypeKind kind) { return {kind, {}}; }
  static PrestoType struct_ref(std::string name) { return {TypeKind::Struct, std::move(name)}; }
  /// Resolves a type keyword; anything else is taken as a struct reference.
  static PrestoType from_name(std::string_view name);

  std::string to_string() const;
  bool operator==(const PrestoType&) const = default;
};

// ---- expressions ------------------------------------------------------------

enum class BinaryOp { Add, Sub, Mul, Div, Mod, Pow };
enum class CompareOp { Gt, Lt, Ge, Le, Eq, Ne };

std::string_view to_string(BinaryOp op);
std::string_view to_string(CompareOp op);

struct Expression;

struct IntLiteral {
  std::uint64_t value = 0;
  bool operator==(const IntLiteral&) const = default;
};

/// Byte string written as 0x-prefixed hex. Odd nibble counts are left-padded
/// with a zero nibble.
struct HexLiteral {
  std::vector<std::uint8_t> bytes;

  static HexLiteral from_digits(std::string_view digits);
  /// "0x" followed by two lowercase hex digits per byte.
  std::string canonical() const;
  bool operator==(const HexLiteral&) const = default;
};

struct BoolLiteral {
  bool value = false;
  bool operator==(const BoolLiteral&) const = default;
};

struct Identifier {
  std::string name;
  bool operator==(const Identifier&) const = default;
};

struct Binary {
  BinaryOp op;
  Box<Expression> lhs;
  Box<Expression> rhs;
  bool operator==(const Binary&) const = default;
};

struct Comparison {
  CompareOp op;
  Box<Expression> lhs;
  Box<Expression> rhs;
  bool operator==(const Comparison&) const = default;
};

struct CustomFunctionCall {
  std::string name;
  std::vector<Expression> args;
  bool operator==(const CustomFunctionCall&) const = default;
};

struct FieldAccess {
  Box<Expression> target;
  std::string field;
  bool operator==(const FieldAccess&) const = default;
};

struct Expression {
  std::variant<IntLiteral, HexLiteral, BoolLiteral, Identifier, Binary, Comparison,
               CustomFunctionCall, FieldAccess>
      node;
  SourcePos pos;
  bool operator==(const Expression&) const = default;
};

// ---- statements (semicolon-terminated) -------------------------------------

struct VarDecl {
  std::string name;
  PrestoType type;
  Expression init;
  bool operator==(const VarDecl&) const = default;
};

struct Assignment {
  std::string name;
  Expression value;
  bool operator==(const Assignment&) const = default;
};

/// mapping NAME: (key_name key_type => value_name value_type)
struct MappingDecl {
  std::string name;
  std::string key_name;
  PrestoType key_type;
  std::string value_name;
  PrestoType value_type;
  bool operator==(const MappingDecl&) const = default;
};

struct CallStatement {
  CustomFunctionCall call;
  bool operator==(const CallStatement&) const = default;
};

struct Return {
  std::optional<Expression> value;
  bool operator==(const Return&) const = default;
};

using Statement = std::variant<VarDecl, Assignment, MappingDecl, CallStatement, Return>;

// ---- oscs (no trailing semicolon) ------------------------------------------

struct Item;
using Block = std::vector<Item>;

struct If {
  Expression condition;
  Block then_block;
  std::optional<Block> else_block;
  bool operator==(const If&) const = default;
};

/// for VAR in START .. END { BODY }, half-open range.
struct For {
  std::string var;
  Expression start;
  Expression end;
  Block body;
  bool operator==(const For&) const = default;
};

struct Param {
  std::string name;
  PrestoType type;
  bool operator==(const Param&) const = default;
};

struct FuncDecl {
  std::string name;
  std::vector<Param> params;
  PrestoType return_type;
  Block body;
  bool operator==(const FuncDecl&) const = default;
};

struct StructField {
  PrestoType type;
  std::string name;
  bool operator==(const StructField&) const = default;
};

struct StructDecl {
  std::string name;
  std::vector<StructField> fields;
  bool operator==(const StructDecl&) const = default;
};

using Oscs = std::variant<If, For, FuncDecl, StructDecl>;

struct Item {
  std::variant<Statement, Oscs> node;
  SourcePos pos;
  bool operator==(const Item&) const = default;
};

struct PrestoProgram {
  std::string name;
  Block statements;
  bool operator==(const PrestoProgram&) const = default;
};

// ---- helpers ----------------------------------------------------------------

template <typename... Fs>
struct Overloaded : Fs... {
  using Fs::operator()...;
};
template <typename... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

/// Returns the statement/oscs alternative T held by an item, or nullptr.
template <typename T>
const T* item_as(const Item& item) {
  if constexpr (std::is_constructible_v<Statement, T>) {
    if (const auto* s = std::get_if<Statement>(&item.node)) return std::get_if<T>(s);
  } else {
    if (const auto* o = std::get_if<Oscs>(&item.node)) return std::get_if<T>(o);
  }
  return nullptr;
}

/// Calls fn on every expression in the block, recursively, in source order.
/// Nested sub-expressions are visited before the expression that holds them.
void for_each_expression(const Block& block, const std::function<void(const Expression&)>& fn);
void for_each_subexpression(const Expression& expr,
                            const std::function<void(const Expression&)>& fn);

/// Calls fn on every call site in the block (statement calls and calls nested
/// in expressions), including those inside nested function bodies.
void for_each_call(const Block& block, const std::function<void(const CustomFunctionCall&)>& fn);

}  // namespace presto

#endif  // PRESTO_AST_HPP_
