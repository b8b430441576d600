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

#include "presto/ast.hpp"

namespace presto {

PrestoType PrestoType::from_name(std::string_view name) {
  if (name == "u64") return builtin(TypeKind::U64);
  if (name == "bool") return builtin(TypeKind::Bool);
  if (name == "bytes") return builtin(TypeKind::Bytes);
  if (name == "pubkey") return builtin(TypeKind::Pubkey);
  if (name == "secretkey") return builtin(TypeKind::Secretkey);
  if (name == "None") return builtin(TypeKind::None);
  return struct_ref(std::string(name));
}

std::string PrestoType::to_string() const {
  switch (kind) {
    case TypeKind::U64: return "u64";
    case TypeKind::Bool: return "bool";
    case TypeKind::Bytes: return "bytes";
    case TypeKind::Pubkey: return "pubkey";
    case TypeKind::Secretkey: return "secretkey";
    case TypeKind::None: return "None";
    case TypeKind::Struct: return struct_name;
  }
  return "?";
}

std::string_view to_string(BinaryOp op) {
  switch (op) {
    case BinaryOp::Add: return "+";
    case BinaryOp::Sub: return "-";
    case BinaryOp::Mul: return "*";
    case BinaryOp::Div: return "/";
    case BinaryOp::Mod: return "%";
    case BinaryOp::Pow: return "**";
  }
  return "?";
}

std::string_view to_string(CompareOp op) {
  switch (op) {
    case CompareOp::Gt: return ">";
    case CompareOp::Lt: return "<";
    case CompareOp::Ge: return ">=";
    case CompareOp::Le: return "<=";
    case CompareOp::Eq: return "==";
    case CompareOp::Ne: return "!=";
  }
  return "?";
}

namespace {

int nibble(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

HexLiteral HexLiteral::from_digits(std::string_view digits) {
  std::string padded;
  if (digits.size() % 2 != 0) padded.push_back('0');
  padded.append(digits);

  HexLiteral out;
  out.bytes.reserve(padded.size() / 2);
  for (std::size_t i = 0; i + 1 < padded.size(); i += 2) {
    out.bytes.push_back(static_cast<std::uint8_t>(nibble(padded[i]) * 16 + nibble(padded[i + 1])));
  }
  return out;
}

std::string HexLiteral::canonical() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out = "0x";
  for (std::uint8_t b : bytes) {
    out.push_back(kDigits[b >> 4]);
    out.push_back(kDigits[b & 0xf]);
  }
  return out;
}

void for_each_subexpression(const Expression& expr,
                            const std::function<void(const Expression&)>& fn) {
  std::visit(Overloaded{
                 [&](const Binary& b) {
                   for_each_subexpression(*b.lhs, fn);
                   for_each_subexpression(*b.rhs, fn);
                 },
                 [&](const Comparison& c) {
                   for_each_subexpression(*c.lhs, fn);
                   for_each_subexpression(*c.rhs, fn);
                 },
                 [&](const CustomFunctionCall& call) {
                   for (const auto& arg : call.args) for_each_subexpression(arg, fn);
                 },
                 [&](const FieldAccess& f) { for_each_subexpression(*f.target, fn); },
                 [](const auto&) {},
             },
             expr.node);
  fn(expr);
}

void for_each_expression(const Block& block, const std::function<void(const Expression&)>& fn) {
  for (const Item& item : block) {
    std::visit(
        Overloaded{
            [&](const Statement& s) {
              std::visit(Overloaded{
                             [&](const VarDecl& d) { for_each_subexpression(d.init, fn); },
                             [&](const Assignment& a) { for_each_subexpression(a.value, fn); },
                             [&](const CallStatement& c) {
                               for (const auto& arg : c.call.args) for_each_subexpression(arg, fn);
                             },
                             [&](const Return& r) {
                               if (r.value) for_each_subexpression(*r.value, fn);
                             },
                             [](const MappingDecl&) {},
                         },
                         s);
            },
            [&](const Oscs& o) {
              std::visit(Overloaded{
                             [&](const If& i) {
                               for_each_subexpression(i.condition, fn);
                               for_each_expression(i.then_block, fn);
                               if (i.else_block) for_each_expression(*i.else_block, fn);
                             },
                             [&](const For& f) {
                               for_each_subexpression(f.start, fn);
                               for_each_subexpression(f.end, fn);
                               for_each_expression(f.body, fn);
                             },
                             [&](const FuncDecl& f) { for_each_expression(f.body, fn); },
                             [](const StructDecl&) {},
                         },
                         o);
            },
        },
        item.node);
  }
}

void for_each_call(const Block& block, const std::function<void(const CustomFunctionCall&)>& fn) {
  for_each_expression(block, [&](const Expression& e) {
    if (const auto* call = std::get_if<CustomFunctionCall>(&e.node)) fn(*call);
  });
  for (const Item& item : block) {
    if (const auto* c = item_as<CallStatement>(item)) {
      fn(c->call);
    } else if (const auto* i = item_as<If>(item)) {
      for_each_call(i->then_block, fn);
      if (i->else_block) for_each_call(*i->else_block, fn);
    } else if (const auto* f = item_as<For>(item)) {
      for_each_call(f->body, fn);
    } else if (const auto* d = item_as<FuncDecl>(item)) {
      for_each_call(d->body, fn);
    }
  }
}

}  // namespace presto
