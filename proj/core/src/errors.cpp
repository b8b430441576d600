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

#include "presto/errors.hpp"

namespace presto {
namespace {

std::string join(const std::set<std::string>& items) {
  std::string out;
  for (const auto& s : items) {
    if (!out.empty()) out += ", ";
    out += s;
  }
  return out;
}

std::string location(std::size_t line, std::size_t column) {
  return std::to_string(line) + ":" + std::to_string(column);
}

}  // namespace

ParseError::ParseError(std::size_t line, std::size_t column, std::set<std::string> expected,
                       std::string found)
    : PrestoError("parse error at " + location(line, column) + ": expected " +
                  (expected.empty() ? std::string("valid input") : join(expected)) +
                  ", found " + found),
      line_(line),
      column_(column),
      expected_(std::move(expected)) {}

ParseError::ParseError(std::size_t line, std::size_t column, std::string message)
    : PrestoError("parse error at " + location(line, column) + ": " + message),
      line_(line),
      column_(column) {}

DuplicateDefinition::DuplicateDefinition(std::string name)
    : ContextError("duplicate definition of '" + name + "'"), name_(std::move(name)) {}

RecursionUnsupported::RecursionUnsupported(std::vector<std::string> cycle)
    : InterpretError([&] {
        std::string path;
        for (const auto& f : cycle) {
          if (!path.empty()) path += " -> ";
          path += f;
        }
        return "recursive call chain is not supported: " + path;
      }()),
      cycle_(std::move(cycle)) {}

UnknownFunction::UnknownFunction(std::string name)
    : InterpretError("call to undeclared function '" + name + "'"), name_(std::move(name)) {}

TooManyConstraints::TooManyConstraints(int step, std::string remedy,
                                       std::vector<std::string> trace)
    : SelectionError("Too Many Constraints (step " + std::to_string(step) + "): " + remedy),
      step_(step),
      remedy_(std::move(remedy)),
      trace_(std::move(trace)) {}

UnsupportedConstruct::UnsupportedConstruct(std::string backend, std::string node)
    : CodegenError(backend + " codegen has no translation for " + node), node_(std::move(node)) {}

StorageWithoutKeys::StorageWithoutKeys()
    : CodegenError(
          "program uses storage but no literal storage keys were found; cannot size Keys/Values") {}

}  // namespace presto
