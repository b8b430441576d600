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
#ifndef PRESTO_PARSER_HPP_
#define PRESTO_PARSER_HPP_

#include <string_view>

#include "presto/ast.hpp"

namespace presto {

/// Parses one .presto source file. Throws ParseError carrying line, column
/// and the set of grammar elements that would have been accepted.
///
/// Nesting of blocks and parenthesised expressions is capped at
/// kMaxNestingDepth so hostile input fails with a ParseError instead of
/// exhausting the stack.
PrestoProgram parse_program(std::string_view source);

inline constexpr std::size_t kMaxNestingDepth = 256;

}  // namespace presto

#endif  // PRESTO_PARSER_HPP_
