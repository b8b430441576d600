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

#ifndef PRESTO_ERRORS_HPP_
#define PRESTO_ERRORS_HPP_

#include <cstddef>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace presto {

/// Root of every error the toolchain raises. Callers that only need a
/// diagnostic can catch this and print what().
class PrestoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ---- frontend ---------------------------------------------------------------

class ParseError : public PrestoError {
 public:
  ParseError(std::size_t line, std::size_t column, std::set<std::string> expected,
             std::string found);
  ParseError(std::size_t line, std::size_t column, std::string message);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  /// Grammar elements that would have been accepted at the failure point.
  const std::set<std::string>& expected() const noexcept { return expected_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::set<std::string> expected_;
};

/// Semantic errors found while building the compiler context.
class ContextError : public PrestoError {
 public:
  using PrestoError::PrestoError;
};

class DuplicateDefinition : public ContextError {
 public:
  explicit DuplicateDefinition(std::string name);
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

// ---- interpreter ------------------------------------------------------------

class InterpretError : public PrestoError {
 public:
  using PrestoError::PrestoError;
};

class RecursionUnsupported : public InterpretError {
 public:
  explicit RecursionUnsupported(std::vector<std::string> cycle);
  /// Call path that closes the cycle; first and last entries are equal.
  const std::vector<std::string>& cycle() const noexcept { return cycle_; }

 private:
  std::vector<std::string> cycle_;
};

class UnknownFunction : public InterpretError {
 public:
  explicit UnknownFunction(std::string name);
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

// ---- benchstore -------------------------------------------------------------

class DataError : public PrestoError {
 public:
  using PrestoError::PrestoError;
};

// ---- dbsm -------------------------------------------------------------------

class SelectionError : public PrestoError {
 public:
  using PrestoError::PrestoError;
};

class InvalidPreference : public SelectionError {
 public:
  using SelectionError::SelectionError;
};

class DegenerateSeries : public SelectionError {
 public:
  using SelectionError::SelectionError;
};

/// Every candidate was eliminated by the user's constraints.
class TooManyConstraints : public SelectionError {
 public:
  TooManyConstraints(int step, std::string remedy, std::vector<std::string> trace);

  /// Step of the extended algorithm that emptied the candidate set.
  int step() const noexcept { return step_; }
  const std::string& remedy() const noexcept { return remedy_; }
  const std::vector<std::string>& trace() const noexcept { return trace_; }

 private:
  int step_;
  std::string remedy_;
  std::vector<std::string> trace_;
};

// ---- codegen ----------------------------------------------------------------

class CodegenError : public PrestoError {
 public:
  using PrestoError::PrestoError;
};

class UnsupportedConstruct : public CodegenError {
 public:
  UnsupportedConstruct(std::string backend, std::string node);
  const std::string& node() const noexcept { return node_; }

 private:
  std::string node_;
};

class StorageWithoutKeys : public CodegenError {
 public:
  StorageWithoutKeys();
};

}  // namespace presto

#endif  // PRESTO_ERRORS_HPP_
