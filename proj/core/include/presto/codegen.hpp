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

#ifndef PRESTO_CODEGEN_HPP_
#define PRESTO_CODEGEN_HPP_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "presto/ast.hpp"
#include "presto/benchstore.hpp"
#include "presto/context.hpp"

namespace presto {

struct EmittedFile {
  std::string path;  // relative, '/'-separated
  std::string content;
  bool operator==(const EmittedFile&) const = default;
};

struct EmittedArtifact {
  BackendId backend = BackendId::RiscZero;
  std::vector<EmittedFile> files;
  std::vector<std::string> warnings;

  /// nullptr if no file has that path.
  const EmittedFile* find(std::string_view path) const;
  bool operator==(const EmittedArtifact&) const = default;
};

/// Risc Zero guest (guest/main.rs) and host (host/main.rs).
///
/// Mappings become BTreeMaps owned by the host and passed to the guest as its
/// first input; storage-touching functions take the map as a leading
/// parameter. Global declarations are committed to the journal at the end of
/// the guest. Requires ctx from build_context; ctx.uses_storage decides
/// whether any map plumbing is emitted.
EmittedArtifact emit_risczero(const PrestoProgram& program, const CompilerContext& ctx);

/// Gnark circuit (circuit/main.go) with a BN254 Groth16 prove/verify main.
///
/// Global declarations become public circuit fields; storage becomes fixed
/// Keys/Values arrays sized by ctx.keys. Selecting GnarkPlonk still produces
/// the Groth16 scaffold and records a warning.
/// Throws StorageWithoutKeys or UnsupportedConstruct.
EmittedArtifact emit_gnark(const PrestoProgram& program, const CompilerContext& ctx,
                           BackendId target = BackendId::GnarkGroth16);

/// Dispatches on the backend.
EmittedArtifact emit_for_backend(BackendId backend, const PrestoProgram& program,
                                 const CompilerContext& ctx);

/// Writes every file below dir, creating directories as needed.
void write_artifact(const EmittedArtifact& artifact, const std::filesystem::path& dir);

}  // namespace presto

#endif  // PRESTO_CODEGEN_HPP_
