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

#include <cctype>
#include <fstream>

#include "codegen_util.hpp"
#include "presto/codegen.hpp"
#include "presto/errors.hpp"

namespace presto {

namespace detail {

void CodeWriter::line(std::string_view text) {
  if (!text.empty()) {
    for (int i = 0; i < depth_; ++i) out_ += unit_;
    out_ += text;
  }
  out_ += '\n';
}

std::set<std::string> storage_functions(const CompilerContext& ctx) {
  std::set<std::string> out;
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& [name, f] : ctx.funcs) {
      if (out.contains(name)) continue;
      bool touches = false;
      for_each_call(f.body, [&](const CustomFunctionCall& call) {
        auto b = find_builtin(call.name);
        if ((b && is_storage_builtin(*b)) || out.contains(call.name)) touches = true;
      });
      if (touches) {
        out.insert(name);
        changed = true;
      }
    }
  }
  return out;
}

std::set<Builtin> used_builtins(const PrestoProgram& program) {
  std::set<Builtin> out;
  for_each_call(program.statements, [&](const CustomFunctionCall& call) {
    if (auto b = find_builtin(call.name)) out.insert(*b);
  });
  return out;
}

std::set<std::string> assigned_names(const Block& block) {
  std::set<std::string> out;
  for (const Item& item : block) {
    if (const auto* a = item_as<Assignment>(item)) {
      out.insert(a->name);
    } else if (const auto* i = item_as<If>(item)) {
      out.merge(assigned_names(i->then_block));
      if (i->else_block) out.merge(assigned_names(*i->else_block));
    } else if (const auto* f = item_as<For>(item)) {
      out.merge(assigned_names(f->body));
    }
  }
  return out;
}

std::string capitalize(std::string_view name) {
  std::string out(name);
  if (!out.empty()) out[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(out[0])));
  return out;
}

const PrestoType* TypeScopes::find(const std::string& name) const {
  for (auto it = frames_.rbegin(); it != frames_.rend(); ++it) {
    if (auto f = it->find(name); f != it->end()) return &f->second;
  }
  return nullptr;
}

}  // namespace detail

const EmittedFile* EmittedArtifact::find(std::string_view path) const {
  for (const auto& f : files) {
    if (f.path == path) return &f;
  }
  return nullptr;
}

EmittedArtifact emit_for_backend(BackendId backend, const PrestoProgram& program,
                                 const CompilerContext& ctx) {
  if (backend == BackendId::RiscZero) return emit_risczero(program, ctx);
  return emit_gnark(program, ctx, backend);
}

void write_artifact(const EmittedArtifact& artifact, const std::filesystem::path& dir) {
  for (const auto& file : artifact.files) {
    auto path = dir / std::filesystem::path(file.path);
    std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << file.content;
    if (!out) throw PrestoError("failed to write " + path.string());
  }
}

}  // namespace presto
