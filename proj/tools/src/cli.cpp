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

#include "presto/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "presto/benchstore.hpp"
#include "presto/codegen.hpp"
#include "presto/context.hpp"
#include "presto/dbsm.hpp"
#include "presto/errors.hpp"
#include "presto/interpreter.hpp"
#include "presto/parser.hpp"

namespace presto::cli {

namespace {

struct Options {
  std::string source;
  double w_gen = 0.0;
  double w_verif = 0.0;
  double w_hw = 0.0;
  std::string bench_table;
  std::string emit_dir;
  std::string backend;
  bool extended = false;
  std::string verif_pref = "*";
  std::string hw_pref = "*";
  std::string devices;
};

struct IoFailure {
  std::string message;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoFailure{"cannot read " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void print_trace(std::ostream& os, const std::vector<std::string>& trace) {
  os << "\nDecision Trace:\n";
  for (const auto& line : trace) os << "  " << line << '\n';
}

int compile(const Options& opt, std::ostream& out, std::ostream& err,
            const DeviceInfoProvider& device_info) {
  std::string source = read_file(opt.source);
  PrestoProgram program = parse_program(source);
  CompilerContext ctx = build_context(program);
  UsageTable usage = interpret(ctx, program);

  std::optional<CostTensor> custom;
  if (!opt.bench_table.empty()) custom = load_cost_table(read_file(opt.bench_table));
  const CostTensor& tensor = custom ? *custom : default_cost_table();

  std::optional<BackendId> forced;
  if (!opt.backend.empty()) {
    forced = backend_from_label(opt.backend);
    if (!forced) {
      err << "error: unknown backend \"" << opt.backend << "\" (expected risc_zero, gnark_groth16 or gnark_plonk)\n";
      return kUsageError;
    }
  }
  Preference pref{opt.w_gen, opt.w_verif, opt.w_hw};
  pref.validate();

  out << "Interpreter Result:\n" << usage.to_json() << "\n\n";

  BackendId backend;
  std::vector<std::string> trace;
  KindMapping mapping = usage_to_kind_vector(usage);
  for (const auto& note : mapping.notes) err << note << '\n';
  if (forced) {
    backend = *forced;
  } else if (opt.extended) {
    VerifPref verif = VerifPref::parse(opt.verif_pref);
    HwPref hw = HwPref::parse(opt.hw_pref);
    DeviceCatalog devices;
    if (!opt.devices.empty()) devices = DeviceCatalog::from_json(read_file(opt.devices));
    ExtendedOptions ext;
    ext.device_info = device_info;
    try {
      ExtendedResult result = extended_select(mapping.vector, verif, hw, tensor, devices, ext);
      backend = result.selection.backend;
      trace = result.selection.trace;
    } catch (const TooManyConstraints& e) {
      print_trace(err, e.trace());
      throw;
    }
  } else {
    backend = dynamic_select(mapping.vector, pref, tensor).backend;
  }

  out << "Backend Selection:\n" << backend_display_name(backend) << '\n';
  if (opt.extended && !forced) print_trace(out, trace);

  if (!opt.emit_dir.empty()) {
    EmittedArtifact artifact = emit_for_backend(backend, program, ctx);
    for (const auto& w : artifact.warnings) err << "warning: " << w << '\n';
    try {
      write_artifact(artifact, opt.emit_dir);
    } catch (const std::exception& e) {
      throw IoFailure{e.what()};
    }
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const DeviceInfoProvider& device_info) {
  Options opt;
  CLI::App app{"Presto compiler driver: profiles a program, selects a ZK backend and emits code", "prestoc"};
  app.add_option("source", opt.source, "Presto source file")->required();
  app.add_option("w_gen", opt.w_gen, "Weight for proof generation time")->required();
  app.add_option("w_verif", opt.w_verif, "Weight for proof verification cost")->required();
  app.add_option("w_hw", opt.w_hw, "Weight for hardware acceleration")->required();
  app.add_option("--bench-table", opt.bench_table, "Cost table JSON (default: embedded table)");
  app.add_option("--emit-dir", opt.emit_dir, "Write the selected backend's sources here");
  app.add_option("--backend", opt.backend, "Skip selection: risc_zero, gnark_groth16 or gnark_plonk");
  app.add_flag("--extended", opt.extended, "Use the constraint-filtering selector");
  app.add_option("--verif-pref", opt.verif_pref, "[curve]-[zk_schema]-[vm]:[max_gas]")->capture_default_str();
  app.add_option("--hw-pref", opt.hw_pref, "[benchmark]-[backend]-[device]:[num_cores]")->capture_default_str();
  app.add_option("--devices", opt.devices, "Per-device benchmark series JSON");

  std::vector<const char*> argv{"prestoc"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << "run with --help for usage\n";
    return kUsageError;
  }

  try {
    return compile(opt, out, err, device_info);
  } catch (const IoFailure& e) {
    err << "error: " << e.message << '\n';
    return kIoError;
  } catch (const ParseError& e) {
    err << opt.source << ": " << e.what() << '\n';
    return kSourceError;
  } catch (const ContextError& e) {
    err << opt.source << ": " << e.what() << '\n';
    return kSourceError;
  } catch (const InterpretError& e) {
    err << opt.source << ": " << e.what() << '\n';
    return kSourceError;
  } catch (const CodegenError& e) {
    err << "error: " << e.what() << '\n';
    return kSourceError;
  } catch (const DataError& e) {
    err << "error: " << e.what() << '\n';
    return kDataError;
  } catch (const TooManyConstraints& e) {
    err << "error: " << e.what() << '\n';
    return kTooManyConstraints;
  } catch (const SelectionError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const PrestoError& e) {
    err << "error: " << e.what() << '\n';
    return kSourceError;
  }
}

}  // namespace presto::cli
