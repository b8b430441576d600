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

#ifndef PRESTO_BENCHSTORE_HPP_
#define PRESTO_BENCHSTORE_HPP_

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace presto {

enum class BackendId { RiscZero, GnarkGroth16, GnarkPlonk };
inline constexpr std::size_t kBackendCount = 3;
inline constexpr std::array<BackendId, kBackendCount> kAllBackends = {
    BackendId::RiscZero, BackendId::GnarkGroth16, BackendId::GnarkPlonk};

/// File label: risc_zero | gnark_groth16 | gnark_plonk.
std::string_view backend_label(BackendId b);
/// Console name: "Risc Zero" | "GnarkGroth16" | "GnarkPlonk".
std::string_view backend_display_name(BackendId b);
std::optional<BackendId> backend_from_label(std::string_view label);

enum class BenchKind {
  IntOps,
  Ecdsa,
  Mimc,
  Sha2_1024,
  Sha2_2048,
  Sha2_4096,
  Sha2_8192,
  Sha3_1024,
  Sha3_2048,
  Sha3_4096,
  Sha3_8192,
};
inline constexpr std::size_t kBenchKindCount = 11;

/// snake_case name, e.g. "int_ops", "sha2_1024".
std::string_view bench_kind_name(BenchKind k);
std::optional<BenchKind> bench_kind_from_name(std::string_view name);

enum class Metric { ProofGenTimeMs, VerifyGas, HardwareAccel };
inline constexpr std::size_t kMetricCount = 3;

std::string_view metric_name(Metric m);
std::optional<Metric> metric_from_name(std::string_view name);

struct CostRecord {
  BackendId backend;
  BenchKind kind;
  Metric metric;
  double value;  // ms, gas units, or dimensionless
  std::string provenance;
  /// Only "bn254" rows enter the tensor; other curves are kept for reference.
  std::string curve = "bn254";

  bool operator==(const CostRecord&) const = default;
};

template <typename T>
using CostCube = std::array<std::array<std::array<T, kMetricCount>, kBenchKindCount>, kBackendCount>;

using RawTensor = CostCube<std::optional<double>>;
using NormalizedTensor = CostCube<double>;

/// Fills the gaps a benchmark table is allowed to have:
///  - verify_gas for sha2/sha3 job sizes above 1024 copies the 1024 value
///    (verification cost does not depend on the proven workload);
///  - a kind with no hardware_accel data gets 1.0 for every backend.
/// Throws DataError if anything is still missing afterwards.
RawTensor impute(const RawTensor& raw);

/// Imputes, then divides every (kind, metric) column by its maximum over
/// backends, so each column's largest cell is exactly 1.0.
NormalizedTensor normalize(const RawTensor& raw);

/// Benchmark costs in raw and normalized form. Immutable once built.
class CostTensor {
 public:
  /// Validates and indexes records. Throws DataError on non-positive values,
  /// duplicate cells, or missing proof_gen_time coverage.
  static CostTensor from_records(std::vector<CostRecord> records);

  std::optional<double> raw(BackendId b, BenchKind k, Metric m) const;
  /// Raw value after imputation; always present.
  double value(BackendId b, BenchKind k, Metric m) const;
  double normalized(BackendId b, BenchKind k, Metric m) const;

  const RawTensor& raw_tensor() const { return raw_; }
  const NormalizedTensor& normalized_tensor() const { return normalized_; }
  /// Records that populate the tensor, in load order.
  const std::vector<CostRecord>& records() const { return records_; }
  /// Rows for curves the selector does not target.
  const std::vector<CostRecord>& reference_records() const { return reference_; }

  bool operator==(const CostTensor&) const = default;

 private:
  RawTensor raw_{};
  RawTensor imputed_{};
  NormalizedTensor normalized_{};
  std::vector<CostRecord> records_;
  std::vector<CostRecord> reference_;
};

/// Parses a cost-table JSON array. Each record is
///   {"backend", "kind", "metric", "value", "provenance"}
/// with optional "unit" ("ms" or "s", proof_gen_time_ms only) and optional
/// "curve" (default "bn254"). Throws DataError.
CostTensor load_cost_table(std::string_view json_text);

/// The shipped table built from the published benchmark runs.
const CostTensor& default_cost_table();
std::string_view default_cost_table_json();

/// Serializes every record (tensor and reference rows) with times in ms.
std::string to_json(const CostTensor& tensor);

}  // namespace presto

#endif  // PRESTO_BENCHSTORE_HPP_
