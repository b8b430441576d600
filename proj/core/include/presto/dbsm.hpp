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

#ifndef PRESTO_DBSM_HPP_
#define PRESTO_DBSM_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "presto/benchstore.hpp"
#include "presto/device.hpp"
#include "presto/usage_table.hpp"

namespace presto {

/// Relative weights for proof generation time, verification gas and hardware
/// acceleration.
struct Preference {
  double proof_generation = 0.0;
  double proof_verification = 0.0;
  double hardware_acceleration = 0.0;

  std::array<double, kMetricCount> to_vector() const {
    return {proof_generation, proof_verification, hardware_acceleration};
  }
  /// Throws InvalidPreference for negative, non-finite or all-zero weights.
  void validate() const;
};

/// Workload counts indexed by BenchKind.
struct KindVector {
  std::array<double, kBenchKindCount> counts{};

  double operator[](BenchKind k) const { return counts[static_cast<std::size_t>(k)]; }
  double& operator[](BenchKind k) { return counts[static_cast<std::size_t>(k)]; }
  bool is_zero() const;
  bool operator==(const KindVector&) const = default;
};

struct KindMapping {
  KindVector vector;
  /// One line per dropped usage key.
  std::vector<std::string> notes;
};

/// Maps interpreter keys onto benchmark kinds. Hash counts go to the smallest
/// job size. Storage accessors have no benchmark and are dropped with a note,
/// as are unknown keys.
KindMapping usage_to_kind_vector(const UsageTable& usage);
KindMapping usage_to_kind_vector(const std::vector<std::pair<std::string, std::uint64_t>>& usage);

enum class ZkSchema { Groth16, Plonk };
std::string_view schema_name(ZkSchema s);

struct SelectionResult {
  BackendId backend = BackendId::RiscZero;
  std::optional<ZkSchema> schema;
  /// Lower is better. Eliminated candidates score +infinity.
  std::array<double, kBackendCount> scores{};
  std::vector<std::string> trace;

  bool operator==(const SelectionResult&) const = default;
};

/// Basic selector: score(b) = (sum of weights) * sum_k usage_k * sum_m normalized[b][k][m].
///
/// The usage vector is replicated across the three metric columns, so the
/// preference acts as a common positive factor and never changes the argmin.
/// Ties (including an all-zero usage vector) go to the lowest BackendId.
SelectionResult dynamic_select(const KindVector& usage, const Preference& pref,
                               const CostTensor& tensor);

// ---- extended selector ------------------------------------------------------

/// "[curve]-[zk_schema]-[vm]:[max_gas]"; any field may be "*", and "*" alone
/// is a full wildcard. The curve may itself contain '-' (BLS12-381).
struct VerifPref {
  std::optional<std::string> curve;
  std::optional<std::string> schema;
  std::optional<std::string> vm;
  std::optional<std::uint64_t> max_gas;

  static VerifPref parse(std::string_view text);
};

enum class DeviceRequest { Any, Cpu, Gpu, Apu, Current };

/// "[benchmark]-[backend]-[device]:[num_cores]", e.g. "MiMC-gnark-cpu:10".
/// "*" alone, or a bare device term such as "current" or "gpu:32", is also
/// accepted.
struct HwPref {
  std::optional<BenchKind> benchmark;
  std::optional<std::vector<BackendId>> backends;
  DeviceRequest device = DeviceRequest::Any;
  std::optional<std::uint32_t> num_cores;

  static HwPref parse(std::string_view text);
  bool admits(BackendId b) const;
};

struct ResolvedDevice {
  DeviceClass device = DeviceClass::Cpu;
  std::uint32_t cores = 0;

  std::string to_string() const;
  bool operator==(const ResolvedDevice&) const = default;
};

struct ExtendedOptions {
  /// Core count of the reference machine the cost table was measured on.
  std::uint32_t baseline_cpu_cores = 10;
  /// Core count assumed for a bare "gpu" or "apu" request.
  std::uint32_t baseline_accel_cores = 16;
  DeviceInfoProvider device_info = probe_local_device;
};

struct Candidate {
  BackendId backend;
  ZkSchema schema;
  /// Estimated on-chain verification cost.
  double gas;
};

/// Candidates left after the proof-verification filter, in BackendId order.
/// Gas estimate: the largest verify_gas among kinds the workload uses (every
/// kind when the workload is empty), since verification cost does not grow
/// with the operation count.
std::vector<Candidate> verification_candidates(const KindVector& usage, const VerifPref& verif,
                                               const CostTensor& tensor,
                                               std::vector<std::string>* trace = nullptr);

struct ExtendedResult {
  SelectionResult selection;
  std::vector<Candidate> verification_survivors;
  std::optional<ResolvedDevice> device;
};

/// Constraint-filtering selector: verification filter, hardware resolution,
/// device-support filter, then the fastest estimated proof generation.
/// Throws TooManyConstraints when a filter leaves no candidate.
ExtendedResult extended_select(const KindVector& usage, const VerifPref& verif, const HwPref& hw,
                               const CostTensor& tensor, const DeviceCatalog& devices,
                               const ExtendedOptions& options = {});

/// Linear model through (x, t_x) and (y, t_y) evaluated at n cores. Exact at
/// both endpoints; n outside [x, y] extrapolates. Throws DegenerateSeries
/// when x == y.
double interpolate_time(double x, double t_x, double y, double t_y, double n);

}  // namespace presto

#endif  // PRESTO_DBSM_HPP_
