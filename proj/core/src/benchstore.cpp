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

#include "presto/benchstore.hpp"

#include <algorithm>
#include <cmath>
#include <json.hpp>

#include "presto/errors.hpp"

namespace presto {

namespace bench::detail {
extern const std::string_view kDefaultCostTableJson;
}

namespace {

constexpr std::array<std::string_view, kBackendCount> kBackendLabels = {
    "risc_zero", "gnark_groth16", "gnark_plonk"};
constexpr std::array<std::string_view, kBackendCount> kBackendDisplay = {
    "Risc Zero", "GnarkGroth16", "GnarkPlonk"};
constexpr std::array<std::string_view, kBenchKindCount> kKindNames = {
    "int_ops",   "ecdsa",     "mimc",      "sha2_1024", "sha2_2048", "sha2_4096",
    "sha2_8192", "sha3_1024", "sha3_2048", "sha3_4096", "sha3_8192"};
constexpr std::array<std::string_view, kMetricCount> kMetricNames = {
    "proof_gen_time_ms", "verify_gas", "hardware_accel"};

template <std::size_t N>
std::optional<std::size_t> index_of(const std::array<std::string_view, N>& names,
                                    std::string_view name) {
  for (std::size_t i = 0; i < N; ++i) {
    if (names[i] == name) return i;
  }
  return std::nullopt;
}

std::size_t ix(auto e) { return static_cast<std::size_t>(e); }

std::string cell_name(std::size_t b, std::size_t k, std::size_t m) {
  return std::string(kBackendLabels[b]) + "/" + std::string(kKindNames[k]) + "/" +
         std::string(kMetricNames[m]);
}

// The 1024 job-size kind of the same hash family, for gas imputation.
std::optional<std::size_t> gas_source(std::size_t kind) {
  auto k = static_cast<BenchKind>(kind);
  if (k >= BenchKind::Sha2_2048 && k <= BenchKind::Sha2_8192) return ix(BenchKind::Sha2_1024);
  if (k >= BenchKind::Sha3_2048 && k <= BenchKind::Sha3_8192) return ix(BenchKind::Sha3_1024);
  return std::nullopt;
}

}  // namespace

std::string_view backend_label(BackendId b) { return kBackendLabels[ix(b)]; }
std::string_view backend_display_name(BackendId b) { return kBackendDisplay[ix(b)]; }
std::optional<BackendId> backend_from_label(std::string_view label) {
  auto i = index_of(kBackendLabels, label);
  return i ? std::optional(static_cast<BackendId>(*i)) : std::nullopt;
}

std::string_view bench_kind_name(BenchKind k) { return kKindNames[ix(k)]; }
std::optional<BenchKind> bench_kind_from_name(std::string_view name) {
  auto i = index_of(kKindNames, name);
  return i ? std::optional(static_cast<BenchKind>(*i)) : std::nullopt;
}

std::string_view metric_name(Metric m) { return kMetricNames[ix(m)]; }
std::optional<Metric> metric_from_name(std::string_view name) {
  auto i = index_of(kMetricNames, name);
  return i ? std::optional(static_cast<Metric>(*i)) : std::nullopt;
}

RawTensor impute(const RawTensor& raw) {
  RawTensor out = raw;
  const std::size_t time = ix(Metric::ProofGenTimeMs);
  const std::size_t gas = ix(Metric::VerifyGas);
  const std::size_t hw = ix(Metric::HardwareAccel);

  std::vector<std::string> missing;
  for (std::size_t k = 0; k < kBenchKindCount; ++k) {
    std::size_t hw_present = 0;
    for (std::size_t b = 0; b < kBackendCount; ++b) {
      if (!out[b][k][gas]) {
        if (auto src = gas_source(k)) out[b][k][gas] = raw[b][*src][gas];
      }
      if (out[b][k][hw]) ++hw_present;
    }
    if (hw_present == 0) {
      for (std::size_t b = 0; b < kBackendCount; ++b) out[b][k][hw] = 1.0;
    }
    for (std::size_t b = 0; b < kBackendCount; ++b) {
      for (std::size_t m : {time, gas, hw}) {
        if (!out[b][k][m]) missing.push_back(cell_name(b, k, m));
      }
    }
  }
  if (!missing.empty()) {
    std::string msg = "cost table is missing required cells:";
    for (const auto& c : missing) msg += " " + c;
    throw DataError(msg);
  }
  return out;
}

NormalizedTensor normalize(const RawTensor& raw) {
  RawTensor full = impute(raw);
  NormalizedTensor out{};
  for (std::size_t k = 0; k < kBenchKindCount; ++k) {
    for (std::size_t m = 0; m < kMetricCount; ++m) {
      double column_max = 0.0;
      for (std::size_t b = 0; b < kBackendCount; ++b) column_max = std::max(column_max, *full[b][k][m]);
      for (std::size_t b = 0; b < kBackendCount; ++b) out[b][k][m] = *full[b][k][m] / column_max;
    }
  }
  return out;
}

CostTensor CostTensor::from_records(std::vector<CostRecord> records) {
  CostTensor t;
  for (auto& r : records) {
    if (!std::isfinite(r.value) || r.value <= 0.0) {
      throw DataError("non-positive value " + std::to_string(r.value) + " for " +
                      cell_name(ix(r.backend), ix(r.kind), ix(r.metric)));
    }
    if (r.curve != "bn254") {
      t.reference_.push_back(std::move(r));
      continue;
    }
    auto& slot = t.raw_[ix(r.backend)][ix(r.kind)][ix(r.metric)];
    if (slot) {
      throw DataError("duplicate record for " + cell_name(ix(r.backend), ix(r.kind), ix(r.metric)));
    }
    slot = r.value;
    t.records_.push_back(std::move(r));
  }
  for (std::size_t k = 0; k < kBenchKindCount; ++k) {
    std::size_t hw_present = 0;
    for (std::size_t b = 0; b < kBackendCount; ++b) {
      if (t.raw_[b][k][ix(Metric::HardwareAccel)]) ++hw_present;
    }
    if (hw_present != 0 && hw_present != kBackendCount) {
      throw DataError("hardware_accel for " + std::string(kKindNames[k]) +
                      " must be given for every backend or none");
    }
  }
  t.imputed_ = impute(t.raw_);
  t.normalized_ = normalize(t.raw_);
  return t;
}

std::optional<double> CostTensor::raw(BackendId b, BenchKind k, Metric m) const {
  return raw_[ix(b)][ix(k)][ix(m)];
}
double CostTensor::value(BackendId b, BenchKind k, Metric m) const {
  return *imputed_[ix(b)][ix(k)][ix(m)];
}
double CostTensor::normalized(BackendId b, BenchKind k, Metric m) const {
  return normalized_[ix(b)][ix(k)][ix(m)];
}

CostTensor load_cost_table(std::string_view json_text) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw DataError(std::string("cost table is not valid JSON: ") + e.what());
  }
  if (!doc.is_array()) throw DataError("cost table must be a JSON array of records");

  std::vector<CostRecord> records;
  std::size_t index = 0;
  for (const auto& item : doc) {
    auto where = "record " + std::to_string(index++);
    if (!item.is_object()) throw DataError(where + " is not an object");
    auto text = [&](const char* key) -> std::string {
      auto it = item.find(key);
      if (it == item.end() || !it->is_string()) {
        throw DataError(where + ": missing string field \"" + key + "\"");
      }
      return it->get<std::string>();
    };

    CostRecord r{};
    auto backend = text("backend");
    auto kind = text("kind");
    auto metric = text("metric");
    auto b = backend_from_label(backend);
    if (!b) throw DataError(where + ": unknown backend \"" + backend + "\"");
    auto k = bench_kind_from_name(kind);
    if (!k) throw DataError(where + ": unknown kind \"" + kind + "\"");
    auto m = metric_from_name(metric);
    if (!m) throw DataError(where + ": unknown metric \"" + metric + "\"");
    r.backend = *b;
    r.kind = *k;
    r.metric = *m;

    auto value = item.find("value");
    if (value == item.end() || !value->is_number()) {
      throw DataError(where + ": missing numeric field \"value\"");
    }
    r.value = value->get<double>();

    if (auto unit = item.find("unit"); unit != item.end()) {
      if (!unit->is_string()) throw DataError(where + ": \"unit\" must be a string");
      auto u = unit->get<std::string>();
      if (r.metric != Metric::ProofGenTimeMs) {
        throw DataError(where + ": \"unit\" is only accepted for proof_gen_time_ms");
      }
      if (u == "s") {
        r.value *= 1000.0;
      } else if (u != "ms") {
        throw DataError(where + ": unknown time unit \"" + u + "\"");
      }
    }
    if (item.contains("curve")) r.curve = text("curve");
    if (item.contains("provenance")) r.provenance = text("provenance");
    records.push_back(std::move(r));
  }
  return CostTensor::from_records(std::move(records));
}

std::string_view default_cost_table_json() { return bench::detail::kDefaultCostTableJson; }

const CostTensor& default_cost_table() {
  static const CostTensor kTable = load_cost_table(default_cost_table_json());
  return kTable;
}

std::string to_json(const CostTensor& tensor) {
  using nlohmann::ordered_json;
  ordered_json out = ordered_json::array();
  auto emit = [&](const CostRecord& r) {
    ordered_json j;
    j["backend"] = backend_label(r.backend);
    j["kind"] = bench_kind_name(r.kind);
    j["metric"] = metric_name(r.metric);
    j["value"] = r.value;
    if (r.metric == Metric::ProofGenTimeMs) j["unit"] = "ms";
    if (r.curve != "bn254") j["curve"] = r.curve;
    j["provenance"] = r.provenance;
    out.push_back(std::move(j));
  };
  for (const auto& r : tensor.records()) emit(r);
  for (const auto& r : tensor.reference_records()) emit(r);
  return out.dump(2) + "\n";
}

}  // namespace presto
