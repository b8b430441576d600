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

#include "presto/dbsm.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fmt/format.h>
#include <limits>

#include "presto/errors.hpp"

namespace presto {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::size_t ix(auto e) { return static_cast<std::size_t>(e); }

std::string lower(std::string_view s) {
  std::string out(s);
  for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Lowercase with '-' and '_' removed, so BLS12-381 == bls12_381 == bls12381.
std::string squash(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c != '-' && c != '_') out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  return out;
}

template <typename T>
std::optional<T> parse_uint(std::string_view s) {
  T value{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return value;
}

std::optional<std::string> field(std::string_view s) {
  s = trim(s);
  if (s == "*") return std::nullopt;
  return std::string(s);
}

}  // namespace

// ---- basic selector ---------------------------------------------------------

void Preference::validate() const {
  double sum = 0.0;
  for (double w : to_vector()) {
    if (!std::isfinite(w) || w < 0.0) {
      throw InvalidPreference("preference weights must be finite and non-negative");
    }
    sum += w;
  }
  if (sum <= 0.0) throw InvalidPreference("at least one preference weight must be positive");
}

bool KindVector::is_zero() const {
  return std::all_of(counts.begin(), counts.end(), [](double c) { return c == 0.0; });
}

KindMapping usage_to_kind_vector(const std::vector<std::pair<std::string, std::uint64_t>>& usage) {
  KindMapping out;
  for (const auto& [key, count] : usage) {
    auto k = usage_key_from_name(key);
    if (!k) {
      out.notes.push_back(fmt::format("warning: unknown usage key \"{}\" ({}) ignored", key, count));
      continue;
    }
    switch (*k) {
      case UsageKey::IntOps: out.vector[BenchKind::IntOps] += static_cast<double>(count); break;
      case UsageKey::Ecdsa: out.vector[BenchKind::Ecdsa] += static_cast<double>(count); break;
      case UsageKey::Mimc: out.vector[BenchKind::Mimc] += static_cast<double>(count); break;
      case UsageKey::Sha256: out.vector[BenchKind::Sha2_1024] += static_cast<double>(count); break;
      case UsageKey::Keccak256: out.vector[BenchKind::Sha3_1024] += static_cast<double>(count); break;
      case UsageKey::GetBalance:
      case UsageKey::SetBalance:
        out.notes.push_back(
            fmt::format("note: {} ({}) has no benchmark; storage access treated as free", key, count));
        break;
    }
  }
  return out;
}

KindMapping usage_to_kind_vector(const UsageTable& usage) {
  return usage_to_kind_vector(usage.entries());
}

std::string_view schema_name(ZkSchema s) { return s == ZkSchema::Groth16 ? "Groth16" : "Plonk"; }

SelectionResult dynamic_select(const KindVector& usage, const Preference& pref,
                               const CostTensor& tensor) {
  pref.validate();
  const auto weights = pref.to_vector();
  const double weight_sum = weights[0] + weights[1] + weights[2];

  SelectionResult out;
  for (BackendId b : kAllBackends) {
    double s = 0.0;
    for (std::size_t k = 0; k < kBenchKindCount; ++k) {
      if (usage.counts[k] == 0.0) continue;
      double column = 0.0;
      for (std::size_t m = 0; m < kMetricCount; ++m) {
        column += tensor.normalized(b, static_cast<BenchKind>(k), static_cast<Metric>(m));
      }
      s += usage.counts[k] * column;
    }
    out.scores[ix(b)] = weight_sum * s;
    out.trace.push_back(fmt::format("score {} = {:.6f}", backend_label(b), out.scores[ix(b)]));
  }

  std::size_t best = 0;
  for (std::size_t b = 1; b < kBackendCount; ++b) {
    if (out.scores[b] < out.scores[best]) best = b;
  }
  out.backend = static_cast<BackendId>(best);
  if (usage.is_zero()) {
    out.trace.push_back("all-zero usage: every score is 0, lowest backend index wins");
  }
  out.trace.push_back(fmt::format("selected {}", backend_label(out.backend)));
  return out;
}

// ---- preference strings -----------------------------------------------------

VerifPref VerifPref::parse(std::string_view text) {
  text = trim(text);
  VerifPref out;
  if (text == "*") return out;

  std::string_view body = text;
  if (auto colon = text.rfind(':'); colon != std::string_view::npos) {
    body = text.substr(0, colon);
    auto gas = trim(text.substr(colon + 1));
    if (gas != "*") {
      out.max_gas = parse_uint<std::uint64_t>(gas);
      if (!out.max_gas) {
        throw InvalidPreference("verification preference: bad max_gas \"" + std::string(gas) + "\"");
      }
    }
  }
  auto last = body.rfind('-');
  if (last == std::string_view::npos || last == 0) {
    throw InvalidPreference("verification preference must look like curve-schema-vm:max_gas, got \"" +
                            std::string(text) + "\"");
  }
  auto mid = body.rfind('-', last - 1);
  if (mid == std::string_view::npos) {
    throw InvalidPreference("verification preference must look like curve-schema-vm:max_gas, got \"" +
                            std::string(text) + "\"");
  }
  out.curve = field(body.substr(0, mid));
  out.schema = field(body.substr(mid + 1, last - mid - 1));
  out.vm = field(body.substr(last + 1));
  for (const auto* f : {&out.curve, &out.schema, &out.vm}) {
    if (*f && f->value().empty()) {
      throw InvalidPreference("verification preference has an empty field: \"" + std::string(text) + "\"");
    }
  }
  return out;
}

namespace {

std::optional<BenchKind> benchmark_alias(std::string_view name) {
  auto n = lower(name);
  if (auto k = bench_kind_from_name(n)) return k;
  if (n == "sha256" || n == "sha2") return BenchKind::Sha2_1024;
  if (n == "keccak256" || n == "keccak" || n == "sha3") return BenchKind::Sha3_1024;
  if (n == "intops" || n == "int") return BenchKind::IntOps;
  return std::nullopt;
}

std::optional<std::vector<BackendId>> backend_alias(std::string_view name) {
  auto n = lower(name);
  if (n == "gnark") return std::vector{BackendId::GnarkGroth16, BackendId::GnarkPlonk};
  if (n == "risc_zero" || n == "risczero" || n == "risc0") return std::vector{BackendId::RiscZero};
  if (n == "gnark_groth16") return std::vector{BackendId::GnarkGroth16};
  if (n == "gnark_plonk") return std::vector{BackendId::GnarkPlonk};
  return std::nullopt;
}

}  // namespace

HwPref HwPref::parse(std::string_view text) {
  text = trim(text);
  HwPref out;
  if (text == "*") return out;

  std::string_view body = text;
  if (auto colon = text.rfind(':'); colon != std::string_view::npos) {
    body = text.substr(0, colon);
    auto cores = trim(text.substr(colon + 1));
    if (cores != "*") {
      out.num_cores = parse_uint<std::uint32_t>(cores);
      if (!out.num_cores || *out.num_cores == 0) {
        throw InvalidPreference("hardware preference: bad core count \"" + std::string(cores) + "\"");
      }
    }
  }

  std::vector<std::string_view> parts;
  for (std::size_t start = 0;;) {
    auto dash = body.find('-', start);
    parts.push_back(trim(body.substr(start, dash == std::string_view::npos ? dash : dash - start)));
    if (dash == std::string_view::npos) break;
    start = dash + 1;
  }
  if (parts.size() != 1 && parts.size() != 3) {
    throw InvalidPreference("hardware preference must look like benchmark-backend-device:cores, got \"" +
                            std::string(text) + "\"");
  }
  std::string_view device = parts.back();
  if (parts.size() == 3) {
    if (parts[0] != "*") {
      out.benchmark = benchmark_alias(parts[0]);
      if (!out.benchmark) {
        throw InvalidPreference("hardware preference: unknown benchmark \"" + std::string(parts[0]) + "\"");
      }
    }
    if (parts[1] != "*") {
      out.backends = backend_alias(parts[1]);
      if (!out.backends) {
        throw InvalidPreference("hardware preference: unknown backend \"" + std::string(parts[1]) + "\"");
      }
    }
  }
  auto d = lower(device);
  if (d == "*") {
    out.device = DeviceRequest::Any;
  } else if (d == "cpu") {
    out.device = DeviceRequest::Cpu;
  } else if (d == "gpu") {
    out.device = DeviceRequest::Gpu;
  } else if (d == "apu") {
    out.device = DeviceRequest::Apu;
  } else if (d == "current") {
    out.device = DeviceRequest::Current;
  } else {
    throw InvalidPreference("hardware preference: unknown device \"" + std::string(device) + "\"");
  }
  return out;
}

bool HwPref::admits(BackendId b) const {
  return !backends || std::find(backends->begin(), backends->end(), b) != backends->end();
}

std::string ResolvedDevice::to_string() const {
  return std::string(device_class_name(device)) + ":" + std::to_string(cores);
}

// ---- extended selector ------------------------------------------------------

double interpolate_time(double x, double t_x, double y, double t_y, double n) {
  if (x == y) {
    throw DegenerateSeries("interpolation needs two distinct core counts, got " + fmt::format("{}", x) +
                           " twice");
  }
  return t_x + (t_y - t_x) * (n - x) / (y - x);
}

std::vector<Candidate> verification_candidates(const KindVector& usage, const VerifPref& verif,
                                               const CostTensor& tensor,
                                               std::vector<std::string>* trace) {
  auto log = [&](std::string line) {
    if (trace) trace->push_back(std::move(line));
  };
  static constexpr std::array<std::pair<BackendId, ZkSchema>, 3> kOptions = {{
      {BackendId::RiscZero, ZkSchema::Groth16},
      {BackendId::GnarkGroth16, ZkSchema::Groth16},
      {BackendId::GnarkPlonk, ZkSchema::Plonk},
  }};

  std::vector<Candidate> out;
  for (auto [backend, schema] : kOptions) {
    auto name = fmt::format("{}-{}", backend_label(backend), schema_name(schema));
    if (verif.curve && squash(*verif.curve) != "bn254") {
      log(fmt::format("step 1: drop {} (curve {} unsupported; only BN254)", name, *verif.curve));
      continue;
    }
    if (verif.schema && lower(*verif.schema) != lower(schema_name(schema))) {
      log(fmt::format("step 1: drop {} (schema is not {})", name, *verif.schema));
      continue;
    }
    if (verif.vm && lower(*verif.vm) != "evm") {
      log(fmt::format("step 1: drop {} (vm {} unsupported; only EVM)", name, *verif.vm));
      continue;
    }

    double gas = 0.0;
    for (std::size_t k = 0; k < kBenchKindCount; ++k) {
      if (usage.counts[k] == 0.0 && !usage.is_zero()) continue;
      gas = std::max(gas, tensor.value(backend, static_cast<BenchKind>(k), Metric::VerifyGas));
    }
    if (verif.max_gas && gas > static_cast<double>(*verif.max_gas)) {
      log(fmt::format("step 1: drop {} (gas {:.0f} > {})", name, gas, *verif.max_gas));
      continue;
    }
    log(fmt::format("step 1: keep {} (gas {:.0f})", name, gas));
    out.push_back({backend, schema, gas});
  }
  return out;
}

namespace {

struct Estimate {
  double time_ms;
  std::string how;
};

// Proof time at `cores` from a sorted series of measured points.
Estimate estimate_from_series(const DeviceCatalog::Series& series, std::uint32_t cores) {
  const double n = cores;
  for (const auto& [c, t] : series) {
    if (c == cores) return {t, fmt::format("measured at {} cores", c)};
  }
  if (series.size() == 1) {
    return {series[0].second,
            fmt::format("warning: single point at {} cores, clamped to it", series[0].first)};
  }
  if (n > series.front().first && n < series.back().first) {
    auto hi = std::find_if(series.begin(), series.end(), [&](const auto& p) { return p.first > cores; });
    auto lo = hi - 1;
    double t = interpolate_time(lo->first, lo->second, hi->first, hi->second, n);
    return {t, fmt::format("interpolated between {} and {} cores", lo->first, hi->first)};
  }
  bool below = n < series.front().first;
  const auto& a = below ? series[0] : series[series.size() - 2];
  const auto& b = below ? series[1] : series.back();
  double t = interpolate_time(a.first, a.second, b.first, b.second, n);
  const auto& nearest = below ? series.front() : series.back();
  if (t <= 0.0) {
    return {nearest.second, fmt::format("warning: extrapolation to {} cores is non-positive; clamped "
                                        "to {} cores",
                                        cores, nearest.first)};
  }
  return {t, fmt::format("warning: extrapolated from {} and {} cores", a.first, b.first)};
}

}  // namespace

ExtendedResult extended_select(const KindVector& usage, const VerifPref& verif, const HwPref& hw,
                               const CostTensor& tensor, const DeviceCatalog& devices,
                               const ExtendedOptions& options) {
  ExtendedResult result;
  SelectionResult& sel = result.selection;
  sel.scores.fill(kInf);
  auto& trace = sel.trace;

  // Steps 1-3: proof-verification constraint.
  auto candidates = verification_candidates(usage, verif, tensor, &trace);
  result.verification_survivors = candidates;
  if (candidates.empty()) {
    trace.push_back("step 2: no backend satisfies the verification preference");
    throw TooManyConstraints(2, "modify the gas limit", trace);
  }

  // Workload weights used for time estimates.
  KindVector weights = usage;
  if (hw.benchmark) {
    weights = KindVector{};
    weights[*hw.benchmark] = 1.0;
    trace.push_back(fmt::format("hardware preference weights the {} benchmark only",
                                bench_kind_name(*hw.benchmark)));
  }

  auto baseline_time = [&](BackendId b) {
    double t = 0.0;
    for (std::size_t k = 0; k < kBenchKindCount; ++k) {
      t += weights.counts[k] * tensor.value(b, static_cast<BenchKind>(k), Metric::ProofGenTimeMs);
    }
    return t;
  };
  for (const auto& c : candidates) sel.scores[ix(c.backend)] = baseline_time(c.backend);

  auto finish = [&](const Candidate& c, int step) {
    sel.backend = c.backend;
    sel.schema = c.schema;
    trace.push_back(fmt::format("step {}: selected {}-{}", step, backend_label(c.backend),
                                schema_name(c.schema)));
    return result;
  };
  if (candidates.size() == 1) return finish(candidates.front(), 3);

  // Step 4: resolve the hardware preference to a concrete device.
  ResolvedDevice device{DeviceClass::Cpu, options.baseline_cpu_cores};
  switch (hw.device) {
    case DeviceRequest::Any:
      if (hw.num_cores) device.cores = *hw.num_cores;
      break;
    case DeviceRequest::Cpu:
      device = {DeviceClass::Cpu, hw.num_cores.value_or(options.baseline_cpu_cores)};
      break;
    case DeviceRequest::Gpu:
      device = {DeviceClass::Gpu, hw.num_cores.value_or(options.baseline_accel_cores)};
      break;
    case DeviceRequest::Apu:
      device = {DeviceClass::Apu, hw.num_cores.value_or(options.baseline_accel_cores)};
      break;
    case DeviceRequest::Current: {
      DeviceInfo info = options.device_info ? options.device_info() : probe_local_device();
      if (info.unified_memory) {
        device = {DeviceClass::Apu, info.gpu_cores > 0 ? info.gpu_cores : info.cpu_cores};
      } else if (info.gpu_cores > 0) {
        device = {DeviceClass::Gpu, info.gpu_cores};
      } else {
        device = {DeviceClass::Cpu, std::max(1u, info.cpu_cores)};
      }
      break;
    }
  }
  result.device = device;
  trace.push_back(fmt::format("step 4: hardware resolved to {}", device.to_string()));

  // Steps 5-8: keep candidates that the hardware preference admits and that
  // have measurements on an accelerator class.
  std::vector<Candidate> supported;
  for (const auto& c : candidates) {
    if (!hw.admits(c.backend)) {
      trace.push_back(fmt::format("step 6: drop {} (excluded by hardware preference)", backend_label(c.backend)));
    } else if (device.device != DeviceClass::Cpu && !devices.supports(c.backend, device.device)) {
      trace.push_back(fmt::format("step 6: drop {} (no {} benchmarks)", backend_label(c.backend),
                                  device_class_name(device.device)));
    } else {
      supported.push_back(c);
    }
  }
  for (const auto& c : candidates) {
    if (std::none_of(supported.begin(), supported.end(),
                     [&](const Candidate& s) { return s.backend == c.backend; })) {
      sel.scores[ix(c.backend)] = kInf;
    }
  }
  if (supported.empty()) {
    trace.push_back("step 7: no backend satisfies the hardware preference");
    throw TooManyConstraints(7, "modify the hardware preference", trace);
  }
  if (supported.size() == 1) return finish(supported.front(), 8);

  // Step 9: estimate proof time on the resolved device.
  for (const auto& c : supported) {
    double total = 0.0;
    for (std::size_t k = 0; k < kBenchKindCount; ++k) {
      if (weights.counts[k] == 0.0) continue;
      auto kind = static_cast<BenchKind>(k);
      DeviceCatalog::Series series = devices.series(c.backend, kind, device.device);
      const double base = tensor.value(c.backend, kind, Metric::ProofGenTimeMs);
      if (device.device == DeviceClass::Cpu) {
        auto at = std::lower_bound(series.begin(), series.end(),
                                   std::pair<std::uint32_t, double>{options.baseline_cpu_cores, 0.0});
        if (at == series.end() || at->first != options.baseline_cpu_cores) {
          series.insert(at, {options.baseline_cpu_cores, base});
        }
      }
      Estimate e;
      if (series.empty()) {
        e = {base, fmt::format("warning: no {} series, using baseline {} time",
                               device_class_name(device.device), bench_kind_name(kind))};
      } else {
        e = estimate_from_series(series, device.cores);
      }
      trace.push_back(fmt::format("step 9: {} {} on {}: {:.3f} ms ({})", backend_label(c.backend),
                                  bench_kind_name(kind), device.to_string(), e.time_ms, e.how));
      total += weights.counts[k] * e.time_ms;
    }
    sel.scores[ix(c.backend)] = total;
  }

  // Step 10: fastest; candidates are already in tie-break order.
  const Candidate* best = &supported.front();
  for (const auto& c : supported) {
    if (sel.scores[ix(c.backend)] < sel.scores[ix(best->backend)]) best = &c;
  }
  return finish(*best, 10);
}

}  // namespace presto
