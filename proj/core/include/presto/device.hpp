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

#ifndef PRESTO_DEVICE_HPP_
#define PRESTO_DEVICE_HPP_

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "presto/benchstore.hpp"

namespace presto {

enum class DeviceClass { Cpu, Gpu, Apu };

std::string_view device_class_name(DeviceClass d);
std::optional<DeviceClass> device_class_from_name(std::string_view name);

/// One measured proof-generation time on a device with a given core count.
struct DevicePoint {
  BackendId backend;
  BenchKind kind;
  DeviceClass device;
  std::uint32_t cores;
  double time_ms;
};

/// Measured (cores, time) series per (backend, kind, device class).
class DeviceCatalog {
 public:
  using Series = std::vector<std::pair<std::uint32_t, double>>;

  DeviceCatalog() = default;

  /// Throws DataError on non-positive cores or times and on repeated core
  /// counts within one series.
  static DeviceCatalog from_points(const std::vector<DevicePoint>& points);

  /// JSON array of {"backend", "kind", "device", "cores", "time_ms"}.
  static DeviceCatalog from_json(std::string_view json_text);

  /// Points sorted by strictly increasing core count; empty if unmeasured.
  const Series& series(BackendId b, BenchKind k, DeviceClass d) const;
  /// True if any series exists for the backend on that device class.
  bool supports(BackendId b, DeviceClass d) const;
  bool empty() const { return series_.empty(); }

 private:
  std::map<std::tuple<BackendId, BenchKind, DeviceClass>, Series> series_;
};

/// What the local machine offers, as seen by the `current` hardware keyword.
struct DeviceInfo {
  std::uint32_t cpu_cores = 1;
  std::uint32_t gpu_cores = 0;  // 0 when no usable GPU
  bool unified_memory = false;  // Apple-silicon style shared CPU/GPU memory
};

using DeviceInfoProvider = std::function<DeviceInfo()>;

/// CPU count from the standard library; GPU detection is not attempted.
DeviceInfo probe_local_device();

}  // namespace presto

#endif  // PRESTO_DEVICE_HPP_
