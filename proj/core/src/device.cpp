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

#include "presto/device.hpp"

#include <algorithm>
#include <cmath>
#include <json.hpp>
#include <thread>

#include "presto/errors.hpp"

namespace presto {

std::string_view device_class_name(DeviceClass d) {
  switch (d) {
    case DeviceClass::Cpu: return "cpu";
    case DeviceClass::Gpu: return "gpu";
    case DeviceClass::Apu: return "apu";
  }
  return "?";
}

std::optional<DeviceClass> device_class_from_name(std::string_view name) {
  if (name == "cpu") return DeviceClass::Cpu;
  if (name == "gpu") return DeviceClass::Gpu;
  if (name == "apu") return DeviceClass::Apu;
  return std::nullopt;
}

DeviceCatalog DeviceCatalog::from_points(const std::vector<DevicePoint>& points) {
  DeviceCatalog out;
  for (const auto& p : points) {
    if (p.cores == 0) throw DataError("device point with zero cores");
    if (!std::isfinite(p.time_ms) || p.time_ms <= 0.0) {
      throw DataError("device point with non-positive time_ms");
    }
    out.series_[{p.backend, p.kind, p.device}].emplace_back(p.cores, p.time_ms);
  }
  for (auto& [key, series] : out.series_) {
    std::sort(series.begin(), series.end());
    for (std::size_t i = 1; i < series.size(); ++i) {
      if (series[i].first == series[i - 1].first) {
        throw DataError("device series for " + std::string(backend_label(std::get<0>(key))) + "/" +
                        std::string(bench_kind_name(std::get<1>(key))) + "/" +
                        std::string(device_class_name(std::get<2>(key))) +
                        " repeats core count " + std::to_string(series[i].first));
      }
    }
  }
  return out;
}

DeviceCatalog DeviceCatalog::from_json(std::string_view json_text) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw DataError(std::string("device file is not valid JSON: ") + e.what());
  }
  if (!doc.is_array()) throw DataError("device file must be a JSON array");

  std::vector<DevicePoint> points;
  for (const auto& item : doc) {
    try {
      auto backend = item.at("backend").get<std::string>();
      auto kind = item.at("kind").get<std::string>();
      auto device = item.at("device").get<std::string>();
      auto b = backend_from_label(backend);
      auto k = bench_kind_from_name(kind);
      auto d = device_class_from_name(device);
      if (!b) throw DataError("device file: unknown backend \"" + backend + "\"");
      if (!k) throw DataError("device file: unknown kind \"" + kind + "\"");
      if (!d) throw DataError("device file: unknown device \"" + device + "\"");
      const auto& cores = item.at("cores");
      if (!cores.is_number_unsigned()) throw DataError("device file: cores must be a positive integer");
      points.push_back({*b, *k, *d, cores.get<std::uint32_t>(), item.at("time_ms").get<double>()});
    } catch (const json::exception& e) {
      throw DataError(std::string("device file: malformed record: ") + e.what());
    }
  }
  return from_points(points);
}

const DeviceCatalog::Series& DeviceCatalog::series(BackendId b, BenchKind k, DeviceClass d) const {
  static const Series kEmpty;
  auto it = series_.find({b, k, d});
  return it == series_.end() ? kEmpty : it->second;
}

bool DeviceCatalog::supports(BackendId b, DeviceClass d) const {
  return std::any_of(series_.begin(), series_.end(), [&](const auto& entry) {
    return std::get<0>(entry.first) == b && std::get<2>(entry.first) == d;
  });
}

DeviceInfo probe_local_device() {
  DeviceInfo info;
  info.cpu_cores = std::max(1u, std::thread::hardware_concurrency());
#if defined(__APPLE__) && defined(__aarch64__)
  info.unified_memory = true;
#endif
  return info;
}

}  // namespace presto
