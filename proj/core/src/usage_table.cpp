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

#include "presto/usage_table.hpp"

#include <limits>

namespace presto {
namespace {

constexpr std::array<std::string_view, kUsageKeyCount> kNames = {
    "int_ops", "sha256", "keccak256", "mimc", "ecdsa", "get_balance", "set_balance",
};

constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) { return a > kMax - b ? kMax : a + b; }

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  return a > kMax / b ? kMax : a * b;
}

}  // namespace

std::string_view usage_key_name(UsageKey key) { return kNames[static_cast<std::size_t>(key)]; }

std::optional<UsageKey> usage_key_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kNames.size(); ++i) {
    if (kNames[i] == name) return static_cast<UsageKey>(i);
  }
  return std::nullopt;
}

void UsageTable::add(UsageKey key, std::uint64_t n) {
  auto& slot = counts_[static_cast<std::size_t>(key)];
  slot = sat_add(slot, n);
}

void UsageTable::merge(const UsageTable& other) {
  for (std::size_t i = 0; i < kUsageKeyCount; ++i) counts_[i] = sat_add(counts_[i], other.counts_[i]);
}

UsageTable UsageTable::scaled(std::uint64_t factor) const {
  UsageTable out;
  for (std::size_t i = 0; i < kUsageKeyCount; ++i) out.counts_[i] = sat_mul(counts_[i], factor);
  return out;
}

std::uint64_t UsageTable::count(std::string_view name) const {
  auto key = usage_key_from_name(name);
  return key ? count(*key) : 0;
}

bool UsageTable::empty() const {
  for (auto c : counts_) {
    if (c != 0) return false;
  }
  return true;
}

std::vector<std::pair<std::string, std::uint64_t>> UsageTable::entries() const {
  std::vector<std::pair<std::string, std::uint64_t>> out;
  for (std::size_t i = 0; i < kUsageKeyCount; ++i) {
    if (counts_[i] != 0) out.emplace_back(std::string(kNames[i]), counts_[i]);
  }
  return out;
}

std::string UsageTable::to_json() const {
  std::string out = "{";
  bool first = true;
  for (const auto& [name, n] : entries()) {
    if (!first) out += ", ";
    first = false;
    out += '"';
    out += name;
    out += "\": ";
    out += std::to_string(n);
  }
  out += '}';
  return out;
}

}  // namespace presto
