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

#ifndef PRESTO_USAGE_TABLE_HPP_
#define PRESTO_USAGE_TABLE_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace presto {

/// The closed set of operation kinds the interpreter counts.
enum class UsageKey { IntOps, Sha256, Keccak256, Mimc, Ecdsa, GetBalance, SetBalance };

inline constexpr std::size_t kUsageKeyCount = 7;

std::string_view usage_key_name(UsageKey key);
std::optional<UsageKey> usage_key_from_name(std::string_view name);

/// Operation-kind -> occurrence count. Zero counts are never reported and all
/// arithmetic saturates at UINT64_MAX.
///
/// Entries are listed in the fixed key order (int_ops, sha256, keccak256,
/// mimc, ecdsa, get_balance, set_balance), which is also the JSON order.
class UsageTable {
 public:
  void add(UsageKey key, std::uint64_t n = 1);
  void merge(const UsageTable& other);
  UsageTable scaled(std::uint64_t factor) const;

  std::uint64_t count(UsageKey key) const { return counts_[static_cast<std::size_t>(key)]; }
  /// Count by name; 0 for absent or unknown names.
  std::uint64_t count(std::string_view name) const;
  bool contains(UsageKey key) const { return count(key) > 0; }
  bool empty() const;

  std::vector<std::pair<std::string, std::uint64_t>> entries() const;

  /// Single-line JSON, e.g. {"int_ops": 6, "get_balance": 7}.
  std::string to_json() const;

  bool operator==(const UsageTable&) const = default;

 private:
  std::array<std::uint64_t, kUsageKeyCount> counts_{};
};

}  // namespace presto

#endif  // PRESTO_USAGE_TABLE_HPP_
