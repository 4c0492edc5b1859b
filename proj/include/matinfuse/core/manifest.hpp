// Copyright 2026 The matinfuse Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

namespace matinfuse {

enum class ItemStatus { kOk, kSkip, kError };

struct ItemRecord {
  std::string id;
  ItemStatus status = ItemStatus::kOk;
  std::string reason;
  nlohmann::json details;  // stage specific; null when unused
};

// One per stage run. Everything except `timing` is a pure function of the
// inputs; determinism checks strip `timing`.
struct RunManifest {
  std::string stage;
  std::string config_hash;
  std::uint64_t seed = 0;
  std::vector<ItemRecord> items;
  double wall_time_s = 0.0;

  [[nodiscard]] std::size_t count(ItemStatus status) const;
  [[nodiscard]] double failure_rate() const;
  [[nodiscard]] nlohmann::json to_json() const;
  // Written atomically.
  void write(const std::filesystem::path& path) const;
};

std::string_view status_name(ItemStatus status);

// Copy of a manifest JSON without its timing block.
nlohmann::json strip_timing(nlohmann::json manifest);

}  // namespace matinfuse
