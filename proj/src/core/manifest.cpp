// Copyright 2026 The matinfuse Authors.
// SPDX-License-Identifier: Apache-2.0

#include "matinfuse/core/manifest.hpp"

#include <algorithm>

#include "matinfuse/core/io.hpp"

namespace matinfuse {

std::string_view status_name(ItemStatus status) {
  switch (status) {
    case ItemStatus::kOk:
      return "ok";
    case ItemStatus::kSkip:
      return "skip";
    case ItemStatus::kError:
      return "error";
  }
  return "error";
}

std::size_t RunManifest::count(ItemStatus status) const {
  return static_cast<std::size_t>(std::count_if(
      items.begin(), items.end(), [&](const ItemRecord& r) { return r.status == status; }));
}

double RunManifest::failure_rate() const {
  if (items.empty()) return 0.0;
  return static_cast<double>(count(ItemStatus::kError)) / static_cast<double>(items.size());
}

Json RunManifest::to_json() const {
  Json records = Json::array();
  for (const auto& item : items) {
    Json r = {{"id", item.id}, {"status", std::string(status_name(item.status))}};
    if (!item.reason.empty()) r["reason"] = item.reason;
    if (!item.details.is_null()) r["details"] = item.details;
    records.push_back(std::move(r));
  }
  return {{"stage", stage},
          {"tool_version", MATINFUSE_VERSION},
          {"config_hash", config_hash},
          {"seed", seed},
          {"counts",
           {{"attempted", items.size()},
            {"ok", count(ItemStatus::kOk)},
            {"skip", count(ItemStatus::kSkip)},
            {"error", count(ItemStatus::kError)}}},
          {"items", records},
          {"timing", {{"wall_time_s", wall_time_s}}}};
}

void RunManifest::write(const fs::path& path) const { write_json_atomic(path, to_json()); }

Json strip_timing(Json manifest) {
  manifest.erase("timing");
  return manifest;
}

}  // namespace matinfuse
