// Copyright 2026 The matinfuse Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <chrono>
#include <filesystem>
#include <optional>
#include <string>

#include "matinfuse/core/manifest.hpp"
#include "matinfuse/pipeline/config.hpp"

namespace matinfuse {

struct StageClock {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  [[nodiscard]] double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
};

inline RunManifest new_manifest(std::string stage, const PipelineConfig& config) {
  RunManifest m;
  m.stage = std::move(stage);
  m.config_hash = config_hash(config);
  m.seed = config.seed;
  return m;
}

inline void finish_manifest(RunManifest& manifest, const StageClock& clock,
                            const std::optional<std::filesystem::path>& path) {
  manifest.wall_time_s = clock.seconds();
  if (path) manifest.write(*path);
}

}  // namespace matinfuse
