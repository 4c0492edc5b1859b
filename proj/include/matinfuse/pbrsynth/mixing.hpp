// Copyright 2026 The matinfuse Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>

#include "matinfuse/pbrsynth/material.hpp"

namespace matinfuse {

enum class MixMode { kPerMaterial, kPerMap };

// Weight of the first operand for albedo and each property. The normal map
// follows the height weight.
struct MixWeights {
  double albedo = 1.0;
  std::array<double, kNumProperties> properties{1.0, 1.0, 1.0, 1.0, 1.0};

  bool operator==(const MixWeights&) const = default;
};

MixWeights draw_mix_weights(MixMode mode, std::uint64_t seed);

// out = w a + (1 - w) b per map. b is resampled bilinearly to a's size when
// they differ. Normals are renormalized after averaging. At a weight of
// exactly 0 or 1 the operand's map (or normals) is copied unchanged.
PbrMaterial mix_pbr(const PbrMaterial& a, const PbrMaterial& b, const MixWeights& weights);
PbrMaterial mix_pbr(const PbrMaterial& a, const PbrMaterial& b, MixMode mode, std::uint64_t seed);

}  // namespace matinfuse
