// Copyright 2026 The matinfuse Authors.
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>

#include "matinfuse/core/rng.hpp"
#include "matinfuse/pbrsynth/material.hpp"

namespace matinfuse {

Plane apply_augment(const ImageChannelStack& stack, const AugmentSpec& spec) {
  Plane out = stack[spec.channel];
  if (spec.blur_sigma && *spec.blur_sigma > 0.0) out = gaussian_blur(out, *spec.blur_sigma);
  for (double& v : out.values) v = std::clamp(v * spec.scale + spec.shift, 0.0, 1.0);
  if (spec.ramp) out = ramp_threshold(out, *spec.ramp);
  if (spec.invert) {
    for (double& v : out.values) v = 1.0 - v;
  }
  for (double& v : out.values) v = std::clamp(v, 0.0, 1.0);
  return out;
}

AugmentSpec draw_augment(Rng& rng, const AugmentRanges& ranges) {
  AugmentSpec spec;
  spec.channel = static_cast<Channel>(rng.index(kNumChannels));
  spec.scale = rng.uniform(ranges.scale_min, ranges.scale_max);
  spec.shift = rng.uniform(ranges.shift_min, ranges.shift_max);
  spec.blur_sigma = rng.uniform(0.0, ranges.blur_max);
  if (rng.bernoulli(ranges.ramp_probability)) spec.ramp = draw_ramp(rng, ranges.min_ramp_gap);
  spec.invert = rng.bernoulli(ranges.invert_probability);
  return spec;
}

PropertySynthesis synth_property_map(const ImageChannelStack& stack, std::uint64_t seed,
                                     const SynthOptions& options) {
  Rng rng(seed);
  PropertySynthesis out;
  out.seed = seed;
  if (rng.bernoulli(options.uniform_probability)) {
    out.value = rng.uniform();
    return out;
  }
  out.augment = draw_augment(rng, options.augment);
  out.value = apply_augment(stack, *out.augment);
  return out;
}

PropertySynthesis synth_property_map(const TextureTile& tile, std::uint64_t seed,
                                     const SynthOptions& options) {
  return synth_property_map(decompose_channels(tile.pixels), seed, options);
}

}  // namespace matinfuse
