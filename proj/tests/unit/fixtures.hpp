// Copyright 2026 The matinfuse Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <filesystem>
#include <string>

#include "matinfuse/benchmetrics/annotation.hpp"
#include "matinfuse/core/image.hpp"

namespace matinfuse::testing {

// 320x320: a 280x280 block of i.i.d. uniform noise on [0.2, 0.9] in the top
// left, and a 40-px border strip of dark noise on [0, 0.12] whose histograms
// do not overlap the block's.
RgbImage planted_texture(std::uint64_t seed);

RgbImage constant_image(int w, int h, double value);

// Noise on [lo, hi] per channel.
RgbImage noise_image(int w, int h, double lo, double hi, std::uint64_t seed);

// Quadrants of differently ranged noise; used to keep the region search busy
// on realistic sizes.
RgbImage patchwork_image(int w, int h, std::uint64_t seed);

// Random annotation with n_groups groups, up to points_per_group points each
// (at least one), random partial-similarity pairs.
PointAnnotation random_annotation(std::uint64_t seed, int n_groups, int max_points_per_group);

// Fresh empty directory under the system temp dir.
std::filesystem::path scratch_dir(const std::string& name);

// Writes a small corpus of planted and noise images to dir and returns it.
std::filesystem::path write_corpus(const std::filesystem::path& dir, int planted, int noise);

// Sorted relative path -> bytes comparison of two trees, ignoring the timing
// block of every manifest.json. Empty string when equal.
std::string diff_trees(const std::filesystem::path& a, const std::filesystem::path& b);

}  // namespace matinfuse::testing
