// Copyright 2026 The matinfuse Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "matinfuse/core/image.hpp"
#include "matinfuse/imagemaps/channels.hpp"
#include "matinfuse/imagemaps/region_map.hpp"
#include "matinfuse/texextract/texture_tile.hpp"

namespace matinfuse {

enum class Property { kRoughness = 0, kMetallic, kHeight, kTransmission, kSpecular };
inline constexpr int kNumProperties = 5;
inline constexpr std::array<Property, kNumProperties> kAllProperties = {
    Property::kRoughness, Property::kMetallic, Property::kHeight, Property::kTransmission,
    Property::kSpecular};

std::string_view property_name(Property property);

// Either a spatial map or a single value, both in [0,1].
using PropertyMap = std::variant<double, Plane>;

inline bool is_uniform(const PropertyMap& map) { return std::holds_alternative<double>(map); }
// Value at a pixel regardless of representation.
double sample(const PropertyMap& map, int x, int y);

// Normal map stored encoded: (n + 1) / 2 per component.
struct NormalMap {
  std::array<Plane, 3> encoded;

  [[nodiscard]] int width() const { return encoded[0].width; }
  [[nodiscard]] int height() const { return encoded[0].height; }
  bool operator==(const NormalMap&) const = default;
};

struct AugmentSpec {
  Channel channel = Channel::kV;
  double scale = 1.0;
  double shift = 0.0;
  std::optional<RampParams> ramp;
  std::optional<double> blur_sigma;
  bool invert = false;

  bool operator==(const AugmentSpec&) const = default;
};

struct AugmentRanges {
  double scale_min = 0.5;
  double scale_max = 1.5;
  double shift_min = -0.3;
  double shift_max = 0.3;
  double blur_max = 2.0;
  double ramp_probability = 0.5;
  double invert_probability = 0.5;
  double min_ramp_gap = 0.05;
};

struct SynthOptions {
  double uniform_probability = 0.25;
  AugmentRanges augment;
  double normal_strength_min = 0.5;
  double normal_strength_max = 4.0;
};

// Blur, then scale/shift and clamp, then the optional ramp, then invert.
Plane apply_augment(const ImageChannelStack& stack, const AugmentSpec& spec);
AugmentSpec draw_augment(Rng& rng, const AugmentRanges& ranges);

struct PropertySynthesis {
  PropertyMap value;
  std::optional<AugmentSpec> augment;  // absent on the uniform branch
  std::uint64_t seed = 0;
};

PropertySynthesis synth_property_map(const ImageChannelStack& stack, std::uint64_t seed,
                                     const SynthOptions& options = {});
PropertySynthesis synth_property_map(const TextureTile& tile, std::uint64_t seed,
                                     const SynthOptions& options = {});

// n = normalize(-s dh/dx, -s dh/dy, 1), central differences with clamped
// borders, in units of one pixel. Throws ParameterError if strength <= 0.
NormalMap height_to_normal(const Plane& height, double strength);
NormalMap flat_normal(int width, int height);
// Decoded unit vector at a pixel.
std::array<double, 3> decode_normal(const NormalMap& normals, int x, int y);

struct MaterialProvenance {
  std::string source_id;
  CellRect region;
  std::uint64_t seed = 0;
  std::array<std::optional<AugmentSpec>, kNumProperties> augments;
  std::array<std::uint64_t, kNumProperties> property_seeds{};
  double normal_strength = 0.0;
  std::vector<std::string> parents;  // set for mixed materials
};

struct PbrMaterial {
  std::string id;
  int width = 0;
  int height = 0;
  RgbPlanes albedo;  // encoded colour values in [0,1]
  std::array<PropertyMap, kNumProperties> properties;
  NormalMap normal;
  MaterialProvenance provenance;

  PropertyMap& operator[](Property p) { return properties[static_cast<int>(p)]; }
  const PropertyMap& operator[](Property p) const { return properties[static_cast<int>(p)]; }
};

// Albedo is the tile itself; properties use independent sub-seeds; the normal
// comes from the height property.
PbrMaterial make_pbr(const TextureTile& tile, std::uint64_t seed, const SynthOptions& options = {});

// Empty string when the invariants hold, else a description of the first
// violation.
std::string check_material(const PbrMaterial& material);

}  // namespace matinfuse
