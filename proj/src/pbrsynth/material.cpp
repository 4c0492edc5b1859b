// Copyright 2026 The matinfuse Authors.
// SPDX-License-Identifier: Apache-2.0

#include "matinfuse/pbrsynth/material.hpp"

#include <cmath>

#include "matinfuse/core/rng.hpp"

namespace matinfuse {
namespace {

constexpr std::array<std::string_view, kNumProperties> kPropertyNames = {
    "roughness", "metallic", "height", "transmission", "specular"};

bool in_unit(double v) { return v >= 0.0 && v <= 1.0; }

}  // namespace

std::string_view property_name(Property property) {
  return kPropertyNames[static_cast<int>(property)];
}

double sample(const PropertyMap& map, int x, int y) {
  if (const double* u = std::get_if<double>(&map)) return *u;
  return std::get<Plane>(map).at(x, y);
}

PbrMaterial make_pbr(const TextureTile& tile, std::uint64_t seed, const SynthOptions& options) {
  const ImageChannelStack stack = decompose_channels(tile.pixels);
  PbrMaterial material;
  material.id = tile.id();
  material.width = tile.pixels.width;
  material.height = tile.pixels.height;
  material.albedo = to_planes(tile.pixels);
  material.provenance.source_id = tile.source_id;
  material.provenance.region = tile.region;
  material.provenance.seed = seed;
  for (Property p : kAllProperties) {
    const int i = static_cast<int>(p);
    const std::uint64_t sub_seed = derive_seed(seed, property_name(p));
    PropertySynthesis synth = synth_property_map(stack, sub_seed, options);
    material.properties[i] = std::move(synth.value);
    material.provenance.augments[i] = synth.augment;
    material.provenance.property_seeds[i] = sub_seed;
  }
  Rng normal_rng(derive_seed(seed, "normal"));
  material.provenance.normal_strength =
      normal_rng.uniform(options.normal_strength_min, options.normal_strength_max);
  const PropertyMap& height = material[Property::kHeight];
  material.normal = is_uniform(height)
                        ? flat_normal(material.width, material.height)
                        : height_to_normal(std::get<Plane>(height),
                                           material.provenance.normal_strength);
  return material;
}

std::string check_material(const PbrMaterial& m) {
  const auto sized = [&](const Plane& p) { return p.width == m.width && p.height == m.height; };
  for (const auto& c : m.albedo.channels) {
    if (!sized(c)) return "albedo size mismatch";
    for (double v : c.values) {
      if (!in_unit(v)) return "albedo value outside [0,1]";
    }
  }
  for (Property p : kAllProperties) {
    const PropertyMap& map = m[p];
    const std::string name(property_name(p));
    if (const double* u = std::get_if<double>(&map)) {
      if (!in_unit(*u)) return name + " value outside [0,1]";
      continue;
    }
    const Plane& plane = std::get<Plane>(map);
    if (!sized(plane)) return name + " size mismatch";
    for (double v : plane.values) {
      if (!in_unit(v)) return name + " value outside [0,1]";
    }
  }
  for (const auto& c : m.normal.encoded) {
    if (!sized(c)) return "normal size mismatch";
  }
  for (int y = 0; y < m.height; ++y) {
    for (int x = 0; x < m.width; ++x) {
      const auto n = decode_normal(m.normal, x, y);
      const double len = std::sqrt(n[0] * n[0] + n[1] * n[1] + n[2] * n[2]);
      if (std::abs(len - 1.0) > 1e-3) return "normal not unit length";
    }
  }
  return {};
}

}  // namespace matinfuse
