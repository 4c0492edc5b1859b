// Copyright 2026 The matinfuse Authors.
// SPDX-License-Identifier: Apache-2.0

#include "matinfuse/pbrsynth/material_io.hpp"

#include "matinfuse/core/error.hpp"
#include "matinfuse/core/io.hpp"

namespace matinfuse {
namespace {

RgbPlanes normal_planes(const NormalMap& n) {
  RgbPlanes out;
  out.channels = n.encoded;
  return out;
}

}  // namespace

Json augment_to_json(const AugmentSpec& spec) {
  Json j = {{"channel", std::string(channel_name(spec.channel))},
            {"scale", spec.scale},
            {"shift", spec.shift},
            {"invert", spec.invert}};
  j["blur_sigma"] = spec.blur_sigma ? Json(*spec.blur_sigma) : Json(nullptr);
  j["ramp"] = spec.ramp ? Json{{"t_low", spec.ramp->t_low}, {"t_high", spec.ramp->t_high}}
                        : Json(nullptr);
  return j;
}

Json material_manifest(const PbrMaterial& m) {
  Json uniform = Json::object();
  Json maps = Json::object();
  Json synthesis = Json::object();
  for (Property p : kAllProperties) {
    const int i = static_cast<int>(p);
    const std::string name(property_name(p));
    if (const double* u = std::get_if<double>(&m.properties[i])) {
      uniform[name] = *u;
    } else {
      maps[name] = name + ".png";
    }
    const auto& aug = m.provenance.augments[i];
    synthesis[name] = {{"seed", m.provenance.property_seeds[i]},
                       {"augment", aug ? augment_to_json(*aug) : Json(nullptr)}};
  }
  const auto& r = m.provenance.region;
  return {{"id", m.id},
          {"width", m.width},
          {"height", m.height},
          {"albedo", "albedo.png"},
          {"normal", "normal.png"},
          {"maps", maps},
          {"uniform", uniform},
          {"seed", m.provenance.seed},
          {"normal_strength", m.provenance.normal_strength},
          {"synthesis", synthesis},
          {"provenance",
           {{"source", m.provenance.source_id},
            {"region", {{"row", r.row}, {"col", r.col}, {"side", r.side}}},
            {"parents", m.provenance.parents}}}};
}

void write_material(const fs::path& dir, const PbrMaterial& m) {
  fs::create_directories(dir);
  write_rgb_png(dir / "albedo.png", to_image(m.albedo, 8));
  for (Property p : kAllProperties) {
    if (const Plane* plane = std::get_if<Plane>(&m[p])) {
      write_gray16_png(dir / (std::string(property_name(p)) + ".png"), *plane);
    }
  }
  write_rgb_png(dir / "normal.png", to_image(normal_planes(m.normal), 16));
  write_json_atomic(dir / "material.json", material_manifest(m));
}

PbrMaterial read_material(const fs::path& dir) {
  const Json j = read_json(dir / "material.json");
  PbrMaterial m;
  try {
    m.id = j.at("id").get<std::string>();
    m.width = j.at("width").get<int>();
    m.height = j.at("height").get<int>();
    m.provenance.seed = j.value("seed", std::uint64_t{0});
    m.provenance.normal_strength = j.value("normal_strength", 0.0);
    m.albedo = to_planes(read_rgb(dir / j.at("albedo").get<std::string>()));
    const RgbPlanes normal = to_planes(read_rgb(dir / j.at("normal").get<std::string>()));
    m.normal.encoded = normal.channels;
    for (Property p : kAllProperties) {
      const std::string name(property_name(p));
      if (j.at("uniform").contains(name)) {
        m[p] = j.at("uniform").at(name).get<double>();
      } else {
        m[p] = read_gray_png(dir / j.at("maps").at(name).get<std::string>());
      }
    }
    if (j.contains("provenance")) {
      const Json& prov = j.at("provenance");
      m.provenance.source_id = prov.value("source", "");
      m.provenance.parents = prov.value("parents", std::vector<std::string>{});
    }
  } catch (const Json::exception& e) {
    throw FormatError((dir / "material.json").string() + ": " + e.what());
  }
  return m;
}

}  // namespace matinfuse
