// Copyright 2026 The matinfuse Authors.
// SPDX-License-Identifier: Apache-2.0

#include "matinfuse/imagemaps/region_map_io.hpp"

#include <string>

#include "matinfuse/core/error.hpp"
#include "matinfuse/core/io.hpp"

namespace matinfuse {

Json region_map_sidecar(const SoftRegionMap& map) {
  Json regions = Json::array();
  for (const auto& draw : map.draws) {
    regions.push_back({{"channel", std::string(channel_name(draw.channel))},
                       {"t_low", draw.ramp.t_low},
                       {"t_high", draw.ramp.t_high},
                       {"attempts", draw.attempts}});
  }
  return {{"seed", map.seed},
          {"width", map.width},
          {"height", map.height},
          {"num_regions", map.num_regions()},
          {"regions", regions}};
}

void write_region_map(const fs::path& dir, const SoftRegionMap& map) {
  fs::create_directories(dir);
  const auto planes = map.partition();
  const auto codes = quantize_partition(planes);
  for (int k = 0; k < map.num_regions(); ++k) {
    write_file_atomic(dir / ("region_" + std::to_string(k) + ".png"),
                      encode_gray16_png(map.width, map.height, codes[k]));
  }
  write_file_atomic(dir / "background.png",
                    encode_gray16_png(map.width, map.height, codes.back()));
  write_json_atomic(dir / "region_map.json", region_map_sidecar(map));
}

SoftRegionMap read_region_map(const fs::path& dir) {
  const Json sidecar = read_json(dir / "region_map.json");
  SoftRegionMap map;
  try {
    map.seed = sidecar.at("seed").get<std::uint64_t>();
    map.width = sidecar.at("width").get<int>();
    map.height = sidecar.at("height").get<int>();
    for (const auto& region : sidecar.at("regions")) {
      RegionDraw draw;
      const auto channel = parse_channel(region.at("channel").get<std::string>());
      if (!channel) throw FormatError((dir / "region_map.json").string() + ": bad channel");
      draw.channel = *channel;
      draw.ramp = {region.at("t_low").get<double>(), region.at("t_high").get<double>()};
      draw.attempts = region.value("attempts", 1);
      map.draws.push_back(draw);
    }
  } catch (const Json::exception& e) {
    throw FormatError((dir / "region_map.json").string() + ": " + e.what());
  }
  for (std::size_t k = 0; k < map.draws.size(); ++k) {
    map.region_weights.push_back(read_gray_png(dir / ("region_" + std::to_string(k) + ".png")));
  }
  map.background_weight = read_gray_png(dir / "background.png");
  return map;
}

}  // namespace matinfuse
