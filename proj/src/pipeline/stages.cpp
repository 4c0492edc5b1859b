// Copyright 2026 The matinfuse Authors.
// SPDX-License-Identifier: Apache-2.0

#include "matinfuse/pipeline/stages.hpp"

#include <chrono>

#include "matinfuse/core/error.hpp"
#include "matinfuse/core/io.hpp"
#include "matinfuse/core/parallel.hpp"
#include "matinfuse/core/rng.hpp"
#include "matinfuse/imagemaps/region_map_io.hpp"
#include "matinfuse/pbrsynth/material_io.hpp"
#include "matinfuse/pipeline/corpus.hpp"
#include "matinfuse/pipeline/stage_util.hpp"
#include "matinfuse/scene3d/validate.hpp"
#include "matinfuse/scenegen2d/dataset.hpp"

namespace matinfuse {
namespace {

Json rect_json(const CellRect& r) { return {{"row", r.row}, {"col", r.col}, {"side", r.side}}; }

Json stats_json(const CellStats& s) {
  return {{"mean", s.mean}, {"stddev", s.stddev}};
}

struct TileRecord {
  std::string id;
  std::string file;
  std::string source;
  CellRect region;
  int cell_size = 0;
};

std::vector<TileRecord> read_tile_index(const fs::path& textures) {
  const fs::path index = textures / "tiles.json";
  if (!fs::exists(index)) throw ConfigError("texture pool index missing: " + index.string());
  const Json j = read_json(index);
  std::vector<TileRecord> tiles;
  try {
    for (const auto& t : j.at("tiles")) {
      const Json& r = t.at("region");
      tiles.push_back({t.at("id").get<std::string>(), t.at("file").get<std::string>(),
                       t.at("source").get<std::string>(),
                       {r.at("row").get<int>(), r.at("col").get<int>(), r.at("side").get<int>()},
                       t.at("cell_size").get<int>()});
    }
  } catch (const Json::exception& e) {
    throw FormatError(index.string() + ": " + e.what());
  }
  return tiles;
}

struct MaterialRecord {
  std::string id;
  std::string dir;
};

std::vector<MaterialRecord> read_material_index(const fs::path& materials) {
  const fs::path index = materials / "materials.json";
  if (!fs::exists(index)) throw ConfigError("material pool index missing: " + index.string());
  const Json j = read_json(index);
  std::vector<MaterialRecord> out;
  try {
    for (const auto& m : j.at("materials")) {
      out.push_back({m.at("id").get<std::string>(), m.at("dir").get<std::string>()});
    }
  } catch (const Json::exception& e) {
    throw FormatError(index.string() + ": " + e.what());
  }
  if (out.empty()) throw ConfigError("material pool is empty: " + index.string());
  return out;
}

}  // namespace

RunManifest cmd_extract_textures(const PipelineConfig& config, const fs::path& out) {
  StageClock clock;
  const std::vector<PoolItem> corpus = walk_corpus(config.corpus_roots);
  fs::create_directories(out / "tiles");
  fs::create_directories(out / "images");
  RunManifest manifest = new_manifest("extract-textures", config);
  manifest.items.resize(corpus.size());
  std::vector<Json> tile_entries(corpus.size(), Json::array());

  parallel_items(corpus.size(), config.workers, [&](std::size_t i) {
    ItemRecord& record = manifest.items[i];
    record.id = corpus[i].id;
    try {
      const RgbImage image = read_rgb(corpus[i].path);
      const ExtractionResult result = extract_textures(image, corpus[i].id, config.extraction);
      Json regions = Json::array();
      for (const auto& tile : result.tiles) {
        const std::string file = "tiles/" + path_safe(tile.id()) + ".png";
        write_rgb_png(out / file, tile.pixels);
        tile_entries[i].push_back({{"id", tile.id()},
                                   {"file", file},
                                   {"source", tile.source_id},
                                   {"region", rect_json(tile.region)},
                                   {"cell_size", tile.cell_size},
                                   {"width", tile.pixels.width},
                                   {"height", tile.pixels.height}});
        regions.push_back({{"region", rect_json(tile.region)}, {"stats", stats_json(tile.aggregate)}});
      }
      Json discarded = Json::array();
      for (const auto& d : result.search.discarded) {
        discarded.push_back({{"region", rect_json(d.rect)}, {"reasons", d.check.reasons}});
      }
      write_json_atomic(out / "images" / (path_safe(corpus[i].id) + ".json"),
                        {{"image_id", corpus[i].id},
                         {"width", image.width},
                         {"height", image.height},
                         {"grid", {{"rows", result.grid_rows}, {"cols", result.grid_cols}}},
                         {"regions", regions},
                         {"discarded", discarded}});
      record.details = {{"tiles", result.tiles.size()}, {"discarded", result.search.discarded.size()}};
      record.status = ItemStatus::kOk;
    } catch (const TooSmallError& e) {
      record.status = ItemStatus::kSkip;
      record.reason = e.what();
    } catch (const std::exception& e) {
      record.status = ItemStatus::kError;
      record.reason = e.what();
    }
  });

  Json tiles = Json::array();
  for (const auto& entries : tile_entries) {
    for (const auto& e : entries) tiles.push_back(e);
  }
  write_json_atomic(out / "tiles.json", {{"tiles", tiles}});
  finish_manifest(manifest, clock, out / "manifest.json");
  return manifest;
}

RunManifest cmd_make_materials(const PipelineConfig& config, const fs::path& textures,
                               const fs::path& out) {
  StageClock clock;
  const std::vector<TileRecord> tiles = read_tile_index(textures);
  if (tiles.empty()) throw ConfigError("texture pool is empty: " + textures.string());
  fs::create_directories(out / "materials");
  RunManifest manifest = new_manifest("make-materials", config);
  const std::size_t total = tiles.size() + static_cast<std::size_t>(config.mix_count);
  manifest.items.resize(total);
  std::vector<std::string> dirs(total);
  std::vector<std::string> ids(total);

  parallel_items(tiles.size(), config.workers, [&](std::size_t i) {
    ItemRecord& record = manifest.items[i];
    record.id = tiles[i].id;
    try {
      TextureTile tile;
      tile.pixels = read_rgb(textures / tiles[i].file);
      tile.source_id = tiles[i].source;
      tile.region = tiles[i].region;
      tile.cell_size = tiles[i].cell_size;
      PbrMaterial material = make_pbr(tile, derive_seed(config.seed, tiles[i].id), config.synth);
      material.id = tiles[i].id;
      dirs[i] = "materials/" + path_safe(material.id);
      write_material(out / dirs[i], material);
      ids[i] = material.id;
      record.status = ItemStatus::kOk;
    } catch (const std::exception& e) {
      record.status = ItemStatus::kError;
      record.reason = e.what();
    }
  });

  std::vector<std::size_t> base;
  for (std::size_t i = 0; i < tiles.size(); ++i) {
    if (manifest.items[i].status == ItemStatus::kOk) base.push_back(i);
  }
  parallel_items(static_cast<std::size_t>(config.mix_count), config.workers, [&](std::size_t m) {
    const std::size_t slot = tiles.size() + m;
    ItemRecord& record = manifest.items[slot];
    record.id = "mix_" + sample_dir_name(static_cast<int>(m));
    try {
      if (base.empty()) throw ConfigError("no base materials to mix");
      const std::uint64_t seed = derive_seed(config.seed, record.id);
      Rng rng(seed);
      const std::size_t a = base[rng.index(base.size())];
      const std::size_t b = base[rng.index(base.size())];
      PbrMaterial mixed = mix_pbr(read_material(out / dirs[a]), read_material(out / dirs[b]),
                                  config.mix_mode, rng.next());
      mixed.id = record.id;
      dirs[slot] = "materials/" + path_safe(mixed.id);
      write_material(out / dirs[slot], mixed);
      ids[slot] = mixed.id;
      record.details = {{"parents", {ids[a], ids[b]}}};
      record.status = ItemStatus::kOk;
    } catch (const std::exception& e) {
      record.status = ItemStatus::kError;
      record.reason = e.what();
    }
  });

  Json index = Json::array();
  for (std::size_t i = 0; i < total; ++i) {
    if (manifest.items[i].status == ItemStatus::kOk) index.push_back({{"id", ids[i]}, {"dir", dirs[i]}});
  }
  write_json_atomic(out / "materials.json", {{"materials", index}});
  finish_manifest(manifest, clock, out / "manifest.json");
  return manifest;
}

RunManifest cmd_gen2d(const PipelineConfig& config, const fs::path& materials, const fs::path& out) {
  StageClock clock;
  Batch2DConfig batch;
  for (const auto& m : read_material_index(materials)) {
    batch.textures.push_back({m.id, materials / m.dir / "albedo.png"});
  }
  batch.backgrounds = walk_corpus(config.corpus_roots);
  batch.map_sources = batch.backgrounds;
  batch.width = config.gen2d.width;
  batch.height = config.gen2d.height;
  batch.min_regions = config.min_regions;
  batch.max_regions = config.max_regions;
  batch.shadow_probability = config.gen2d.shadow_probability;
  batch.shadow_strength_min = config.gen2d.shadow_strength_min;
  batch.shadow_strength_max = config.gen2d.shadow_strength_max;
  batch.region_maps = config.region_maps;
  batch.config_hash = config_hash(config);
  batch.workers = config.workers;
  RunManifest manifest = generate_batch_2d(batch, config.gen2d.count, config.seed, out);
  finish_manifest(manifest, clock, out / "manifest.json");
  return manifest;
}

RunManifest cmd_gen3d(const PipelineConfig& config, const fs::path& materials, const fs::path& out) {
  StageClock clock;
  if (config.gen3d.asset_index.empty()) throw ConfigError("gen3d.asset_index is not set");
  AssetIndex assets = load_asset_index(config.gen3d.asset_index);
  const std::vector<MaterialRecord> pool = read_material_index(materials);
  const std::vector<PoolItem> sources = walk_corpus(config.corpus_roots);
  if (sources.empty()) throw ConfigError("gen3d needs a non-empty corpus for region maps");
  fs::create_directories(out / "scenes");
  const fs::path out_abs = fs::absolute(out).lexically_normal();
  // Asset paths are rewritten relative to the output directory.
  const auto rebase = [&](std::vector<AssetEntry>& entries) {
    for (auto& e : entries) {
      e.path = fs::absolute(assets.base_dir / e.path).lexically_normal().lexically_relative(out_abs);
    }
  };
  rebase(assets.meshes);
  rebase(assets.hdris);
  rebase(assets.materials);
  const fs::path materials_abs = fs::absolute(materials).lexically_normal();
  for (const auto& m : pool) {
    assets.materials.push_back(
        {m.id, (materials_abs / m.dir).lexically_relative(out_abs), "generated", true, 1.0});
  }
  assets.base_dir = out;
  write_json_atomic(out / "assets.json", asset_index_to_json(assets));

  RunManifest manifest = new_manifest("gen3d", config);
  manifest.items.resize(static_cast<std::size_t>(config.gen3d.count));
  parallel_items(manifest.items.size(), config.workers, [&](std::size_t i) {
    ItemRecord& record = manifest.items[i];
    record.id = sample_dir_name(static_cast<int>(i));
    try {
      const std::uint64_t seed = derive_seed(config.seed, static_cast<std::uint64_t>(i));
      Rng rng(seed);
      const PoolItem& source = sources[rng.index(sources.size())];
      const int k = rng.integer(config.min_regions, config.max_regions);
      std::vector<std::string> ids;
      for (int r = 0; r < k; ++r) ids.push_back(pool[rng.index(pool.size())].id);
      const std::uint64_t map_seed = rng.next();
      const std::uint64_t scene_seed = rng.next();
      const RgbImage image =
          resize_image(read_rgb(source.path), config.gen2d.width, config.gen2d.height);
      const SoftRegionMap map = sample_region_map(image, map_seed, k, config.region_maps);
      const fs::path dir = out / "scenes" / record.id;
      write_region_map(dir / "uvmap", map);
      const Scene3DDescriptor desc =
          build_scene_descriptor(assets, map, "uvmap", ids, scene_seed, config.gen3d.scene);
      write_text_atomic(dir / "scene.json", serialize_descriptor(desc));
      const ValidationReport report = validate_descriptor(desc, assets);
      record.details = {{"map_source", source.id}, {"validation", report.to_json()}};
      if (report.ok()) {
        record.status = ItemStatus::kOk;
      } else {
        record.status = ItemStatus::kError;
        record.reason = "scene failed validation";
      }
    } catch (const std::exception& e) {
      record.status = ItemStatus::kError;
      record.reason = e.what();
    }
  });
  finish_manifest(manifest, clock, out / "manifest.json");
  return manifest;
}

RunManifest cmd_validate_scenes(const fs::path& dir, const fs::path& assets_path) {
  StageClock clock;
  const AssetIndex assets = load_asset_index(assets_path);
  const fs::path scenes = dir / "scenes";
  if (!fs::is_directory(scenes)) throw ConfigError("no scenes directory under " + dir.string());
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(scenes)) {
    if (fs::exists(entry.path() / "scene.json")) files.push_back(entry.path() / "scene.json");
  }
  std::sort(files.begin(), files.end());
  RunManifest manifest;
  manifest.stage = "validate-scenes";
  manifest.items.resize(files.size());
  for (std::size_t i = 0; i < files.size(); ++i) {
    ItemRecord& record = manifest.items[i];
    record.id = files[i].parent_path().filename().string();
    try {
      const auto bytes = read_file(files[i]);
      const Scene3DDescriptor desc =
          parse_descriptor(std::string_view(reinterpret_cast<const char*>(bytes.data()), bytes.size()));
      const ValidationReport report = validate_descriptor(desc, assets);
      record.details = report.to_json();
      record.status = report.ok() ? ItemStatus::kOk : ItemStatus::kError;
      if (!report.ok()) record.reason = "scene failed validation";
    } catch (const std::exception& e) {
      record.status = ItemStatus::kError;
      record.reason = e.what();
    }
  }
  finish_manifest(manifest, clock, std::nullopt);
  return manifest;
}

int exit_code_for(const RunManifest& manifest, double max_failure_rate) {
  return manifest.failure_rate() > max_failure_rate ? 2 : 0;
}

}  // namespace matinfuse
