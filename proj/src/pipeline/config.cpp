// Copyright 2026 The matinfuse Authors.
// SPDX-License-Identifier: Apache-2.0

#include "matinfuse/pipeline/config.hpp"

#include <set>

#include "matinfuse/core/error.hpp"
#include "matinfuse/core/io.hpp"

namespace matinfuse {
namespace {

// Field visitors shared by reading and writing, so both stay in step.
template <typename V>
void fields(V& v, DegenerateThresholds& c) {
  v("min_std", c.min_std);
  v("min_mean", c.min_mean);
  v("max_mean", c.max_mean);
}

template <typename V>
void fields(V& v, ExtractionConfig& c) {
  v("cell_size", c.cell_size);
  v("min_region_cells", c.min_region_cells);
  v("js_threshold", c.js_threshold);
  v("histogram_bins", c.histogram_bins);
  v.block("degenerate", c.degenerate);
}

template <typename V>
void fields(V& v, RegionMapOptions& c) {
  v("min_ramp_gap", c.min_ramp_gap);
  v("min_area", c.min_area);
  v("max_area", c.max_area);
  v("max_redraws", c.max_redraws);
}

template <typename V>
void fields(V& v, AugmentRanges& c) {
  v("scale_min", c.scale_min);
  v("scale_max", c.scale_max);
  v("shift_min", c.shift_min);
  v("shift_max", c.shift_max);
  v("blur_max", c.blur_max);
  v("ramp_probability", c.ramp_probability);
  v("invert_probability", c.invert_probability);
  v("min_ramp_gap", c.min_ramp_gap);
}

template <typename V>
void fields(V& v, SynthOptions& c) {
  v("uniform_probability", c.uniform_probability);
  v.block("augment", c.augment);
  v("normal_strength_min", c.normal_strength_min);
  v("normal_strength_max", c.normal_strength_max);
}

template <typename V>
void fields(V& v, Gen2DSettings& c) {
  v("count", c.count);
  v("width", c.width);
  v("height", c.height);
  v("shadow_probability", c.shadow_probability);
  v("shadow_strength_min", c.shadow_strength_min);
  v("shadow_strength_max", c.shadow_strength_max);
}

template <typename V>
void fields(V& v, RenderSettings& c) {
  v("width", c.width);
  v("height", c.height);
  v("samples", c.samples);
}

template <typename V>
void fields(V& v, SceneOptions& c) {
  v("min_objects", c.min_objects);
  v("max_objects", c.max_objects);
  v("min_distractors", c.min_distractors);
  v("max_distractors", c.max_distractors);
  v("ground_probability", c.ground_probability);
  v("light_probability", c.light_probability);
  v("max_lights", c.max_lights);
  v("light_power_min", c.light_power_min);
  v("light_power_max", c.light_power_max);
  v("textureless_probability", c.textureless_probability);
  v("object_scale_min", c.object_scale_min);
  v("object_scale_max", c.object_scale_max);
  v("placement_extent", c.placement_extent);
  v("camera_distance_min", c.camera_distance_min);
  v("camera_distance_max", c.camera_distance_max);
  v("camera_elevation_min_deg", c.camera_elevation_min_deg);
  v("camera_elevation_max_deg", c.camera_elevation_max_deg);
  v("focal_length_min_mm", c.focal_length_min_mm);
  v("focal_length_max_mm", c.focal_length_max_mm);
  v("look_at_jitter", c.look_at_jitter);
  v.block("render", c.render);
}

template <typename V>
void fields(V& v, Gen3DSettings& c) {
  v("count", c.count);
  v.path("asset_index", c.asset_index);
  v.block("scene", c.scene);
}

template <typename V>
void fields(V& v, MetricSettings& c) {
  v.soft_mode("soft_mode", c.soft_mode);
  v("iou_points_per_segment", c.iou_points_per_segment);
}

template <typename V>
void fields(V& v, PipelineConfig& c) {
  v.paths("corpus_roots", c.corpus_roots);
  v.path("output_root", c.output_root);
  v("seed", c.seed);
  v("workers", c.workers);
  v.block("extraction", c.extraction);
  v.block("region_maps", c.region_maps);
  v("min_regions", c.min_regions);
  v("max_regions", c.max_regions);
  v.block("synth", c.synth);
  v("mix_count", c.mix_count);
  v.mix_mode("mix_mode", c.mix_mode);
  v.block("gen2d", c.gen2d);
  v.block("gen3d", c.gen3d);
  v.block("metrics", c.metrics);
  v("max_failure_rate", c.max_failure_rate);
}

class Reader {
 public:
  Reader(const Json& j, std::string where, const fs::path& base) : j_(j), where_(std::move(where)), base_(base) {
    if (!j_.is_object()) throw ConfigError(where_ + ": expected an object");
  }

  template <typename T>
  void operator()(const char* key, T& out) {
    if (const Json* v = take(key)) {
      try {
        out = v->get<T>();
      } catch (const Json::exception&) {
        throw ConfigError(where_ + "." + key + ": wrong type");
      }
    }
  }

  template <typename T>
  void block(const char* key, T& out) {
    if (const Json* v = take(key)) {
      Reader inner(*v, where_ + "." + key, base_);
      fields(inner, out);
      inner.finish();
    }
  }

  void path(const char* key, fs::path& out) {
    std::string s;
    (*this)(key, s);
    if (!s.empty()) out = resolve(s);
  }

  void paths(const char* key, std::vector<fs::path>& out) {
    if (const Json* v = take(key)) {
      if (!v->is_array()) throw ConfigError(where_ + "." + key + ": expected an array");
      out.clear();
      for (const auto& e : *v) {
        if (!e.is_string()) throw ConfigError(where_ + "." + key + ": expected strings");
        out.push_back(resolve(e.get<std::string>()));
      }
    }
  }

  void soft_mode(const char* key, SoftMode& out) {
    std::string s;
    (*this)(key, s);
    if (s.empty()) return;
    if (s == "any_point") out = SoftMode::kAnyPointInSimilarGroup;
    else if (s == "anchor_relation") out = SoftMode::kAnchorRelation;
    else throw ConfigError(where_ + "." + key + ": expected any_point or anchor_relation");
  }

  void mix_mode(const char* key, MixMode& out) {
    std::string s;
    (*this)(key, s);
    if (s.empty()) return;
    if (s == "per_material") out = MixMode::kPerMaterial;
    else if (s == "per_map") out = MixMode::kPerMap;
    else throw ConfigError(where_ + "." + key + ": expected per_material or per_map");
  }

  void finish() const {
    for (const auto& [key, value] : j_.items()) {
      if (!seen_.count(key)) throw ConfigError(where_ + "." + key + ": unknown key");
    }
  }

 private:
  const Json* take(const char* key) {
    seen_.insert(key);
    auto it = j_.find(key);
    return it == j_.end() ? nullptr : &*it;
  }
  fs::path resolve(const std::string& s) const {
    fs::path p(s);
    return p.is_absolute() ? p : (base_ / p).lexically_normal();
  }

  const Json& j_;
  std::string where_;
  fs::path base_;
  std::set<std::string> seen_;
};

class Writer {
 public:
  explicit Writer(Json& j) : j_(j) { j_ = Json::object(); }

  template <typename T>
  void operator()(const char* key, T& value) {
    j_[key] = value;
  }
  template <typename T>
  void block(const char* key, T& value) {
    Json inner;
    Writer w(inner);
    fields(w, value);
    j_[key] = inner;
  }
  void path(const char* key, fs::path& value) { j_[key] = value.generic_string(); }
  void paths(const char* key, std::vector<fs::path>& value) {
    Json arr = Json::array();
    for (const auto& p : value) arr.push_back(p.generic_string());
    j_[key] = arr;
  }
  void soft_mode(const char* key, SoftMode& value) {
    j_[key] = value == SoftMode::kAnchorRelation ? "anchor_relation" : "any_point";
  }
  void mix_mode(const char* key, MixMode& value) {
    j_[key] = value == MixMode::kPerMap ? "per_map" : "per_material";
  }

 private:
  Json& j_;
};

void require(bool ok, const std::string& message) {
  if (!ok) throw ConfigError(message);
}

bool probability(double p) { return p >= 0.0 && p <= 1.0; }

}  // namespace

void PipelineConfig::validate() const {
  try {
    extraction.validate();
  } catch (const ParameterError& e) {
    throw ConfigError(std::string("extraction: ") + e.what());
  }
  require(workers >= 1, "workers must be at least 1");
  require(min_regions >= 1 && max_regions >= min_regions, "region count range is invalid");
  require(mix_count >= 0, "mix_count must be non-negative");
  require(probability(synth.uniform_probability), "synth.uniform_probability must be in [0,1]");
  require(probability(synth.augment.ramp_probability) && probability(synth.augment.invert_probability),
          "synth.augment probabilities must be in [0,1]");
  require(synth.augment.scale_min <= synth.augment.scale_max &&
              synth.augment.shift_min <= synth.augment.shift_max && synth.augment.blur_max >= 0.0,
          "synth.augment ranges are invalid");
  require(synth.normal_strength_min > 0.0 && synth.normal_strength_max >= synth.normal_strength_min,
          "synth normal strength range is invalid");
  require(region_maps.min_area <= region_maps.max_area && region_maps.max_redraws >= 0,
          "region_maps options are invalid");
  require(gen2d.count >= 0 && gen2d.width > 0 && gen2d.height > 0, "gen2d sizes are invalid");
  require(probability(gen2d.shadow_probability) &&
              gen2d.shadow_strength_min <= gen2d.shadow_strength_max,
          "gen2d shadow settings are invalid");
  require(gen3d.count >= 0, "gen3d.count must be non-negative");
  require(metrics.iou_points_per_segment >= 1, "metrics.iou_points_per_segment must be positive");
  require(max_failure_rate >= 0.0 && max_failure_rate <= 1.0, "max_failure_rate must be in [0,1]");
}

PipelineConfig config_from_json(const Json& j, const fs::path& base_dir) {
  PipelineConfig config;
  Reader reader(j, "$", base_dir);
  fields(reader, config);
  reader.finish();
  config.validate();
  return config;
}

PipelineConfig load_config(const fs::path& path) {
  Json j;
  try {
    j = read_json(path);
  } catch (const FormatError& e) {
    throw ConfigError(e.what());
  }
  return config_from_json(j, path.parent_path());
}

Json config_to_json(const PipelineConfig& config) {
  PipelineConfig copy = config;
  Json j;
  Writer writer(j);
  fields(writer, copy);
  return j;
}

std::string config_hash(const PipelineConfig& config) {
  Json j = config_to_json(config);
  j.erase("workers");
  j.erase("output_root");
  return sha256_hex(j.dump());
}

}  // namespace matinfuse
