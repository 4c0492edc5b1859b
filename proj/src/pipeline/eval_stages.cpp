// Copyright 2026 The matinfuse Authors.
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>

#include "matinfuse/benchmetrics/iou.hpp"
#include "matinfuse/core/color.hpp"
#include "matinfuse/core/error.hpp"
#include "matinfuse/core/io.hpp"
#include "matinfuse/core/parallel.hpp"
#include "matinfuse/core/rng.hpp"
#include "matinfuse/pipeline/corpus.hpp"
#include "matinfuse/pipeline/stage_util.hpp"
#include "matinfuse/pipeline/stages.hpp"
#include "matinfuse/scenegen2d/dataset.hpp"

namespace matinfuse {
namespace {

std::vector<fs::path> sorted_entries(const fs::path& dir, const std::string& extension,
                                     bool directories) {
  if (!fs::is_directory(dir)) throw ConfigError("not a directory: " + dir.string());
  std::vector<fs::path> out;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (directories ? entry.is_directory()
                    : (entry.is_regular_file() && entry.path().extension() == extension)) {
      out.push_back(entry.path());
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<fs::path> sample_dirs(const fs::path& dataset) {
  return sorted_entries(dataset / "samples", "", true);
}

// Plane paths listed by a dense prediction index, resolved against its folder.
std::vector<fs::path> read_plane_index(const fs::path& index) {
  const Json j = read_json(index);
  std::vector<fs::path> planes;
  try {
    for (const auto& p : j.at("planes")) planes.push_back(index.parent_path() / p.get<std::string>());
  } catch (const Json::exception& e) {
    throw FormatError(index.string() + ": planes: " + e.what());
  }
  return planes;
}

std::string fixed(double v, int digits = 4) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
  return buf;
}

std::string cell(const std::optional<double>& v) { return v ? fixed(*v) : "-"; }

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

}  // namespace

RunManifest cmd_annotate_samples(const PipelineConfig& config, const fs::path& dataset,
                                 int points_per_material, const fs::path& out) {
  StageClock clock;
  if (points_per_material < 1) throw ConfigError("points per material must be positive");
  const auto dirs = sample_dirs(dataset);
  fs::create_directories(out);
  RunManifest manifest = new_manifest("annotate-samples", config);
  manifest.items.resize(dirs.size());
  parallel_items(dirs.size(), config.workers, [&](std::size_t i) {
    ItemRecord& record = manifest.items[i];
    record.id = dirs[i].filename().string();
    try {
      const Json meta = read_json(dirs[i] / "meta.json");
      const auto ids = meta.at("material_ids").get<std::vector<std::string>>();
      const std::vector<Plane> gt = read_sample_gt(dirs[i]);
      PointAnnotation ann;
      ann.image_id = record.id;
      ann.width = gt.front().width;
      ann.height = gt.front().height;
      Rng rng(derive_seed(config.seed, record.id));
      for (std::size_t k = 0; k < ids.size(); ++k) {
        std::vector<std::size_t> dominant;
        for (std::size_t p = 0; p < gt[k].size(); ++p) {
          if (gt[k].values[p] >= 0.95) dominant.push_back(p);
        }
        if (dominant.empty()) continue;
        if (std::find(ann.groups.begin(), ann.groups.end(), ids[k]) == ann.groups.end()) {
          ann.groups.push_back(ids[k]);
        }
        for (int n = 0; n < points_per_material; ++n) {
          const std::size_t p = dominant[rng.index(dominant.size())];
          ann.points.push_back({static_cast<double>(p % ann.width), static_cast<double>(p / ann.width), ids[k]});
        }
      }
      // Tiles cut from the same photograph count as partially similar.
      for (std::size_t a = 0; a < ann.groups.size(); ++a) {
        for (std::size_t b = a + 1; b < ann.groups.size(); ++b) {
          const auto sa = ann.groups[a].find('@');
          const auto sb = ann.groups[b].find('@');
          if (sa != std::string::npos && sb != std::string::npos &&
              ann.groups[a].substr(0, sa) == ann.groups[b].substr(0, sb)) {
            ann.add_similar_pair(ann.groups[a], ann.groups[b]);
          }
        }
      }
      ann.validate();
      write_json_atomic(out / (record.id + ".json"), annotation_to_json(ann));
      record.details = {{"points", ann.points.size()}, {"groups", ann.groups.size()}};
      record.status = ann.groups.size() < 2 ? ItemStatus::kSkip : ItemStatus::kOk;
      if (record.status == ItemStatus::kSkip) record.reason = "fewer than two dominant materials";
    } catch (const std::exception& e) {
      record.status = ItemStatus::kError;
      record.reason = e.what();
    }
  });
  finish_manifest(manifest, clock, out / "manifest.json");
  return manifest;
}

RunManifest cmd_color_baseline(const fs::path& dataset, const fs::path& annotations,
                               const fs::path& out) {
  StageClock clock;
  const auto files = sorted_entries(annotations, ".json", false);
  fs::create_directories(out);
  RunManifest manifest;
  manifest.stage = "color-baseline";
  for (const auto& file : files) {
    if (file.filename() == "manifest.json") continue;
    ItemRecord record;
    record.id = file.stem().string();
    try {
      const PointAnnotation ann = load_annotation(file);
      const RgbPlanes rgb = srgb_to_linear(to_planes(read_rgb(dataset / "samples" / ann.image_id / "rgb.png")));
      const std::size_t n = ann.points.size();
      PairwisePrediction pred(n);
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a; b < n; ++b) {
          double d2 = 0.0;
          for (int c = 0; c < 3; ++c) {
            const double d = rgb.channels[c].at(static_cast<int>(ann.points[a].x), static_cast<int>(ann.points[a].y)) -
                             rgb.channels[c].at(static_cast<int>(ann.points[b].x), static_cast<int>(ann.points[b].y));
            d2 += d * d;
          }
          pred.set_symmetric(a, b, 0.0 - std::sqrt(d2));
        }
      }
      write_sparse_csv(out / (record.id + ".csv"), pred);
      record.status = ItemStatus::kOk;
    } catch (const std::exception& e) {
      record.status = ItemStatus::kError;
      record.reason = e.what();
    }
    manifest.items.push_back(std::move(record));
  }
  finish_manifest(manifest, clock, out / "manifest.json");
  return manifest;
}

EvalReport cmd_eval_triplet(const PipelineConfig& config, const fs::path& annotations,
                            const fs::path& predictions) {
  StageClock clock;
  std::vector<fs::path> files;
  for (const auto& f : sorted_entries(annotations, ".json", false)) {
    if (f.filename() != "manifest.json") files.push_back(f);
  }
  EvalReport out;
  out.manifest = new_manifest("eval-triplet", config);
  out.manifest.items.resize(files.size());
  std::vector<std::optional<TripletScore>> scores(files.size());
  TripletOptions options;
  options.soft_mode = config.metrics.soft_mode;

  // Format problems are fatal for the whole report; they are rethrown after
  // the parallel section in item order.
  std::vector<std::string> format_errors(files.size());
  parallel_items(files.size(), config.workers, [&](std::size_t i) {
    ItemRecord& record = out.manifest.items[i];
    try {
      const PointAnnotation ann = load_annotation(files[i]);
      record.id = ann.image_id;
      const fs::path csv = predictions / (ann.image_id + ".csv");
      const fs::path dense = predictions / ann.image_id / "index.json";
      PairwisePrediction pred;
      if (fs::exists(csv)) {
        pred = read_sparse_csv(csv, ann.points.size());
      } else if (fs::exists(dense)) {
        DensePrediction d{ann.width, ann.height, {}};
        for (const auto& p : read_plane_index(dense)) {
          d.planes.push_back(read_prediction_plane(p, ann.width, ann.height));
        }
        if (d.planes.size() != ann.points.size()) {
          throw FormatError(dense.string() + ": planes: expected one per annotated point");
        }
        pred = sample_dense(d, ann);
      } else {
        throw FormatError("no prediction for " + ann.image_id + " under " + predictions.string());
      }
      scores[i] = triplet_score(ann, pred, options);
      record.details = scores[i]->to_json();
      record.status = ItemStatus::kOk;
    } catch (const FormatError& e) {
      if (record.id.empty()) record.id = files[i].stem().string();
      record.status = ItemStatus::kError;
      record.reason = e.what();
      format_errors[i] = e.what();
    } catch (const std::exception& e) {
      if (record.id.empty()) record.id = files[i].stem().string();
      record.status = ItemStatus::kError;
      record.reason = e.what();
    }
  });
  for (const auto& e : format_errors) {
    if (!e.empty()) throw FormatError(e);
  }

  Json images = Json::object();
  double overall_sum = 0.0, soft_sum = 0.0;
  std::size_t overall_n = 0, soft_n = 0, triplets = 0;
  std::string rows;
  for (std::size_t i = 0; i < files.size(); ++i) {
    if (!scores[i]) continue;
    const TripletScore& s = *scores[i];
    const std::string& id = out.manifest.items[i].id;
    images[id] = s.to_json();
    if (s.overall) overall_sum += *s.overall, ++overall_n;
    if (s.soft_only) soft_sum += *s.soft_only, ++soft_n;
    triplets += s.triplets;
    rows += pad(id, 28) + pad(cell(s.overall), 10) + pad(cell(s.soft_only), 10) +
            std::to_string(s.triplets) + "\n";
  }
  const std::optional<double> mean_overall =
      overall_n ? std::optional(overall_sum / overall_n) : std::nullopt;
  const std::optional<double> mean_soft = soft_n ? std::optional(soft_sum / soft_n) : std::nullopt;
  out.report = {{"metric", "triplet"},
                {"soft_mode", config.metrics.soft_mode == SoftMode::kAnchorRelation ? "anchor_relation"
                                                                                    : "any_point"},
                {"images", images},
                {"mean_overall", mean_overall ? Json(*mean_overall) : Json(nullptr)},
                {"mean_soft", mean_soft ? Json(*mean_soft) : Json(nullptr)},
                {"triplets", triplets}};
  out.table = pad("image", 28) + pad("overall", 10) + pad("soft", 10) + "triplets\n" + rows +
              pad("mean", 28) + pad(cell(mean_overall), 10) + pad(cell(mean_soft), 10) +
              std::to_string(triplets) + "\n";
  finish_manifest(out.manifest, clock, std::nullopt);
  return out;
}

RunManifest cmd_plan_iou(const PipelineConfig& config, const fs::path& masks, const fs::path& out) {
  StageClock clock;
  const auto dirs = sorted_entries(masks, "", true);
  RunManifest manifest = new_manifest("plan-iou", config);
  for (const auto& dir : dirs) {
    if (!fs::exists(dir / "masks.json")) continue;
    ItemRecord record;
    record.id = dir.filename().string();
    try {
      const GtMaskSet set = load_mask_set(dir / "masks.json");
      std::vector<std::string> warnings;
      const auto queries = plan_iou_queries(set, config.metrics.iou_points_per_segment, config.seed, &warnings);
      Json q = Json::array();
      for (const auto& query : queries) q.push_back({{"segment", query.segment}, {"x", query.x}, {"y", query.y}});
      fs::create_directories(out / record.id);
      write_json_atomic(out / record.id / "queries.json",
                        {{"image_id", set.image_id},
                         {"points_per_segment", config.metrics.iou_points_per_segment},
                         {"queries", q}});
      record.details = {{"queries", queries.size()}, {"warnings", warnings}};
      record.status = ItemStatus::kOk;
    } catch (const std::exception& e) {
      record.status = ItemStatus::kError;
      record.reason = e.what();
    }
    manifest.items.push_back(std::move(record));
  }
  finish_manifest(manifest, clock, out / "manifest.json");
  return manifest;
}

EvalReport cmd_eval_iou(const PipelineConfig& config, const fs::path& masks, const fs::path& predictions) {
  StageClock clock;
  std::vector<fs::path> dirs;
  for (const auto& d : sorted_entries(masks, "", true)) {
    if (fs::exists(d / "masks.json")) dirs.push_back(d);
  }
  EvalReport out;
  out.manifest = new_manifest("eval-iou", config);
  out.manifest.items.resize(dirs.size());
  std::vector<std::vector<double>> ious(dirs.size());
  std::vector<std::vector<std::string>> warnings(dirs.size());
  std::vector<std::string> format_errors(dirs.size());
  parallel_items(dirs.size(), config.workers, [&](std::size_t i) {
    ItemRecord& record = out.manifest.items[i];
    record.id = dirs[i].filename().string();
    try {
      const GtMaskSet set = load_mask_set(dirs[i] / "masks.json");
      const auto queries =
          plan_iou_queries(set, config.metrics.iou_points_per_segment, config.seed, &warnings[i]);
      const fs::path index = predictions / record.id / "index.json";
      if (!fs::exists(index)) throw FormatError("no prediction index " + index.string());
      const auto planes = read_plane_index(index);
      if (planes.size() != queries.size()) {
        throw FormatError(index.string() + ": planes: expected " + std::to_string(queries.size()) +
                          " entries, one per planned query");
      }
      for (std::size_t q = 0; q < queries.size(); ++q) {
        const Plane sim = read_prediction_plane(planes[q], set.width, set.height);
        ious[i].push_back(optimal_threshold_iou(sim, set.masks[queries[q].segment]).best_iou);
      }
      double sum = 0.0;
      for (double v : ious[i]) sum += v;
      record.details = {{"queries", ious[i].size()},
                        {"mean_iou", ious[i].empty() ? Json(nullptr) : Json(sum / ious[i].size())},
                        {"warnings", warnings[i]}};
      record.status = ItemStatus::kOk;
    } catch (const FormatError& e) {
      record.status = ItemStatus::kError;
      record.reason = e.what();
      format_errors[i] = e.what();
    } catch (const std::exception& e) {
      record.status = ItemStatus::kError;
      record.reason = e.what();
    }
  });
  for (const auto& e : format_errors) {
    if (!e.empty()) throw FormatError(e);
  }
  double sum = 0.0;
  std::size_t n = 0;
  Json images = Json::object();
  std::string rows;
  for (std::size_t i = 0; i < dirs.size(); ++i) {
    if (out.manifest.items[i].status != ItemStatus::kOk) continue;
    images[out.manifest.items[i].id] = out.manifest.items[i].details;
    double s = 0.0;
    for (double v : ious[i]) s += v;
    sum += s;
    n += ious[i].size();
    rows += pad(out.manifest.items[i].id, 28) +
            pad(ious[i].empty() ? "-" : fixed(s / ious[i].size()), 10) +
            std::to_string(ious[i].size()) + "\n";
  }
  const std::optional<double> mean = n ? std::optional(sum / n) : std::nullopt;
  out.report = {{"metric", "optimal_threshold_iou"},
                {"images", images},
                {"mean_iou", mean ? Json(*mean) : Json(nullptr)},
                {"queries", n}};
  out.table = pad("image", 28) + pad("mean_iou", 10) + "queries\n" + rows + pad("mean", 28) +
              pad(cell(mean), 10) + std::to_string(n) + "\n";
  finish_manifest(out.manifest, clock, std::nullopt);
  return out;
}

RunManifest cmd_preview(const fs::path& dataset, const fs::path& out, int workers) {
  StageClock clock;
  const auto dirs = sample_dirs(dataset);
  fs::create_directories(out);
  RunManifest manifest;
  manifest.stage = "preview";
  manifest.items.resize(dirs.size());
  parallel_items(dirs.size(), workers, [&](std::size_t i) {
    ItemRecord& record = manifest.items[i];
    record.id = dirs[i].filename().string();
    try {
      write_rgb_png(out / (record.id + ".png"), render_annotation_preview(read_sample_gt(dirs[i])));
      record.status = ItemStatus::kOk;
    } catch (const std::exception& e) {
      record.status = ItemStatus::kError;
      record.reason = e.what();
    }
  });
  finish_manifest(manifest, clock, out / "manifest.json");
  return manifest;
}

}  // namespace matinfuse
