// Copyright 2026 The matinfuse Authors.
// SPDX-License-Identifier: Apache-2.0

// Command-line front end for the dataset and benchmark pipeline.

#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "matinfuse/core/error.hpp"
#include "matinfuse/core/io.hpp"
#include "matinfuse/pipeline/stages.hpp"

namespace {

using namespace matinfuse;

struct GlobalFlags {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<int> workers;
  std::vector<std::string> corpus;
};

PipelineConfig resolve_config(const GlobalFlags& flags) {
  PipelineConfig config = flags.config_path.empty() ? PipelineConfig{} : load_config(flags.config_path);
  if (flags.seed) config.seed = *flags.seed;
  if (flags.workers) config.workers = *flags.workers;
  if (!flags.corpus.empty()) {
    config.corpus_roots.assign(flags.corpus.begin(), flags.corpus.end());
  }
  config.validate();
  return config;
}

fs::path or_default(const std::string& value, const PipelineConfig& config, const char* sub) {
  return value.empty() ? config.output_root / sub : fs::path(value);
}

int report_manifest(const RunManifest& m, const PipelineConfig& config) {
  std::cerr << m.stage << ": " << m.count(ItemStatus::kOk) << " ok, " << m.count(ItemStatus::kSkip)
            << " skipped, " << m.count(ItemStatus::kError) << " failed\n";
  for (const auto& item : m.items) {
    if (item.status == ItemStatus::kError) std::cerr << "  " << item.id << ": " << item.reason << "\n";
  }
  return exit_code_for(m, config.max_failure_rate);
}

void emit_report(const EvalReport& r, const std::string& report_path) {
  if (!report_path.empty()) write_json_atomic(report_path, r.report);
  std::cout << r.table;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Synthetic material-state dataset generation and benchmark scoring"};
  app.require_subcommand(1);
  GlobalFlags flags;
  app.add_option("--config", flags.config_path, "Pipeline configuration JSON");
  app.add_option("--seed", flags.seed, "Global seed (overrides the config)");
  app.add_option("--workers", flags.workers, "Worker threads (overrides the config)")
      ->check(CLI::PositiveNumber);

  std::string out, textures, materials, dataset, annotations, predictions, masks, assets, report,
      plan, soft_mode;
  std::optional<int> count, mix;
  int points = 3;

  auto* extract = app.add_subcommand("extract-textures", "Cut stationary texture tiles from a corpus");
  extract->add_option("--corpus", flags.corpus, "Corpus root (repeatable)");
  extract->add_option("--out", out, "Texture pool directory");

  auto* make = app.add_subcommand("make-materials", "Build PBR materials from a texture pool");
  make->add_option("--textures", textures, "Texture pool directory")->required();
  make->add_option("--out", out, "Material pool directory");
  make->add_option("--mix", mix, "Number of mixed materials");

  auto* gen2d = app.add_subcommand("gen2d", "Compose 2D samples with soft ground truth");
  gen2d->add_option("--materials", materials, "Material pool directory")->required();
  gen2d->add_option("--corpus", flags.corpus, "Corpus root for backgrounds and maps");
  gen2d->add_option("--out", out, "Dataset directory");
  gen2d->add_option("--count", count, "Number of samples");

  auto* gen3d = app.add_subcommand("gen3d", "Write 3D scene descriptors");
  gen3d->add_option("--materials", materials, "Material pool directory")->required();
  gen3d->add_option("--corpus", flags.corpus, "Corpus root for UV maps");
  gen3d->add_option("--assets", assets, "Asset index JSON");
  gen3d->add_option("--out", out, "Scene directory");
  gen3d->add_option("--count", count, "Number of scenes");

  auto* validate = app.add_subcommand("validate-scenes", "Check scene descriptors against assets");
  validate->add_option("--dir", dataset, "Directory containing scenes/")->required();
  validate->add_option("--assets", assets, "Asset index JSON (default <dir>/assets.json)");

  auto* annotate = app.add_subcommand("annotate", "Point annotations from 2D sample ground truth");
  annotate->add_option("--dataset", dataset, "2D dataset directory")->required();
  annotate->add_option("--out", out, "Annotation directory");
  annotate->add_option("--points", points, "Points per material")->check(CLI::PositiveNumber);

  auto* baseline = app.add_subcommand("baseline", "Colour-distance predictions for annotations");
  baseline->add_option("--dataset", dataset, "2D dataset directory")->required();
  baseline->add_option("--annotations", annotations, "Annotation directory")->required();
  baseline->add_option("--out", out, "Prediction directory")->required();

  auto* triplet = app.add_subcommand("eval-triplet", "Score predictions with the triplet metric");
  triplet->add_option("--annotations", annotations, "Annotation directory")->required();
  triplet->add_option("--predictions", predictions, "Prediction directory")->required();
  triplet->add_option("--report", report, "Write the JSON report here");
  triplet->add_option("--soft-mode", soft_mode, "any_point or anchor_relation")
      ->check(CLI::IsMember({"any_point", "anchor_relation"}));

  auto* iou = app.add_subcommand("eval-iou", "Score dense predictions with optimal-threshold IOU");
  iou->add_option("--masks", masks, "Mask set directory")->required();
  iou->add_option("--predictions", predictions, "Prediction directory");
  iou->add_option("--plan", plan, "Write query points here instead of scoring");
  iou->add_option("--report", report, "Write the JSON report here");

  auto* preview = app.add_subcommand("preview", "Colour-coded annotation overlays");
  preview->add_option("--dataset", dataset, "2D dataset directory")->required();
  preview->add_option("--out", out, "Preview directory");

  CLI11_PARSE(app, argc, argv);

  try {
    PipelineConfig config = resolve_config(flags);
    if (mix) config.mix_count = *mix;
    if (*extract) return report_manifest(cmd_extract_textures(config, or_default(out, config, "textures")), config);
    if (*make) {
      return report_manifest(cmd_make_materials(config, textures, or_default(out, config, "materials")), config);
    }
    if (*gen2d) {
      if (count) config.gen2d.count = *count;
      return report_manifest(cmd_gen2d(config, materials, or_default(out, config, "gen2d")), config);
    }
    if (*gen3d) {
      if (count) config.gen3d.count = *count;
      if (!assets.empty()) config.gen3d.asset_index = assets;
      return report_manifest(cmd_gen3d(config, materials, or_default(out, config, "gen3d")), config);
    }
    if (*validate) {
      const fs::path index = assets.empty() ? fs::path(dataset) / "assets.json" : fs::path(assets);
      const RunManifest m = cmd_validate_scenes(dataset, index);
      for (const auto& item : m.items) {
        std::cout << item.id << " " << status_name(item.status);
        if (!item.reason.empty()) std::cout << " " << item.details.dump();
        std::cout << "\n";
      }
      return m.count(ItemStatus::kError) == 0 ? 0 : 1;
    }
    if (*annotate) {
      return report_manifest(
          cmd_annotate_samples(config, dataset, points, or_default(out, config, "annotations")), config);
    }
    if (*baseline) return report_manifest(cmd_color_baseline(dataset, annotations, out), config);
    if (*triplet) {
      if (soft_mode == "anchor_relation") config.metrics.soft_mode = SoftMode::kAnchorRelation;
      if (soft_mode == "any_point") config.metrics.soft_mode = SoftMode::kAnyPointInSimilarGroup;
      const EvalReport r = cmd_eval_triplet(config, annotations, predictions);
      emit_report(r, report);
      return 0;
    }
    if (*iou) {
      if (!plan.empty()) return report_manifest(cmd_plan_iou(config, masks, plan), config);
      if (predictions.empty()) throw ConfigError("eval-iou needs --predictions or --plan");
      const EvalReport r = cmd_eval_iou(config, masks, predictions);
      emit_report(r, report);
      return 0;
    }
    if (*preview) {
      return report_manifest(cmd_preview(dataset, or_default(out, config, "preview"), config.workers), config);
    }
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 1;
  } catch (const FormatError& e) {
    std::cerr << "format error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
