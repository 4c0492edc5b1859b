// Copyright 2026 The matinfuse Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "matinfuse/core/manifest.hpp"
#include "matinfuse/pipeline/config.hpp"

namespace matinfuse {

// <out>/tiles/<tile>.png, <out>/images/<image>.json, <out>/tiles.json and
// <out>/manifest.json.
RunManifest cmd_extract_textures(const PipelineConfig& config, const std::filesystem::path& out);

// <out>/materials/<id>/ per tile plus mix_count mixed materials,
// <out>/materials.json and <out>/manifest.json.
RunManifest cmd_make_materials(const PipelineConfig& config, const std::filesystem::path& textures,
                               const std::filesystem::path& out);

// Textures are material albedos from `materials`; backgrounds and region
// map sources come from the corpus.
RunManifest cmd_gen2d(const PipelineConfig& config, const std::filesystem::path& materials,
                      const std::filesystem::path& out);

// <out>/scenes/NNNNNN/{scene.json, uvmap/}, <out>/assets.json (the asset
// index extended by the generated materials) and <out>/manifest.json.
RunManifest cmd_gen3d(const PipelineConfig& config, const std::filesystem::path& materials,
                      const std::filesystem::path& out);

// Validates every scenes/*/scene.json under `dir` against `assets`.
RunManifest cmd_validate_scenes(const std::filesystem::path& dir,
                                const std::filesystem::path& assets);

// Annotation per ground-truth 2D sample: points drawn where one material
// dominates, grouped by material id. Written to <out>/<sample>.json.
RunManifest cmd_annotate_samples(const PipelineConfig& config, const std::filesystem::path& dataset,
                                 int points_per_material, const std::filesystem::path& out);

// Sparse CSV predictions from colour distance between annotated points, for
// every <annotations>/*.json. Lets the harness be exercised without a model.
RunManifest cmd_color_baseline(const std::filesystem::path& dataset,
                               const std::filesystem::path& annotations,
                               const std::filesystem::path& out);

struct EvalReport {
  RunManifest manifest;
  nlohmann::json report;
  std::string table;
};

// <annotations>/<image>.json with predictions either <predictions>/<image>.csv
// or a dense directory <predictions>/<image>/index.json listing one plane per
// point: {"planes": ["p0.png", ...]}.
EvalReport cmd_eval_triplet(const PipelineConfig& config, const std::filesystem::path& annotations,
                            const std::filesystem::path& predictions);

// Query points for every <masks>/<image>/masks.json, written to
// <out>/<image>/queries.json.
RunManifest cmd_plan_iou(const PipelineConfig& config, const std::filesystem::path& masks,
                         const std::filesystem::path& out);

// Predictions as <predictions>/<image>/index.json {"planes": [...]}, one
// plane per planned query, in query order.
EvalReport cmd_eval_iou(const PipelineConfig& config, const std::filesystem::path& masks,
                        const std::filesystem::path& predictions);

// Annotation overlays for every sample of a 2D dataset: <out>/<sample>.png.
RunManifest cmd_preview(const std::filesystem::path& dataset, const std::filesystem::path& out,
                        int workers);

// 0 when the error fraction is within the limit, else 2.
int exit_code_for(const RunManifest& manifest, double max_failure_rate);

}  // namespace matinfuse
