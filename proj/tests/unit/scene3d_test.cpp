// Copyright 2026 The matinfuse Authors.
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "matinfuse/core/error.hpp"
#include "matinfuse/scene3d/assets.hpp"
#include "matinfuse/scene3d/builder.hpp"
#include "matinfuse/scene3d/descriptor.hpp"
#include "matinfuse/scene3d/validate.hpp"

namespace matinfuse {
namespace {

AssetIndex sample_assets() {
  const nlohmann::json j = {
      {"schema_version", 1},
      {"meshes",
       {{{"id", "bunny"}, {"path", "meshes/bunny.obj"}, {"license", "CC0"}, {"radius", 0.8}},
        {{"id", "rock"}, {"path", "meshes/rock.obj"}, {"license", "CC0"}, {"has_uv", false}},
        {{"id", "vase"}, {"path", "meshes/vase.obj"}, {"license", "CC-BY"}, {"radius", 1.2}}}},
      {"hdris", {{{"id", "sky"}, {"path", "hdri/sky.exr"}, {"license", "CC0"}}}},
      {"materials",
       {{{"id", "wood"}, {"path", "mat/wood"}, {"license", "CC0"}},
        {{"id", "rust"}, {"path", "mat/rust"}, {"license", "CC0"}}}}};
  return parse_asset_index(j, "/assets");
}

Scene3DDescriptor sample_scene(std::uint64_t seed, int regions = 3) {
  std::vector<std::string> ids;
  for (int k = 0; k < regions; ++k) ids.push_back(k % 2 ? "rust" : "wood");
  return build_scene_descriptor(sample_assets(), RegionMapRef{"uv0", "uvmap", regions}, ids, seed);
}

TEST(Assets, ParseAndCheck) {
  const AssetIndex a = sample_assets();
  ASSERT_NE(a.find_mesh("rock"), nullptr);
  EXPECT_FALSE(a.find_mesh("rock")->has_uv);
  EXPECT_DOUBLE_EQ(a.find_mesh("vase")->radius, 1.2);
  EXPECT_EQ(a.find_hdri("nope"), nullptr);
  EXPECT_TRUE(check_asset_index(a, false).empty());
  AssetIndex dup = a;
  dup.meshes.push_back(dup.meshes[0]);
  EXPECT_FALSE(check_asset_index(dup, false).empty());
  EXPECT_FALSE(check_asset_index(a, true).empty());
  EXPECT_EQ(parse_asset_index(asset_index_to_json(a), "/assets"), a);
}

TEST(Scene, DeterministicPerSeed) {
  EXPECT_EQ(serialize_descriptor(sample_scene(4)), serialize_descriptor(sample_scene(4)));
  EXPECT_NE(serialize_descriptor(sample_scene(4)), serialize_descriptor(sample_scene(5)));
}

TEST(Scene, SerializationRoundTripIsByteExact) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Scene3DDescriptor d = sample_scene(seed);
    const std::string text = serialize_descriptor(d);
    const Scene3DDescriptor back = parse_descriptor(text);
    EXPECT_EQ(back, d);
    EXPECT_EQ(serialize_descriptor(back), text);
  }
}

TEST(Scene, GeneratedScenesValidate) {
  const AssetIndex assets = sample_assets();
  int textureless = 0, bindings = 0, grounds = 0;
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const Scene3DDescriptor d = sample_scene(seed, 1 + static_cast<int>(seed % 4));
    const ValidationReport r = validate_descriptor(d, assets);
    ASSERT_TRUE(r.ok()) << r.to_json().dump();
    ASSERT_FALSE(d.objects.empty());
    EXPECT_EQ(d.objects[0].transform.translation.x, 0.0);
    for (const auto& o : d.objects) {
      EXPECT_EQ(o.uv_projection, o.mesh_id == "rock" ? "box" : "mesh_uv");
      for (const auto& b : o.materials) {
        ++bindings;
        textureless += b.material.uniform.has_value();
      }
    }
    grounds += d.ground.has_value();
    EXPECT_TRUE(scene_bounds(d, assets).contains(d.camera.look_at, 1e-6));
    EXPECT_EQ(d.render, RenderSettings{});
  }
  EXPECT_NEAR(static_cast<double>(textureless) / bindings, 0.15, 0.05);
  EXPECT_NEAR(grounds / 300.0, 0.7, 0.08);
}

TEST(Scene, BuilderPreconditions) {
  AssetIndex empty;
  const std::vector<std::string> ids = {"wood"};
  EXPECT_THROW(build_scene_descriptor(empty, RegionMapRef{"m", "m", 1}, ids, 0), ConfigError);
  EXPECT_THROW(build_scene_descriptor(sample_assets(), RegionMapRef{"m", "m", 2}, ids, 0),
               ParameterError);
}

TEST(Validator, FlagsEachBrokenRule) {
  const AssetIndex assets = sample_assets();
  const auto broken = [&](auto mutate) {
    Scene3DDescriptor d = sample_scene(1);
    mutate(d);
    return validate_descriptor(d, assets);
  };
  EXPECT_TRUE(broken([](auto& d) { d.objects[0].mesh_id = "ghost"; }).has("unresolved asset"));
  EXPECT_TRUE(broken([](auto& d) { d.hdri.asset_id = "ghost"; }).has("unresolved asset"));
  EXPECT_TRUE(broken([](auto& d) { d.objects[0].materials[0].region = 7; }).has("unknown region"));
  EXPECT_TRUE(broken([](auto& d) { d.objects[0].materials.pop_back(); }).has("unassigned region"));
  EXPECT_TRUE(broken([](auto& d) { d.objects[0].materials[1].region = 0; }).has("duplicate region"));
  EXPECT_TRUE(broken([](auto& d) { d.objects[0].materials.clear(); }).has("empty material table"));
  EXPECT_TRUE(broken([](auto& d) { d.objects[0].uv_map_id = "zzz"; }).has("unknown region map"));
  EXPECT_TRUE(broken([](auto& d) { d.objects[0].uv_projection = "sphere"; }).has("unknown uv projection"));
  EXPECT_TRUE(broken([](auto& d) { d.camera.look_at = {100, 100, 100}; })
                  .has("camera look-at outside scene bounds"));
  EXPECT_TRUE(broken([](auto& d) { d.camera.focal_length_mm = 0; }).has("invalid focal length"));
  EXPECT_TRUE(broken([](auto& d) { d.render.samples = 0; }).has("invalid render settings"));
  EXPECT_TRUE(broken([](auto& d) { d.schema_version = 2; }).has("unsupported schema"));
  EXPECT_TRUE(broken([](auto& d) { d.objects.clear(); }).has("no objects"));
  EXPECT_TRUE(broken([](auto& d) { d.lights.push_back({"point", {}, -1.0}); }).has("negative light power"));
  EXPECT_TRUE(broken([](auto& d) {
                d.objects[0].materials[0].material = {"", UniformMaterial{{2.0, 0.1, 0.1}}};
              }).has("uniform material out of range"));
  EXPECT_TRUE(broken([](auto& d) {
                d.objects[0].materials[0].material = {"wood", UniformMaterial{}};
              }).has("ambiguous material"));
}

TEST(Descriptor, ParseErrorsNameTheField) {
  nlohmann::json j = descriptor_to_json(sample_scene(2));
  j["camera"]["focal_length_mm"] = "wide";
  try {
    descriptor_from_json(j);
    FAIL() << "expected FormatError";
  } catch (const FormatError& e) {
    EXPECT_NE(std::string(e.what()).find("camera"), std::string::npos);
  }
  EXPECT_THROW(parse_descriptor("{not json"), FormatError);
}

TEST(Descriptor, UniformMaterialAsPbr) {
  const PbrMaterial m = to_pbr(UniformMaterial{{0.2, 0.3, 0.4}, 0.7, 1.0, 0.0, 0.5}, 4, 4);
  EXPECT_EQ(check_material(m), "");
  EXPECT_DOUBLE_EQ(std::get<double>(m[Property::kRoughness]), 0.7);
  EXPECT_DOUBLE_EQ(m.albedo[2].at(1, 1), 0.4);
}

}  // namespace
}  // namespace matinfuse
