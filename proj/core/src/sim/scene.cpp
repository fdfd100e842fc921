#include "netpen/sim/scene.hpp"

#include "netpen/error.hpp"

#include <cmath>
#include <string>

namespace netpen::sim {

namespace {

void check(bool ok, const std::string& field, const std::string& why) {
    if (!ok) throw Error(ErrorCode::InvalidConfig, field + ": " + why);
}

} // namespace

NetScene build_scene(const SceneConfig& config) {
    check(config.net_width > 0, "net_width", "must be positive");
    check(config.net_depth > 0, "net_depth", "must be positive");
    check(config.mesh_pitch > 0, "mesh_pitch", "must be positive");
    check(config.twine_width > 0, "twine_width", "must be positive");
    check(config.twine_width < config.mesh_pitch, "twine_width", "must be less than mesh_pitch");
    check(config.rope_spacing > 0, "rope_spacing", "must be positive");
    check(config.rope_width > 0, "rope_width", "must be positive");
    check(config.rope_spacing / 2 + config.rope_width / 2 <= config.net_width / 2, "rope_spacing",
          "ropes must lie within the net width");
    check(config.water.attenuation_per_m >= 0, "water.attenuation_per_m", "must be non-negative");
    check(config.water.noise_sigma >= 0, "water.noise_sigma", "must be non-negative");

    for (size_t i = 0; i < config.defects.size(); ++i) {
        const DefectSpec& d = config.defects[i];
        const std::string field = "defect." + std::to_string(i);
        check(d.extent_x > 0 && d.extent_y > 0, field + ".extent", "must be strictly positive");
        check(std::abs(d.center_x) + d.extent_x / 2 <= config.net_width / 2, field + ".center_x",
              "defect must lie within net width");
        check(d.center_y - d.extent_y / 2 >= 0 && d.center_y + d.extent_y / 2 <= config.net_depth,
              field + ".center_y", "defect must lie within net depth");
    }

    NetScene scene;
    scene.net_width = config.net_width;
    scene.net_depth = config.net_depth;
    scene.mesh_pitch = config.mesh_pitch;
    scene.twine_width = config.twine_width;
    scene.rope_spacing = config.rope_spacing;
    scene.rope_width = config.rope_width;
    scene.defects = config.defects;
    scene.water = config.water;
    scene.seed = config.seed;
    return scene;
}

SceneConfig scene_config_from_file(const ConfigFile& cfg) {
    SceneConfig sc;
    sc.net_width = cfg.get_double("scene", "net_width", sc.net_width);
    sc.net_depth = cfg.get_double("scene", "net_depth", sc.net_depth);
    sc.mesh_pitch = cfg.get_double("scene", "mesh_pitch", sc.mesh_pitch);
    sc.twine_width = cfg.get_double("scene", "twine_width", sc.twine_width);
    sc.rope_spacing = cfg.get_double("scene", "rope_spacing", sc.rope_spacing);
    sc.rope_width = cfg.get_double("scene", "rope_width", sc.rope_width);
    sc.water.attenuation_per_m =
        cfg.get_double("scene", "attenuation_per_m", sc.water.attenuation_per_m);
    sc.water.noise_sigma = cfg.get_double("scene", "noise_sigma", sc.water.noise_sigma);
    sc.seed = static_cast<uint64_t>(cfg.get_int("scene", "seed", 0));

    for (int i = 0;; ++i) {
        std::string prefix = "defect." + std::to_string(i) + ".";
        auto cls_name = cfg.get("scene", prefix + "class");
        if (!cls_name) break;
        auto cls = defect_class_from_string(*cls_name);
        if (!cls)
            throw Error(ErrorCode::InvalidConfig,
                        "scene." + prefix + "class: unknown class " + *cls_name);
        DefectSpec d;
        d.cls = *cls;
        d.center_x = cfg.require_double("scene", prefix + "center_x");
        d.center_y = cfg.require_double("scene", prefix + "center_y");
        d.extent_x = cfg.require_double("scene", prefix + "extent_x");
        d.extent_y = cfg.require_double("scene", prefix + "extent_y");
        sc.defects.push_back(d);
    }
    return sc;
}

} // namespace netpen::sim
