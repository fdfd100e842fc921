#pragma once

#include "netpen/config.hpp"
#include "netpen/defect_class.hpp"

#include <cstdint>
#include <vector>

namespace netpen::sim {

/// A rectangular anomaly painted onto the net plane. Coordinates are meters
/// on the plane: x lateral (0 = rope-pair midline), y depth below the net top.
struct DefectSpec {
    DefectClass cls = DefectClass::NetHole;
    double center_x = 0.0;
    double center_y = 0.0;
    double extent_x = 0.0;
    double extent_y = 0.0;

    bool operator==(const DefectSpec&) const = default;
};

struct WaterParams {
    double attenuation_per_m = 0.12; // exponential contrast loss with range
    double noise_sigma = 3.0;        // additive Gaussian noise, gray levels

    bool operator==(const WaterParams&) const = default;
};

struct SceneConfig {
    double net_width = 6.0;   // meters, centered on the rope midline
    double net_depth = 10.0;  // meters, vertical extent
    double mesh_pitch = 0.03; // twine grid period
    double twine_width = 0.006;
    double rope_spacing = 0.5; // distance between the two vertical ropes
    double rope_width = 0.05;
    std::vector<DefectSpec> defects;
    WaterParams water;
    uint64_t seed = 0;
};

/// Validated, immutable world description. Snapshots are safe to share
/// across threads.
struct NetScene {
    double net_width = 0.0;
    double net_depth = 0.0;
    double mesh_pitch = 0.0;
    double twine_width = 0.0;
    double rope_spacing = 0.0;
    double rope_width = 0.0;
    std::vector<DefectSpec> defects;
    WaterParams water;
    uint64_t seed = 0;

    bool operator==(const NetScene&) const = default;
};

/// Validates the config and returns the scene. Identical config + seed give
/// identical scenes. Throws Error(InvalidConfig) naming the offending field.
NetScene build_scene(const SceneConfig& config);

/// Reads the [scene] section (flat key = value; defects as defect.N.* keys).
SceneConfig scene_config_from_file(const ConfigFile& cfg);

} // namespace netpen::sim
