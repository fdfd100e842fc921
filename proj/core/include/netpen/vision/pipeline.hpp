#pragma once

#include "netpen/config.hpp"
#include "netpen/vision/canny.hpp"
#include "netpen/vision/hough.hpp"
#include "netpen/vision/rope.hpp"
#include "netpen/vision/yaw.hpp"

namespace netpen::vision {

/// Per-frame perception settings. The rope stage runs every frame with a
/// heavy blur so only the wide rope bands survive; the yaw stage keeps the
/// mesh texture and runs a finer Hough every yaw_every_n frames.
struct VisionConfig {
    double rope_spacing_m = 0.5; // known real spacing between the ropes

    double rope_sigma = 3.0;
    double rope_low = 12.0;
    double rope_high = 22.0;
    double rope_rho_res = 1.0;
    double rope_theta_res = 3.14159265358979323846 / 180.0;
    double rope_min_votes_frac = 0.35; // of image height
    RopeFilterConfig rope_filter;

    bool yaw_enabled = true;
    int yaw_every_n = 5;
    double yaw_sigma = 1.1;
    double yaw_low = 18.0;
    double yaw_high = 32.0;
    double yaw_rho_res = 1.0;
    double yaw_theta_res = 3.14159265358979323846 / 720.0;
    double yaw_min_votes_frac = 0.3; // of image width
    YawEstimatorConfig yaw_cfg;
};

/// Runs Canny + Hough + rope-pair extraction, fills distance_est by
/// triangulation and yaw_est on yaw frames. Returns nothing when no valid
/// rope pair is visible.
std::optional<RopePairObservation> analyze_frame(const Image& img,
                                                 const sim::CameraIntrinsics& cam,
                                                 const VisionConfig& cfg, uint64_t frame_id);

VisionConfig vision_config_from_file(const ConfigFile& file);

} // namespace netpen::vision
