#include "netpen/vision/pipeline.hpp"

#include <algorithm>
#include <cmath>

namespace netpen::vision {

std::optional<RopePairObservation> analyze_frame(const Image& img,
                                                 const sim::CameraIntrinsics& cam,
                                                 const VisionConfig& cfg, uint64_t frame_id) {
    EdgeMap rope_edges = canny(img, cfg.rope_sigma, cfg.rope_low, cfg.rope_high);
    int rope_min_votes =
        std::max(1, static_cast<int>(std::lround(cfg.rope_min_votes_frac * img.height)));
    std::vector<HoughLine> rope_lines =
        hough_lines(rope_edges, cfg.rope_rho_res, cfg.rope_theta_res, rope_min_votes);

    std::optional<RopePairObservation> obs = extract_rope_pair(rope_lines, cam, cfg.rope_filter);
    if (!obs) return std::nullopt;
    obs->frame_id = frame_id;
    obs->distance_est = estimate_distance(*obs, cam, cfg.rope_spacing_m);

    if (cfg.yaw_enabled && (cfg.yaw_every_n <= 1 || frame_id % cfg.yaw_every_n == 0)) {
        EdgeMap mesh_edges = canny(img, cfg.yaw_sigma, cfg.yaw_low, cfg.yaw_high);
        int yaw_min_votes =
            std::max(1, static_cast<int>(std::lround(cfg.yaw_min_votes_frac * img.width)));
        std::vector<HoughLine> mesh_lines =
            hough_lines(mesh_edges, cfg.yaw_rho_res, cfg.yaw_theta_res, yaw_min_votes);
        obs->yaw_est = estimate_yaw(mesh_lines, cam, cfg.yaw_cfg);
    }
    return obs;
}

VisionConfig vision_config_from_file(const ConfigFile& file) {
    VisionConfig v;
    v.rope_spacing_m = file.get_double("vision", "rope_spacing_m", v.rope_spacing_m);
    v.rope_sigma = file.get_double("vision", "rope_sigma", v.rope_sigma);
    v.rope_low = file.get_double("vision", "rope_low", v.rope_low);
    v.rope_high = file.get_double("vision", "rope_high", v.rope_high);
    v.rope_rho_res = file.get_double("vision", "rope_rho_res", v.rope_rho_res);
    v.rope_theta_res = file.get_double("vision", "rope_theta_res", v.rope_theta_res);
    v.rope_min_votes_frac = file.get_double("vision", "rope_min_votes_frac",
                                            v.rope_min_votes_frac);
    v.rope_filter.max_tilt = file.get_double("vision", "rope_max_tilt", v.rope_filter.max_tilt);
    v.rope_filter.merge_px = file.get_double("vision", "rope_merge_px", v.rope_filter.merge_px);
    v.rope_filter.min_px = file.get_double("vision", "rope_min_px", v.rope_filter.min_px);
    v.rope_filter.max_px = file.get_double("vision", "rope_max_px", v.rope_filter.max_px);

    v.yaw_enabled = file.get_bool("vision", "yaw_enabled", v.yaw_enabled);
    v.yaw_every_n = static_cast<int>(file.get_int("vision", "yaw_every_n", v.yaw_every_n));
    v.yaw_sigma = file.get_double("vision", "yaw_sigma", v.yaw_sigma);
    v.yaw_low = file.get_double("vision", "yaw_low", v.yaw_low);
    v.yaw_high = file.get_double("vision", "yaw_high", v.yaw_high);
    v.yaw_rho_res = file.get_double("vision", "yaw_rho_res", v.yaw_rho_res);
    v.yaw_theta_res = file.get_double("vision", "yaw_theta_res", v.yaw_theta_res);
    v.yaw_min_votes_frac = file.get_double("vision", "yaw_min_votes_frac", v.yaw_min_votes_frac);
    v.yaw_cfg.theta_band = file.get_double("vision", "yaw_theta_band", v.yaw_cfg.theta_band);
    v.yaw_cfg.center_band_px =
        file.get_double("vision", "yaw_center_band_px", v.yaw_cfg.center_band_px);
    v.yaw_cfg.min_lines =
        static_cast<int>(file.get_int("vision", "yaw_min_lines", v.yaw_cfg.min_lines));
    return v;
}

} // namespace netpen::vision
