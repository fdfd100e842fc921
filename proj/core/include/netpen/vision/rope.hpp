#pragma once

#include "netpen/sim/camera.hpp"
#include "netpen/vision/hough.hpp"

#include <cstdint>
#include <optional>

namespace netpen::vision {

/// The detected rope pair. Pixel spacing and midpoint are measured along the
/// image row through the principal point, which keeps the triangulation
/// row-consistent.
struct RopePairObservation {
    HoughLine left_line;
    HoughLine right_line;
    double pixel_spacing = 0.0;
    double midpoint_u = 0.0;
    std::optional<double> distance_est; // meters
    std::optional<double> yaw_est;      // radians
    uint64_t frame_id = 0;
};

struct RopeFilterConfig {
    double max_tilt = 0.12;  // rad; lines within this of vertical qualify
    double merge_px = 24.0;  // cluster width at row cy
    double min_px = 30.0;    // acceptable pair spacing bounds
    double max_px = 260.0;
};

/// Filters lines to the near-vertical band, merges clusters closer than
/// merge_px at row cy (vote-weighted average), then picks the pair whose
/// spacing lies in [min_px, max_px] with the highest combined votes. Ties
/// prefer the pair centered closest to cx. Absence is a value, not an error.
std::optional<RopePairObservation> extract_rope_pair(const std::vector<HoughLine>& lines,
                                                     const sim::CameraIntrinsics& cam,
                                                     const RopeFilterConfig& cfg);

/// Triangulated distance Z = focal_px * rope_spacing / pixel_spacing.
/// Throws Error(DegenerateObservation) when pixel_spacing is below 1 px.
double estimate_distance(const RopePairObservation& obs, const sim::CameraIntrinsics& cam,
                         double rope_spacing);

} // namespace netpen::vision
