#pragma once

#include "netpen/sim/camera.hpp"
#include "netpen/vision/hough.hpp"

#include <optional>

namespace netpen::vision {

struct YawEstimatorConfig {
    double theta_band = 0.35;     // rad around pi/2 accepted as mesh lines
    double center_band_px = 12.0; // rows this close to cy are excluded
    int min_lines = 3;
};

/// Yaw from the perspective slopes of near-horizontal mesh lines.
///
/// A horizontal line on the net plane at image row v (measured at column cx)
/// projects with slope s satisfying tan(yaw) = -s * f / (v - cy); lines near
/// the center row are excluded as the relation degenerates there. Returns
/// the median of per-line estimates, or nothing when fewer than min_lines
/// qualify.
std::optional<double> estimate_yaw(const std::vector<HoughLine>& lines,
                                   const sim::CameraIntrinsics& cam,
                                   const YawEstimatorConfig& cfg);

} // namespace netpen::vision
