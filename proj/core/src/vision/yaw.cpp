#include "netpen/vision/yaw.hpp"

#include <algorithm>
#include <cmath>

namespace netpen::vision {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

std::optional<double> estimate_yaw(const std::vector<HoughLine>& lines,
                                   const sim::CameraIntrinsics& cam,
                                   const YawEstimatorConfig& cfg) {
    std::vector<double> estimates;
    for (const HoughLine& line : lines) {
        if (std::abs(line.theta - kPi / 2) > cfg.theta_band) continue;
        double sin_t = std::sin(line.theta);
        double cos_t = std::cos(line.theta);
        double v = (line.rho - cam.cx * cos_t) / sin_t; // row at column cx
        double offset = v - cam.cy;
        if (std::abs(offset) < cfg.center_band_px) continue;
        double slope = -cos_t / sin_t;
        estimates.push_back(std::atan(-slope * cam.focal_px / offset));
    }
    if (static_cast<int>(estimates.size()) < cfg.min_lines) return std::nullopt;

    std::sort(estimates.begin(), estimates.end());
    size_t n = estimates.size();
    if (n % 2 == 1) return estimates[n / 2];
    return (estimates[n / 2 - 1] + estimates[n / 2]) / 2;
}

} // namespace netpen::vision
