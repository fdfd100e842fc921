#pragma once

#include "netpen/config.hpp"

namespace netpen::sim {

/// Pinhole intrinsics. Pixel coordinates have x right, y down, origin at the
/// top-left corner.
struct CameraIntrinsics {
    double focal_px = 400.0;
    double cx = 160.0;
    double cy = 120.0;
    int width = 320;
    int height = 240;

    bool operator==(const CameraIntrinsics&) const = default;
};

/// Throws Error(InvalidConfig) naming the offending field.
void validate(const CameraIntrinsics& cam);

CameraIntrinsics camera_from_file(const ConfigFile& cfg);

} // namespace netpen::sim
