#include "netpen/sim/camera.hpp"

#include "netpen/error.hpp"

namespace netpen::sim {

void validate(const CameraIntrinsics& cam) {
    if (cam.focal_px <= 0) throw Error(ErrorCode::InvalidConfig, "focal_px: must be positive");
    if (cam.width <= 0 || cam.height <= 0)
        throw Error(ErrorCode::InvalidConfig, "camera width/height: must be positive");
    if (cam.cx < 0 || cam.cx >= cam.width)
        throw Error(ErrorCode::InvalidConfig, "cx: must lie within [0, width)");
    if (cam.cy < 0 || cam.cy >= cam.height)
        throw Error(ErrorCode::InvalidConfig, "cy: must lie within [0, height)");
}

CameraIntrinsics camera_from_file(const ConfigFile& cfg) {
    CameraIntrinsics cam;
    cam.focal_px = cfg.get_double("camera", "focal_px", cam.focal_px);
    cam.width = static_cast<int>(cfg.get_int("camera", "width", cam.width));
    cam.height = static_cast<int>(cfg.get_int("camera", "height", cam.height));
    cam.cx = cfg.get_double("camera", "cx", cam.width / 2.0);
    cam.cy = cfg.get_double("camera", "cy", cam.height / 2.0);
    validate(cam);
    return cam;
}

} // namespace netpen::sim
