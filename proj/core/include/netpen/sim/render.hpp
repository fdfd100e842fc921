#pragma once

#include "netpen/defect_class.hpp"
#include "netpen/image.hpp"
#include "netpen/sim/camera.hpp"
#include "netpen/sim/scene.hpp"
#include "netpen/sim/vehicle.hpp"

#include <vector>

namespace netpen::sim {

/// Oracle record accompanying each rendered frame.
struct TruthBox {
    DefectClass cls;
    double x_min, y_min, x_max, y_max; // pixels, clipped to image bounds

    bool operator==(const TruthBox&) const = default;
};

struct GroundTruth {
    double true_distance = 0.0;
    double true_yaw = 0.0;
    std::vector<TruthBox> visible_defects;
};

/// Perspective projection of the net plane: ropes darker and wider than
/// twine, holes erase twine, plastic renders bright, vegetation/biofouling
/// render as textured occluding patches. Contrast decays as exp(-attenuation
/// * range); per-pixel Gaussian noise is keyed by (scene seed, frame_id), so
/// the same inputs always reproduce the same pixels.
Image render_frame(const NetScene& scene, const VehicleState& state,
                   const CameraIntrinsics& cam, uint64_t frame_id);

GroundTruth ground_truth(const NetScene& scene, const VehicleState& state,
                         const CameraIntrinsics& cam);

} // namespace netpen::sim
