#pragma once

namespace netpen::control {

/// Normalized thruster-fraction commands, every component in [-1, 1].
/// Sign conventions: positive surge approaches the net (decreases distance),
/// positive sway moves the camera toward larger lateral offset x, positive
/// heave descends, positive yaw_rate increases yaw.
struct ControlCommand {
    double surge = 0.0;
    double sway = 0.0;
    double heave = 0.0;
    double yaw_rate = 0.0;

    bool operator==(const ControlCommand&) const = default;
};

} // namespace netpen::control
