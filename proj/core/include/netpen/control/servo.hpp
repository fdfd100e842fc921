#pragma once

#include "netpen/config.hpp"
#include "netpen/control/command.hpp"
#include "netpen/control/mission.hpp"
#include "netpen/control/pid.hpp"
#include "netpen/sim/camera.hpp"
#include "netpen/vision/rope.hpp"

#include <optional>

namespace netpen::control {

struct AxisGains {
    double kp = 0.0;
    double ki = 0.0;
    double kd = 0.0;
    double integral_limit = 1.0;
};

struct GainConfig {
    AxisGains surge{1.8, 0.15, 0.5, 0.5};
    AxisGains sway{2.5, 0.1, 0.6, 0.3};
    AxisGains yaw{1.5, 0.05, 0.3, 0.3};
    double heave_v_max = 0.25; // maps descent_rate (m/s) to a unit command
};

struct PidBank {
    PidState surge;
    PidState sway;
    PidState yaw;
};

PidBank make_pid_bank(const GainConfig& gains);
GainConfig gains_from_file(const ConfigFile& cfg);

/// One servo tick.
///
/// With an observation: surge regulates distance_est to the target, sway
/// regulates the rope midpoint to the principal column (error normalized by
/// image width), yaw_rate regulates the vision yaw to zero (zero when the
/// estimate is absent), heave carries the fixed descent command. Without an
/// observation every axis holds at zero.
std::pair<ControlCommand, PidBank> servo_command(
    const std::optional<vision::RopePairObservation>& obs, const MissionState& mission,
    const GainConfig& gains, const PidBank& pids, double dt, const sim::CameraIntrinsics& cam);

} // namespace netpen::control
