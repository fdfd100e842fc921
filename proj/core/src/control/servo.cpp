#include "netpen/control/servo.hpp"

#include <algorithm>

namespace netpen::control {

namespace {

PidState axis_pid(const AxisGains& g) {
    return make_pid(g.kp, g.ki, g.kd, -1.0, 1.0, g.integral_limit);
}

AxisGains axis_from_file(const ConfigFile& cfg, const std::string& prefix, AxisGains fallback) {
    AxisGains g = fallback;
    g.kp = cfg.get_double("gains", prefix + "_kp", g.kp);
    g.ki = cfg.get_double("gains", prefix + "_ki", g.ki);
    g.kd = cfg.get_double("gains", prefix + "_kd", g.kd);
    g.integral_limit = cfg.get_double("gains", prefix + "_integral_limit", g.integral_limit);
    return g;
}

} // namespace

PidBank make_pid_bank(const GainConfig& gains) {
    PidBank bank;
    bank.surge = axis_pid(gains.surge);
    bank.sway = axis_pid(gains.sway);
    bank.yaw = axis_pid(gains.yaw);
    return bank;
}

GainConfig gains_from_file(const ConfigFile& cfg) {
    GainConfig g;
    g.surge = axis_from_file(cfg, "surge", g.surge);
    g.sway = axis_from_file(cfg, "sway", g.sway);
    g.yaw = axis_from_file(cfg, "yaw", g.yaw);
    g.heave_v_max = cfg.get_double("vehicle", "v_max_heave", g.heave_v_max);
    return g;
}

std::pair<ControlCommand, PidBank> servo_command(
    const std::optional<vision::RopePairObservation>& obs, const MissionState& mission,
    const GainConfig& gains, const PidBank& pids, double dt, const sim::CameraIntrinsics& cam) {
    ControlCommand cmd;
    PidBank next = pids;
    if (!obs) return {cmd, next}; // hold: no heave while the net is not seen

    if (obs->distance_est) {
        double error = *obs->distance_est - mission.target_distance;
        std::tie(next.surge, cmd.surge) = pid_step(pids.surge, error, dt);
    }

    double lateral_error = (obs->midpoint_u - cam.cx) / cam.width;
    std::tie(next.sway, cmd.sway) = pid_step(pids.sway, lateral_error, dt);

    double yaw_error = obs->yaw_est ? -*obs->yaw_est : 0.0;
    std::tie(next.yaw, cmd.yaw_rate) = pid_step(pids.yaw, yaw_error, dt);

    cmd.heave = gains.heave_v_max > 0
                    ? std::clamp(mission.descent_rate / gains.heave_v_max, -1.0, 1.0)
                    : 0.0;
    return {cmd, next};
}

} // namespace netpen::control
