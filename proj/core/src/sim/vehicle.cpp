#include "netpen/sim/vehicle.hpp"

#include "netpen/error.hpp"

#include <algorithm>
#include <cmath>

namespace netpen::sim {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kMinDistance = 0.05;   // the hull cannot cross the net plane
constexpr double kMaxYaw = kPi / 2 - 1e-3;

double clamp_unit(double v) { return std::clamp(v, -1.0, 1.0); }

// Velocity after a first-order lag over dt, and its exact integral (the
// distance traveled), so pose integration has no Euler drift.
struct LagStep {
    double velocity;
    double travel;
};

LagStep lag_step(double v0, double v_cmd, double tau, double dt) {
    if (tau <= 0) return {v_cmd, v_cmd * dt};
    double decay = std::exp(-dt / tau);
    double v1 = v_cmd + (v0 - v_cmd) * decay;
    double travel = v_cmd * dt + (v0 - v_cmd) * tau * (1.0 - decay);
    return {v1, travel};
}

} // namespace

double DisturbanceParams::velocity_at(double t) const {
    if (amplitude_mps == 0.0) return 0.0;
    return amplitude_mps * std::sin(2.0 * kPi * t / period_s + phase_rad);
}

VehicleState step_vehicle(const VehicleState& state, const control::ControlCommand& cmd,
                          const VehicleParams& params, const DisturbanceParams& disturbance,
                          double dt, double time_s) {
    if (!(dt > 0.0 && dt <= 0.5))
        throw Error(ErrorCode::InvalidConfig, "step_vehicle dt must be in (0, 0.5]");

    LagStep surge = lag_step(state.surge_vel, clamp_unit(cmd.surge) * params.v_max_surge,
                             params.tau_surge, dt);
    LagStep sway = lag_step(state.sway_vel, clamp_unit(cmd.sway) * params.v_max_sway,
                            params.tau_sway, dt);
    LagStep heave = lag_step(state.heave_vel, clamp_unit(cmd.heave) * params.v_max_heave,
                             params.tau_heave, dt);
    LagStep yaw = lag_step(state.yaw_vel, clamp_unit(cmd.yaw_rate) * params.v_max_yaw,
                           params.tau_yaw, dt);

    // Exact integral of the sinusoidal current over [time_s, time_s + dt].
    double drift = 0.0;
    if (disturbance.amplitude_mps != 0.0) {
        double omega = 2.0 * kPi / disturbance.period_s;
        double a0 = omega * time_s + disturbance.phase_rad;
        double a1 = omega * (time_s + dt) + disturbance.phase_rad;
        drift = disturbance.amplitude_mps / omega * (std::cos(a0) - std::cos(a1));
    }

    VehicleState next = state;
    next.surge_vel = surge.velocity;
    next.sway_vel = sway.velocity;
    next.heave_vel = heave.velocity;
    next.yaw_vel = yaw.velocity;
    next.z = state.z - surge.travel + drift;
    next.x = state.x + sway.travel + drift;
    next.depth = state.depth + heave.travel;
    next.yaw = state.yaw + yaw.travel;

    if (next.z < kMinDistance) {
        next.z = kMinDistance;
        next.surge_vel = std::min(next.surge_vel, 0.0);
    }
    next.yaw = std::clamp(next.yaw, -kMaxYaw, kMaxYaw);
    return next;
}

VehicleParams vehicle_params_from_file(const ConfigFile& cfg) {
    VehicleParams p;
    p.v_max_surge = cfg.get_double("vehicle", "v_max_surge", p.v_max_surge);
    p.v_max_sway = cfg.get_double("vehicle", "v_max_sway", p.v_max_sway);
    p.v_max_heave = cfg.get_double("vehicle", "v_max_heave", p.v_max_heave);
    p.v_max_yaw = cfg.get_double("vehicle", "v_max_yaw", p.v_max_yaw);
    p.tau_surge = cfg.get_double("vehicle", "tau_surge", p.tau_surge);
    p.tau_sway = cfg.get_double("vehicle", "tau_sway", p.tau_sway);
    p.tau_heave = cfg.get_double("vehicle", "tau_heave", p.tau_heave);
    p.tau_yaw = cfg.get_double("vehicle", "tau_yaw", p.tau_yaw);
    return p;
}

} // namespace netpen::sim
