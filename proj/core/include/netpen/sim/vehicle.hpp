#pragma once

#include "netpen/config.hpp"
#include "netpen/control/command.hpp"

namespace netpen::sim {

/// Pose and velocity of the simulated vehicle relative to the net plane.
/// x: lateral offset of the camera axis from the rope-pair midline (m)
/// z: perpendicular distance to the net plane (m), always > 0
/// depth: below the net top (m); yaw: 0 = camera axis normal to the plane.
struct VehicleState {
    double x = 0.0;
    double z = 2.0;
    double depth = 0.0;
    double yaw = 0.0;
    double surge_vel = 0.0; // approach speed; dz/dt = -surge_vel
    double sway_vel = 0.0;  // dx/dt
    double heave_vel = 0.0; // d(depth)/dt
    double yaw_vel = 0.0;   // d(yaw)/dt

    bool operator==(const VehicleState&) const = default;
};

/// First-order actuator lag per DOF with saturation at v_max.
struct VehicleParams {
    double v_max_surge = 0.5;  // m/s at command 1.0
    double v_max_sway = 0.3;
    double v_max_heave = 0.25;
    double v_max_yaw = 0.6;    // rad/s
    double tau_surge = 0.3;    // s
    double tau_sway = 0.3;
    double tau_heave = 0.3;
    double tau_yaw = 0.3;
};

/// Sinusoidal current, added to the z and x velocities during integration:
/// w(t) = amplitude * sin(2*pi*t/period + phase). amplitude 0 disables it.
struct DisturbanceParams {
    double amplitude_mps = 0.0;
    double period_s = 8.0;
    double phase_rad = 0.0;

    double velocity_at(double t) const;
};

/// Advances one control tick. Commands are saturated, never rejected; the
/// pose integrates actuator velocity plus the disturbance. z is floored and
/// yaw clamped so the state invariants survive any command sequence.
/// Deterministic: no randomness enters the dynamics.
/// Pre: dt in (0, 0.5]. time_s is the simulation clock used to evaluate the
/// disturbance over [time_s, time_s + dt].
VehicleState step_vehicle(const VehicleState& state, const control::ControlCommand& cmd,
                          const VehicleParams& params, const DisturbanceParams& disturbance,
                          double dt, double time_s);

VehicleParams vehicle_params_from_file(const ConfigFile& cfg);

} // namespace netpen::sim
