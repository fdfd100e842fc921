#pragma once

#include <utility>

namespace netpen::control {

/// PID with clamping anti-windup: the integral is clamped to
/// +/- integral_limit before it contributes to the output, and the output is
/// saturated to [out_min, out_max].
struct PidState {
    double kp = 0.0;
    double ki = 0.0;
    double kd = 0.0;
    double integral = 0.0;
    double prev_error = 0.0;
    double out_min = -1.0;
    double out_max = 1.0;
    double integral_limit = 1.0;
};

PidState make_pid(double kp, double ki, double kd, double out_min = -1.0, double out_max = 1.0,
                  double integral_limit = 1.0);

/// One controller tick. Pre: dt > 0. Returns the updated state and the
/// saturated output.
std::pair<PidState, double> pid_step(const PidState& state, double error, double dt);

} // namespace netpen::control
