#include "netpen/control/pid.hpp"

#include "netpen/error.hpp"

#include <algorithm>

namespace netpen::control {

PidState make_pid(double kp, double ki, double kd, double out_min, double out_max,
                  double integral_limit) {
    if (!(out_min < out_max))
        throw Error(ErrorCode::InvalidConfig, "pid: out_min must be less than out_max");
    if (integral_limit < 0)
        throw Error(ErrorCode::InvalidConfig, "pid: integral_limit must be >= 0");
    PidState s;
    s.kp = kp;
    s.ki = ki;
    s.kd = kd;
    s.out_min = out_min;
    s.out_max = out_max;
    s.integral_limit = integral_limit;
    return s;
}

std::pair<PidState, double> pid_step(const PidState& state, double error, double dt) {
    if (!(dt > 0)) throw Error(ErrorCode::InvalidConfig, "pid_step: dt must be positive");

    PidState next = state;
    next.integral = std::clamp(state.integral + error * dt, -state.integral_limit,
                               state.integral_limit);
    double derivative = (error - state.prev_error) / dt;
    next.prev_error = error;

    double raw = state.kp * error + state.ki * next.integral + state.kd * derivative;
    double out = std::clamp(raw, state.out_min, state.out_max);
    return {next, out};
}

} // namespace netpen::control
