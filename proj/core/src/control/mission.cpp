#include "netpen/control/mission.hpp"

namespace netpen::control {

const char* to_string(Phase p) {
    switch (p) {
        case Phase::Acquire: return "ACQUIRE";
        case Phase::Track: return "TRACK";
        case Phase::Lost: return "LOST";
        case Phase::Done: return "DONE";
        case Phase::Abort: return "ABORT";
    }
    return "UNKNOWN";
}

MissionState mission_from_file(const ConfigFile& cfg) {
    MissionState m;
    m.target_distance = cfg.get_double("mission", "target_distance", m.target_distance);
    m.descent_rate = cfg.get_double("mission", "descent_rate", m.descent_rate);
    m.bottom_depth = cfg.get_double("mission", "bottom_depth", m.bottom_depth);
    m.acquire_frames = static_cast<int>(cfg.get_int("mission", "acquire_frames",
                                                    m.acquire_frames));
    m.lost_frame_limit = static_cast<int>(cfg.get_int("mission", "lost_frames",
                                                      m.lost_frame_limit));
    m.abort_frame_limit = static_cast<int>(cfg.get_int("mission", "abort_frames",
                                                       m.abort_frame_limit));
    return m;
}

MissionState mission_step(const MissionState& mission,
                          const std::optional<vision::RopePairObservation>& obs,
                          const link::Telemetry& telemetry) {
    MissionState next = mission;
    if (is_terminal(mission.phase)) return next;

    next.frames_in_phase++;
    bool valid = obs.has_value();
    next.valid_streak = valid ? mission.valid_streak + 1 : 0;
    next.lost_frames = valid ? 0 : mission.lost_frames + 1;

    auto enter = [&next](Phase p) {
        next.phase = p;
        next.frames_in_phase = 0;
    };

    // Reaching the bottom ends the mission from any active phase; a zero
    // bottom_depth therefore completes on the first step.
    if (telemetry.depth >= mission.bottom_depth) {
        enter(Phase::Done);
        return next;
    }

    switch (mission.phase) {
        case Phase::Acquire:
            if (next.valid_streak >= mission.acquire_frames) enter(Phase::Track);
            break;
        case Phase::Track:
            if (next.lost_frames >= mission.lost_frame_limit) {
                enter(Phase::Lost);
                next.lost_frames = mission.lost_frames + 1; // absences keep counting
            }
            break;
        case Phase::Lost:
            if (valid) {
                enter(Phase::Track);
            } else if (next.lost_frames >= mission.abort_frame_limit) {
                enter(Phase::Abort);
            }
            break;
        case Phase::Done:
        case Phase::Abort:
            break;
    }
    return next;
}

} // namespace netpen::control
