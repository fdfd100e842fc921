#pragma once

#include "netpen/config.hpp"
#include "netpen/link/messages.hpp"
#include "netpen/vision/rope.hpp"

#include <optional>

namespace netpen::control {

enum class Phase : uint8_t {
    Acquire = 0,
    Track = 1,
    Lost = 2,
    Done = 3,
    Abort = 4,
};

const char* to_string(Phase p);

/// Top-to-bottom traversal state machine.
///
/// ACQUIRE -> TRACK  after acquire_frames consecutive valid observations
/// TRACK   -> LOST   after lost_frame_limit consecutive absences
/// LOST    -> TRACK  on any valid observation
/// LOST    -> ABORT  after abort_frame_limit absences in LOST
/// TRACK   -> DONE   when telemetry depth reaches bottom_depth
/// DONE and ABORT are terminal.
struct MissionState {
    Phase phase = Phase::Acquire;
    int frames_in_phase = 0;
    int valid_streak = 0; // consecutive valid observations while acquiring
    int lost_frames = 0;  // consecutive absences
    double target_distance = 2.0;  // meters
    double descent_rate = 0.1;     // meters/s
    double bottom_depth = 9.5;     // meters
    int acquire_frames = 5;
    int lost_frame_limit = 10;
    int abort_frame_limit = 50;
};

MissionState mission_from_file(const ConfigFile& cfg);

MissionState mission_step(const MissionState& mission,
                          const std::optional<vision::RopePairObservation>& obs,
                          const link::Telemetry& telemetry);

inline bool is_terminal(Phase p) { return p == Phase::Done || p == Phase::Abort; }

} // namespace netpen::control
