#pragma once

#include "netpen/runner/mission_config.hpp"
#include "netpen/runner/report.hpp"

#include <functional>

namespace netpen::runner {

/// The per-frame detector the topside runs: mesh period then window
/// classification; frames with no usable periodicity yield no detections.
std::function<std::vector<detect::Detection>(const Image&)> make_classical_detector(
    const detect::ClassicalConfig& detect_cfg, const detect::PeriodConfig& period_cfg);

/// Serves one detection session on an open transport: replies to each
/// VideoFrame with a DetectionReport, swallows telemetry, heartbeats as
/// configured. Returns when the peer closes or times out.
link::SessionOutcome serve_topside(link::Transport& transport, const MissionConfig& cfg);

/// Runs the closed-loop inspection mission: render -> ship over the link ->
/// vision -> detect -> mission step -> servo -> vehicle step, until DONE,
/// ABORT, or the duration cap. Deterministic for a given (config, seed) in
/// both link modes. Writes artifacts when out_dir is set.
MissionReport run_mission(const MissionConfig& cfg);

/// Exit status mapping used by the CLI: DONE -> 0, ABORT -> 2, TIMEOUT -> 3.
int outcome_exit_code(const MissionReport& report);

} // namespace netpen::runner
