#pragma once

#include "netpen/control/command.hpp"
#include "netpen/control/mission.hpp"
#include "netpen/detect/detection.hpp"
#include "netpen/image.hpp"
#include "netpen/sim/render.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace netpen::runner {

struct FrameRecord {
    uint64_t frame_id = 0;
    double t = 0.0;
    double true_distance = 0.0;
    double true_yaw = 0.0;
    double depth = 0.0;
    double lateral = 0.0;
    std::optional<double> est_distance;
    std::optional<double> est_yaw;
    std::optional<double> pixel_spacing;
    std::optional<double> midpoint_u;
    control::Phase phase = control::Phase::Acquire;
    control::ControlCommand cmd;
    bool detect_ran = false;
    bool in_band = false;
    std::vector<detect::Detection> detections;
    std::vector<sim::TruthBox> gt;
};

struct MissionSummary {
    std::string outcome;            // DONE / ABORT / TIMEOUT
    size_t ticks = 0;
    std::optional<double> settling_time_s;
    std::optional<double> rmse_control;    // |true z - target| after settling
    std::optional<double> rmse_estimation; // |est - true| after settling
    double coverage = 0.0;
    double precision = 1.0;
    double recall = 1.0;
    size_t eval_frames = 0;
    double iou_threshold = 0.3;
    double target_distance = 2.0;
    double max_abs_error_after_settle = 0.0;
};

struct MissionReport {
    std::vector<FrameRecord> records;
    MissionSummary summary;
};

struct MatchStats {
    size_t matches = 0;
    size_t detections = 0;
    size_t truths = 0;

    // Empty-set conventions: no detections => precision 1, no truths =>
    // recall 1; both documented in the exported summary.
    double precision() const {
        return detections == 0 ? 1.0 : static_cast<double>(matches) / detections;
    }
    double recall() const { return truths == 0 ? 1.0 : static_cast<double>(matches) / truths; }
};

/// Greedy per-frame matching: detections by confidence descending, each may
/// claim the highest-IoU unmatched same-class truth with iou >= threshold.
MatchStats match_frame(const std::vector<detect::Detection>& dets,
                       const std::vector<sim::TruthBox>& truths, double iou_threshold);

/// Aggregates match_frame over aligned per-frame sequences and returns
/// (precision, recall).
std::pair<double, double> evaluate_detections(
    const std::vector<std::vector<detect::Detection>>& dets,
    const std::vector<std::vector<sim::TruthBox>>& truths, double iou_threshold);

/// Computes settling/RMSE/coverage/detection summary fields from records.
void summarize(MissionReport& report, double target_distance, double bottom_depth,
               double iou_threshold, double settle_tolerance = 0.1);

/// One frame record per line. Stable field order; re-serialization is
/// byte-identical.
std::string record_to_json(const FrameRecord& rec);
FrameRecord record_from_json(const std::string& line);

std::string summary_to_json(const MissionSummary& summary);

/// Writes mission.log, summary.json, distance_vs_time.csv, and (when a
/// renderer is supplied) annotated frames for up to 12 detection frames.
/// Exports are deterministic; re-export produces identical files.
void export_artifacts(const MissionReport& report, const std::string& dir,
                      const std::function<Image(const FrameRecord&)>& render = nullptr);

/// Reads a mission.log back into records (for the evaluate subcommand).
std::vector<FrameRecord> load_log(const std::string& path);

} // namespace netpen::runner
