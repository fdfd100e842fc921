#pragma once

#include "netpen/control/mission.hpp"
#include "netpen/control/servo.hpp"
#include "netpen/detect/classical.hpp"
#include "netpen/link/session.hpp"
#include "netpen/sim/camera.hpp"
#include "netpen/sim/scene.hpp"
#include "netpen/sim/vehicle.hpp"
#include "netpen/vision/pipeline.hpp"

#include <optional>
#include <string>

namespace netpen::runner {

enum class LinkMode { Memory, Tcp };
enum class DetectorMode { Classical, External };

struct MissionConfig {
    sim::SceneConfig scene;
    sim::CameraIntrinsics camera;
    vision::VisionConfig vision;
    control::GainConfig gains;
    sim::VehicleParams vehicle;
    sim::DisturbanceParams disturbance;
    control::MissionState mission; // initial state, phase ACQUIRE
    detect::ClassicalConfig detect;
    detect::PeriodConfig period;
    link::SessionConfig session;

    double control_rate_hz = 10.0;
    int video_every_n = 2;       // frames shipped for detection
    double max_duration_s = 150.0;
    double detect_band_m = 0.4;  // operating band for summary metrics
    double eval_iou = 0.3;

    double start_x = 0.05;
    double start_z = 3.0;
    double start_depth = 0.0;
    double start_yaw = 0.0;

    uint64_t seed = 0;
    std::string out_dir;

    LinkMode link_mode = LinkMode::Memory;
    std::string link_host = "127.0.0.1";
    uint16_t link_port = 0; // 0 picks an ephemeral port

    DetectorMode detector_mode = DetectorMode::Classical;
    std::string detector_host;
    uint16_t detector_port = 0;

    // Two-process mode plumbing: the config file handed to a spawned topside
    // and the executable to spawn (defaults to this process's binary).
    std::string config_path;
    std::string topside_exe;

    double dt() const { return 1.0 / control_rate_hz; }
};

/// Loads every section from the config file. The seed must come from the
/// file ([scene] seed) or the --seed override; everything else has defaults.
MissionConfig load_mission_config(const std::string& path,
                                  std::optional<uint64_t> seed_override = std::nullopt);

MissionConfig mission_config_from(const ConfigFile& file,
                                  std::optional<uint64_t> seed_override = std::nullopt);

/// Parses "tcp:host:port" / "mem" into the link fields; throws on junk.
void apply_link_flag(MissionConfig& cfg, const std::string& flag);

/// Parses "classical" / "external:host:port".
void apply_detector_flag(MissionConfig& cfg, const std::string& flag);

/// The default mission configuration as a config-file text, used by tests
/// and written out by the CLI for reference.
std::string default_config_text();

} // namespace netpen::runner
