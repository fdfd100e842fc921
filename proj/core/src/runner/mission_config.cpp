#include "netpen/runner/mission_config.hpp"

#include "netpen/error.hpp"

namespace netpen::runner {

MissionConfig mission_config_from(const ConfigFile& file,
                                  std::optional<uint64_t> seed_override) {
    MissionConfig cfg;
    cfg.scene = sim::scene_config_from_file(file);
    cfg.camera = sim::camera_from_file(file);
    cfg.vision = vision::vision_config_from_file(file);
    cfg.gains = control::gains_from_file(file);
    cfg.vehicle = sim::vehicle_params_from_file(file);
    cfg.mission = control::mission_from_file(file);
    cfg.detect = detect::classical_config_from_file(file);
    cfg.period = detect::period_config_from_file(file);
    cfg.session = link::session_config_from_file(file);

    cfg.disturbance.amplitude_mps =
        file.get_double("disturbance", "amplitude_mps", cfg.disturbance.amplitude_mps);
    cfg.disturbance.period_s = file.get_double("disturbance", "period_s",
                                               cfg.disturbance.period_s);
    cfg.disturbance.phase_rad = file.get_double("disturbance", "phase_rad",
                                                cfg.disturbance.phase_rad);

    cfg.control_rate_hz = file.get_double("mission", "control_rate_hz", cfg.control_rate_hz);
    cfg.video_every_n =
        static_cast<int>(file.get_int("mission", "video_every_n", cfg.video_every_n));
    cfg.max_duration_s = file.get_double("mission", "max_duration_s", cfg.max_duration_s);
    cfg.detect_band_m = file.get_double("mission", "detect_band_m", cfg.detect_band_m);
    cfg.eval_iou = file.get_double("mission", "eval_iou", cfg.eval_iou);
    cfg.start_x = file.get_double("mission", "start_x", cfg.start_x);
    cfg.start_z = file.get_double("mission", "start_z", cfg.start_z);
    cfg.start_depth = file.get_double("mission", "start_depth", cfg.start_depth);
    cfg.start_yaw = file.get_double("mission", "start_yaw", cfg.start_yaw);

    if (cfg.control_rate_hz <= 0)
        throw Error(ErrorCode::InvalidConfig, "mission.control_rate_hz must be positive");
    if (cfg.video_every_n < 1)
        throw Error(ErrorCode::InvalidConfig, "mission.video_every_n must be >= 1");

    if (seed_override) {
        cfg.seed = *seed_override;
    } else if (file.has("scene", "seed")) {
        cfg.seed = static_cast<uint64_t>(file.require_int("scene", "seed"));
    } else {
        throw Error(ErrorCode::InvalidConfig, "a seed is required ([scene] seed or --seed)");
    }
    cfg.scene.seed = cfg.seed;

    // rope spacing truth feeds the triangulation unless overridden
    if (!file.has("vision", "rope_spacing_m")) cfg.vision.rope_spacing_m = cfg.scene.rope_spacing;
    return cfg;
}

MissionConfig load_mission_config(const std::string& path,
                                  std::optional<uint64_t> seed_override) {
    return mission_config_from(ConfigFile::load(path), seed_override);
}

void apply_link_flag(MissionConfig& cfg, const std::string& flag) {
    if (flag == "mem") {
        cfg.link_mode = LinkMode::Memory;
        return;
    }
    if (flag.rfind("tcp:", 0) == 0) {
        std::string rest = flag.substr(4);
        size_t colon = rest.rfind(':');
        if (colon == std::string::npos)
            throw Error(ErrorCode::InvalidConfig, "--link tcp wants tcp:host:port, got " + flag);
        cfg.link_mode = LinkMode::Tcp;
        cfg.link_host = rest.substr(0, colon);
        cfg.link_port = static_cast<uint16_t>(std::stoi(rest.substr(colon + 1)));
        return;
    }
    throw Error(ErrorCode::InvalidConfig, "--link must be mem or tcp:host:port, got " + flag);
}

void apply_detector_flag(MissionConfig& cfg, const std::string& flag) {
    if (flag == "classical") {
        cfg.detector_mode = DetectorMode::Classical;
        return;
    }
    if (flag.rfind("external:", 0) == 0) {
        std::string rest = flag.substr(9);
        size_t colon = rest.rfind(':');
        if (colon == std::string::npos)
            throw Error(ErrorCode::InvalidConfig,
                        "--detector external wants external:host:port, got " + flag);
        cfg.detector_mode = DetectorMode::External;
        cfg.detector_host = rest.substr(0, colon);
        cfg.detector_port = static_cast<uint16_t>(std::stoi(rest.substr(colon + 1)));
        return;
    }
    throw Error(ErrorCode::InvalidConfig,
                "--detector must be classical or external:host:port, got " + flag);
}

std::string default_config_text() {
    return R"([scene]
net_width = 6.0
net_depth = 10.0
mesh_pitch = 0.03
twine_width = 0.006
rope_spacing = 0.5
rope_width = 0.05
attenuation_per_m = 0.12
noise_sigma = 3.0
seed = 7

[camera]
focal_px = 400
width = 320
height = 240
cx = 160
cy = 120

[vehicle]
v_max_surge = 0.5
v_max_sway = 0.3
v_max_heave = 0.25
v_max_yaw = 0.6
tau_surge = 0.3
tau_sway = 0.3
tau_heave = 0.3
tau_yaw = 0.3

[gains]
surge_kp = 1.8
surge_ki = 0.15
surge_kd = 0.5
surge_integral_limit = 0.5
sway_kp = 2.5
sway_ki = 0.1
sway_kd = 0.6
sway_integral_limit = 0.3
yaw_kp = 1.5
yaw_ki = 0.05
yaw_kd = 0.3
yaw_integral_limit = 0.3

[mission]
target_distance = 2.0
descent_rate = 0.1
bottom_depth = 9.5
acquire_frames = 5
lost_frames = 10
abort_frames = 50
control_rate_hz = 10
video_every_n = 2
max_duration_s = 150
detect_band_m = 0.4
eval_iou = 0.3
start_x = 0.05
start_z = 3.0
start_depth = 0.0
start_yaw = 0.0

[disturbance]
amplitude_mps = 0.0
period_s = 8.0
phase_rad = 0.0

[link]
heartbeat_interval_ms = 500
heartbeat_timeout_ms = 3000
request_timeout_ms = 3000
)";
}

} // namespace netpen::runner
