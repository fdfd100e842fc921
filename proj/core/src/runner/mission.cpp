#include "netpen/runner/mission.hpp"

#include "netpen/detect/remote.hpp"
#include "netpen/error.hpp"
#include "netpen/sim/render.hpp"

#include <sys/wait.h>
#include <unistd.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <thread>

namespace netpen::runner {

namespace {

std::string self_exe() {
    char buf[4096];
    ssize_t n = ::readlink("/proc/self/exe", buf, sizeof(buf) - 1);
    if (n <= 0) throw Error(ErrorCode::IoFailure, "cannot resolve /proc/self/exe");
    buf[n] = '\0';
    return buf;
}

// Minimal config a spawned topside needs when the caller has no file path.
std::string write_topside_config(const MissionConfig& cfg) {
    namespace fs = std::filesystem;
    fs::path path = fs::temp_directory_path() /
                    ("netpen_topside_" + std::to_string(::getpid()) + "_" +
                     std::to_string(cfg.seed) + ".ini");
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::IoFailure, "cannot write " + path.string());
    out << "[scene]\nseed = " << cfg.seed << "\n\n[detect]\n"
        << "binarize_window = " << cfg.detect.binarize.window << "\n"
        << "binarize_offset = " << cfg.detect.binarize.offset << "\n"
        << "hole_density = " << cfg.detect.hole_density << "\n"
        << "hole_min_mean = " << cfg.detect.hole_min_mean << "\n"
        << "bright_mean = " << cfg.detect.bright_mean << "\n"
        << "occlusion_density = " << cfg.detect.occlusion_density << "\n"
        << "max_edge_energy = " << cfg.detect.max_edge_energy << "\n"
        << "veg_variance = " << cfg.detect.veg_variance << "\n"
        << "full_height_frac = " << cfg.detect.full_height_frac << "\n"
        << "min_correlation = " << cfg.period.min_correlation << "\n"
        << "min_lag = " << cfg.period.min_lag << "\n"
        << "max_lag = " << cfg.period.max_lag << "\n";
    return path.string();
}

struct SpawnedTopside {
    pid_t pid = -1;
    std::string temp_config;

    ~SpawnedTopside() {
        if (pid > 0) {
            int status = 0;
            ::waitpid(pid, &status, 0);
        }
        if (!temp_config.empty()) {
            std::error_code ec;
            std::filesystem::remove(temp_config, ec);
        }
    }
};

} // namespace

std::function<std::vector<detect::Detection>(const Image&)> make_classical_detector(
    const detect::ClassicalConfig& detect_cfg, const detect::PeriodConfig& period_cfg) {
    return [detect_cfg, period_cfg](const Image& img) -> std::vector<detect::Detection> {
        try {
            detect::BinaryMask mask = detect::binarize_net(img, detect_cfg.binarize);
            double period = detect::estimate_mesh_period(mask, period_cfg);
            if (period < 2.0) return {};
            return detect::detect_classical(img, period, detect_cfg);
        } catch (const Error& e) {
            if (e.code() == ErrorCode::NoPeriodicity) return {};
            throw;
        }
    };
}

link::SessionOutcome serve_topside(link::Transport& transport, const MissionConfig& cfg) {
    auto detector = make_classical_detector(cfg.detect, cfg.period);
    link::TopsideSessionHandlers handlers;
    handlers.on_frame = [&detector](const link::VideoFrame& f) {
        Image img(f.width, f.height);
        img.pixels = f.pixels;
        link::DetectionReport report;
        report.frame_id = f.frame_id;
        report.detections = detector(img);
        return std::vector<link::LinkMessage>{link::LinkMessage{std::move(report)}};
    };
    handlers.on_telemetry = [](const link::Telemetry&) {};
    return run_session(transport, handlers, cfg.session);
}

MissionReport run_mission(const MissionConfig& cfg) {
    sim::NetScene scene = sim::build_scene(cfg.scene);
    sim::validate(cfg.camera);

    sim::VehicleState state;
    state.x = cfg.start_x;
    state.z = cfg.start_z;
    state.depth = cfg.start_depth;
    state.yaw = cfg.start_yaw;

    control::MissionState mission = cfg.mission;
    control::PidBank pids = control::make_pid_bank(cfg.gains);

    // Topside detection service: in-process over a memory duplex, a spawned
    // process over a local socket, or an externally managed server.
    std::unique_ptr<link::DetectorClient> client;
    std::thread topside_thread;
    SpawnedTopside spawned;

    if (cfg.detector_mode == DetectorMode::External) {
        client = std::make_unique<link::DetectorClient>(
            link::tcp_connect(cfg.detector_host, cfg.detector_port,
                              cfg.session.request_timeout_ms),
            cfg.session);
    } else if (cfg.link_mode == LinkMode::Tcp) {
        uint16_t port = cfg.link_port != 0 ? cfg.link_port
                                           : link::pick_free_port(cfg.link_host);
        std::string config_path = cfg.config_path;
        if (config_path.empty()) {
            config_path = write_topside_config(cfg);
            spawned.temp_config = config_path;
        }
        std::string exe = cfg.topside_exe.empty() ? self_exe() : cfg.topside_exe;
        std::string endpoint = cfg.link_host + ":" + std::to_string(port);

        pid_t pid = ::fork();
        if (pid < 0) throw Error(ErrorCode::IoFailure, "fork failed");
        if (pid == 0) {
            ::execl(exe.c_str(), exe.c_str(), "topside-serve", "--listen", endpoint.c_str(),
                    "--config", config_path.c_str(), "--one-shot", (char*)nullptr);
            _exit(127);
        }
        spawned.pid = pid;
        client = std::make_unique<link::DetectorClient>(
            link::tcp_connect(cfg.link_host, port, 5000), cfg.session);
    } else {
        auto [vehicle_end, topside_end] = link::make_memory_pair();
        client = std::make_unique<link::DetectorClient>(std::move(vehicle_end), cfg.session);
        auto* raw = topside_end.release();
        topside_thread = std::thread([raw, cfg]() {
            std::unique_ptr<link::Transport> end(raw);
            serve_topside(*end, cfg);
        });
    }

    MissionReport report;
    const double dt = cfg.dt();
    const size_t max_ticks =
        static_cast<size_t>(std::llround(cfg.max_duration_s / dt));
    bool link_failed = false;

    for (size_t tick = 0; tick < max_ticks; ++tick) {
        const double t = static_cast<double>(tick) * dt;
        Image img = sim::render_frame(scene, state, cfg.camera, tick);
        sim::GroundTruth gt = sim::ground_truth(scene, state, cfg.camera);
        std::optional<vision::RopePairObservation> obs =
            vision::analyze_frame(img, cfg.camera, cfg.vision, tick);

        FrameRecord rec;
        rec.frame_id = tick;
        rec.t = t;
        rec.true_distance = gt.true_distance;
        rec.true_yaw = gt.true_yaw;
        rec.depth = state.depth;
        rec.lateral = state.x;
        rec.gt = gt.visible_defects;
        if (obs) {
            rec.est_distance = obs->distance_est;
            rec.est_yaw = obs->yaw_est;
            rec.pixel_spacing = obs->pixel_spacing;
            rec.midpoint_u = obs->midpoint_u;
        }
        rec.in_band = rec.est_distance &&
                      std::abs(*rec.est_distance - mission.target_distance) <= cfg.detect_band_m;

        rec.detect_ran = (tick % static_cast<size_t>(cfg.video_every_n) == 0);
        if (rec.detect_ran) {
            try {
                rec.detections =
                    client->request_detections(img, static_cast<uint32_t>(tick));
            } catch (const Error&) {
                link_failed = true;
            }
        }

        link::Telemetry telemetry;
        telemetry.depth = static_cast<float>(state.depth);
        telemetry.heading = static_cast<float>(state.yaw);
        if (rec.est_distance) telemetry.est_distance = static_cast<float>(*rec.est_distance);
        telemetry.phase = static_cast<uint8_t>(mission.phase);
        telemetry.frame_id = static_cast<uint32_t>(tick);
        if (!link_failed) {
            try {
                client->send_telemetry(telemetry);
            } catch (const Error&) {
                link_failed = true;
            }
        }

        mission = control::mission_step(mission, obs, telemetry);
        if (link_failed) mission.phase = control::Phase::Abort;

        control::ControlCommand cmd;
        std::tie(cmd, pids) = control::servo_command(obs, mission, cfg.gains, pids, dt,
                                                     cfg.camera);
        rec.phase = mission.phase;
        rec.cmd = cmd;
        report.records.push_back(std::move(rec));

        if (control::is_terminal(mission.phase)) break;
        state = sim::step_vehicle(state, cmd, cfg.vehicle, cfg.disturbance, dt, t);
    }

    switch (mission.phase) {
        case control::Phase::Done: report.summary.outcome = "DONE"; break;
        case control::Phase::Abort: report.summary.outcome = "ABORT"; break;
        default: report.summary.outcome = "TIMEOUT"; break;
    }
    summarize(report, mission.target_distance, mission.bottom_depth, cfg.eval_iou);

    client->close();
    if (topside_thread.joinable()) topside_thread.join();

    if (!cfg.out_dir.empty()) {
        auto renderer = [&scene, &cfg](const FrameRecord& rec) {
            sim::VehicleState s;
            s.x = rec.lateral;
            s.z = rec.true_distance;
            s.depth = rec.depth;
            s.yaw = rec.true_yaw;
            return sim::render_frame(scene, s, cfg.camera, rec.frame_id);
        };
        export_artifacts(report, cfg.out_dir, renderer);
    }
    return report;
}

int outcome_exit_code(const MissionReport& report) {
    if (report.summary.outcome == "DONE") return 0;
    if (report.summary.outcome == "ABORT") return 2;
    return 3;
}

} // namespace netpen::runner
