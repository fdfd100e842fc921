// netpen: net-pen inspection simulator and autonomy stack.
//
//   netpen run            closed-loop inspection mission
//   netpen evaluate       recompute metrics from a mission log
//   netpen render-fixtures  golden frame/edge-map corpus
//   netpen topside-serve  detection service speaking the link protocol

#include "netpen/error.hpp"
#include "netpen/runner/mission.hpp"
#include "netpen/runner/mission_config.hpp"
#include "netpen/runner/report.hpp"
#include "netpen/sim/render.hpp"
#include "netpen/vision/debug.hpp"
#include "netpen/vision/pipeline.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

namespace {

using namespace netpen;

int cmd_run(const std::string& config_path, std::optional<uint64_t> seed,
            const std::string& link_flag, const std::string& detector_flag,
            const std::string& out_dir) {
    runner::MissionConfig cfg = runner::load_mission_config(config_path, seed);
    cfg.config_path = config_path;
    runner::apply_link_flag(cfg, link_flag);
    runner::apply_detector_flag(cfg, detector_flag);
    cfg.out_dir = out_dir;

    runner::MissionReport report = runner::run_mission(cfg);
    std::cout << "outcome: " << report.summary.outcome
              << "  ticks: " << report.summary.ticks
              << "  coverage: " << report.summary.coverage;
    if (report.summary.settling_time_s)
        std::cout << "  settled at " << *report.summary.settling_time_s << " s";
    std::cout << "\n";
    if (!out_dir.empty()) std::cout << "artifacts written to " << out_dir << "\n";
    return runner::outcome_exit_code(report);
}

int cmd_evaluate(const std::string& log_path, double iou_threshold) {
    std::vector<runner::FrameRecord> records = runner::load_log(log_path);
    runner::MissionReport report;
    report.records = records;

    double target = 2.0;
    // recover the target from the log if any record carried an estimate
    runner::MatchStats total;
    for (const auto& rec : records) {
        if (!rec.detect_ran || !rec.in_band) continue;
        runner::MatchStats m = runner::match_frame(rec.detections, rec.gt, iou_threshold);
        total.matches += m.matches;
        total.detections += m.detections;
        total.truths += m.truths;
    }

    std::cout << "frames: " << records.size() << "\n";
    std::cout << "precision: " << total.precision() << " (" << total.matches << "/"
              << total.detections << ")\n";
    std::cout << "recall: " << total.recall() << " (" << total.matches << "/" << total.truths
              << ")\n";

    double sum_sq = 0.0;
    size_t n = 0;
    for (const auto& rec : records) {
        if (!rec.est_distance) continue;
        double e = *rec.est_distance - rec.true_distance;
        sum_sq += e * e;
        ++n;
    }
    if (n > 0) std::cout << "estimation rmse: " << std::sqrt(sum_sq / n) << " m over " << n
                         << " frames\n";
    (void)target;
    return 0;
}

int cmd_render_fixtures(const std::string& out_dir) {
    namespace fs = std::filesystem;
    fs::create_directories(out_dir);

    runner::MissionConfig cfg =
        runner::mission_config_from(ConfigFile::parse(runner::default_config_text()));
    sim::NetScene scene = sim::build_scene(cfg.scene);

    std::ofstream manifest(out_dir + "/manifest.txt");
    auto note = [&manifest](const std::string& name, const std::string& what) {
        manifest << name << "  " << what << "\n";
    };

    for (double z : {1.0, 1.5, 2.0, 3.0, 4.0}) {
        for (double yaw : {-0.2, 0.0, 0.2}) {
            sim::VehicleState st;
            st.z = z;
            st.depth = 5.0;
            st.yaw = yaw;
            Image img = sim::render_frame(scene, st, cfg.camera, 0);
            char name[64];
            std::snprintf(name, sizeof(name), "frame_z%.1f_yaw%+.1f.pgm", z, yaw);
            write_pgm(img, out_dir + "/" + name);
            note(name, "clean net");

            if (yaw == 0.0) {
                vision::EdgeMap edges =
                    vision::canny(img, cfg.vision.rope_sigma, cfg.vision.rope_low,
                                  cfg.vision.rope_high);
                std::snprintf(name, sizeof(name), "edges_z%.1f.pgm", z);
                write_pgm(vision::edge_map_image(edges), out_dir + "/" + name);
                note(name, "rope-stage edge map");

                vision::HoughAccumulator acc = vision::hough_accumulate(
                    edges, cfg.vision.rope_rho_res, cfg.vision.rope_theta_res);
                std::snprintf(name, sizeof(name), "hough_z%.1f.pgm", z);
                write_pgm(vision::accumulator_heatmap(acc), out_dir + "/" + name);
                note(name, "accumulator heatmap");
            }
        }
    }

    // a defect sampler frame with ground-truth annotation
    sim::SceneConfig defect_scene_cfg = cfg.scene;
    defect_scene_cfg.defects = {
        {DefectClass::NetHole, -0.8, 5.0, 0.3, 0.3},
        {DefectClass::Plastic, 0.9, 5.2, 0.3, 0.25},
        {DefectClass::Vegetation, -0.9, 4.6, 0.35, 0.3},
        {DefectClass::Biofouling, 0.8, 4.6, 0.35, 0.3},
    };
    sim::NetScene defect_scene = sim::build_scene(defect_scene_cfg);
    sim::VehicleState st;
    st.z = 2.0;
    st.depth = 4.9;
    Image img = sim::render_frame(defect_scene, st, cfg.camera, 1);
    write_pgm(img, out_dir + "/defects.pgm");
    note("defects.pgm", "all four defect classes at z=2");

    RgbImage annotated(img);
    for (const sim::TruthBox& b :
         sim::ground_truth(defect_scene, st, cfg.camera).visible_defects)
        draw_rect(annotated, static_cast<int>(b.x_min), static_cast<int>(b.y_min),
                  static_cast<int>(b.x_max) - 1, static_cast<int>(b.y_max) - 1, 60, 220, 60);
    write_ppm(annotated, out_dir + "/defects_annotated.ppm");
    note("defects_annotated.ppm", "ground-truth boxes burned in");

    std::cout << "fixtures written to " << out_dir << "\n";
    return 0;
}

int cmd_topside_serve(const std::string& listen, const std::string& config_path, bool one_shot) {
    runner::MissionConfig cfg = runner::load_mission_config(config_path);
    size_t colon = listen.rfind(':');
    if (colon == std::string::npos)
        throw Error(ErrorCode::InvalidConfig, "--listen wants host:port, got " + listen);
    std::string host = listen.substr(0, colon);
    uint16_t port = static_cast<uint16_t>(std::stoi(listen.substr(colon + 1)));

    link::TcpListener listener(host, port);
    std::cerr << "topside listening on " << host << ":" << listener.port() << "\n";
    do {
        std::unique_ptr<link::Transport> transport = listener.accept(30000);
        link::SessionOutcome outcome = runner::serve_topside(*transport, cfg);
        std::cerr << "session ended (" << to_string(outcome.reason) << "): "
                  << outcome.frames_received << " frames, " << outcome.telemetry_received
                  << " telemetry, " << outcome.decode_errors << " decode errors\n";
    } while (!one_shot);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"aquaculture net-pen inspection: simulator, visual servoing, defect detection"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir;
    std::string link_flag = "mem";
    std::string detector_flag = "classical";
    std::optional<uint64_t> seed;

    CLI::App* run = app.add_subcommand("run", "run a closed-loop inspection mission");
    run->add_option("--config", config_path, "mission config file")->required();
    run->add_option("--seed", seed, "override [scene] seed");
    run->add_option("--link", link_flag, "mem | tcp:host:port (two-process topside)");
    run->add_option("--detector", detector_flag, "classical | external:host:port");
    run->add_option("--out", out_dir, "artifact output directory");

    std::string log_path;
    double eval_iou = 0.3;
    CLI::App* evaluate = app.add_subcommand("evaluate", "recompute metrics from a mission log");
    evaluate->add_option("--log", log_path, "mission.log to evaluate")->required();
    evaluate->add_option("--iou", eval_iou, "IoU threshold");

    std::string fixtures_dir = "fixtures";
    CLI::App* fixtures = app.add_subcommand("render-fixtures", "write the golden frame corpus");
    fixtures->add_option("--out", fixtures_dir, "output directory");

    std::string listen = "127.0.0.1:0";
    bool one_shot = false;
    CLI::App* serve = app.add_subcommand("topside-serve", "run the detection service");
    serve->add_option("--listen", listen, "host:port to listen on")->required();
    serve->add_option("--config", config_path, "config file for detector settings")->required();
    serve->add_flag("--one-shot", one_shot, "exit after one session");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed())
            return cmd_run(config_path, seed, link_flag, detector_flag, out_dir);
        if (evaluate->parsed()) return cmd_evaluate(log_path, eval_iou);
        if (fixtures->parsed()) return cmd_render_fixtures(fixtures_dir);
        if (serve->parsed()) return cmd_topside_serve(listen, config_path, one_shot);
    } catch (const netpen::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
