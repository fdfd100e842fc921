#include "netpen/runner/report.hpp"

#include "netpen/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>

namespace netpen::runner {

namespace {

using ordered_json = nlohmann::ordered_json;

control::Phase phase_from_string(const std::string& s) {
    if (s == "ACQUIRE") return control::Phase::Acquire;
    if (s == "TRACK") return control::Phase::Track;
    if (s == "LOST") return control::Phase::Lost;
    if (s == "DONE") return control::Phase::Done;
    if (s == "ABORT") return control::Phase::Abort;
    throw Error(ErrorCode::IoFailure, "unknown phase in log: " + s);
}

ordered_json box_json(const detect::BBox& b) {
    return ordered_json::array({b.x_min, b.y_min, b.x_max, b.y_max});
}

detect::BBox box_from_json(const ordered_json& j) {
    return {j.at(0).get<double>(), j.at(1).get<double>(), j.at(2).get<double>(),
            j.at(3).get<double>()};
}

} // namespace

MatchStats match_frame(const std::vector<detect::Detection>& dets,
                       const std::vector<sim::TruthBox>& truths, double iou_threshold) {
    MatchStats stats;
    stats.detections = dets.size();
    stats.truths = truths.size();

    std::vector<size_t> order(dets.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        if (dets[a].confidence != dets[b].confidence)
            return dets[a].confidence > dets[b].confidence;
        return dets[a].bbox < dets[b].bbox;
    });

    std::vector<bool> claimed(truths.size(), false);
    for (size_t di : order) {
        double best_iou = iou_threshold;
        int best_t = -1;
        for (size_t ti = 0; ti < truths.size(); ++ti) {
            if (claimed[ti] || truths[ti].cls != dets[di].cls) continue;
            detect::BBox tb{truths[ti].x_min, truths[ti].y_min, truths[ti].x_max,
                            truths[ti].y_max};
            double v = detect::iou(dets[di].bbox, tb);
            if (v >= best_iou && (best_t < 0 || v > best_iou)) {
                best_iou = v;
                best_t = static_cast<int>(ti);
            }
        }
        if (best_t >= 0) {
            claimed[best_t] = true;
            stats.matches++;
        }
    }
    return stats;
}

std::pair<double, double> evaluate_detections(
    const std::vector<std::vector<detect::Detection>>& dets,
    const std::vector<std::vector<sim::TruthBox>>& truths, double iou_threshold) {
    if (dets.size() != truths.size())
        throw Error(ErrorCode::InvalidConfig, "detection and truth sequences must be aligned");
    MatchStats total;
    for (size_t i = 0; i < dets.size(); ++i) {
        MatchStats s = match_frame(dets[i], truths[i], iou_threshold);
        total.matches += s.matches;
        total.detections += s.detections;
        total.truths += s.truths;
    }
    return {total.precision(), total.recall()};
}

void summarize(MissionReport& report, double target_distance, double bottom_depth,
               double iou_threshold, double settle_tolerance) {
    MissionSummary& s = report.summary;
    s.ticks = report.records.size();
    s.iou_threshold = iou_threshold;
    s.target_distance = target_distance;

    const auto& recs = report.records;
    if (recs.empty()) return;

    // settling: earliest tick after which |z - target| stays within tolerance
    int last_violation = -1;
    for (size_t i = 0; i < recs.size(); ++i)
        if (std::abs(recs[i].true_distance - target_distance) > settle_tolerance)
            last_violation = static_cast<int>(i);
    size_t settle_idx = static_cast<size_t>(last_violation + 1);
    if (settle_idx < recs.size()) {
        s.settling_time_s = recs[settle_idx].t;
        double sum_sq = 0.0, est_sq = 0.0, max_err = 0.0;
        size_t n = 0, est_n = 0;
        for (size_t i = settle_idx; i < recs.size(); ++i) {
            double err = recs[i].true_distance - target_distance;
            sum_sq += err * err;
            max_err = std::max(max_err, std::abs(err));
            ++n;
            if (recs[i].est_distance) {
                double e = *recs[i].est_distance - recs[i].true_distance;
                est_sq += e * e;
                ++est_n;
            }
        }
        s.rmse_control = std::sqrt(sum_sq / n);
        s.max_abs_error_after_settle = max_err;
        if (est_n > 0) s.rmse_estimation = std::sqrt(est_sq / est_n);
    }

    double max_depth = 0.0;
    for (const FrameRecord& r : recs) max_depth = std::max(max_depth, r.depth);
    s.coverage = bottom_depth > 0 ? std::clamp(max_depth / bottom_depth, 0.0, 1.0) : 0.0;

    MatchStats total;
    for (const FrameRecord& r : recs) {
        if (!r.detect_ran || !r.in_band) continue;
        MatchStats m = match_frame(r.detections, r.gt, iou_threshold);
        total.matches += m.matches;
        total.detections += m.detections;
        total.truths += m.truths;
        s.eval_frames++;
    }
    s.precision = total.precision();
    s.recall = total.recall();
}

std::string record_to_json(const FrameRecord& rec) {
    ordered_json j;
    j["frame"] = rec.frame_id;
    j["t"] = rec.t;
    j["true_distance"] = rec.true_distance;
    j["true_yaw"] = rec.true_yaw;
    j["depth"] = rec.depth;
    j["x"] = rec.lateral;
    j["est_distance"] = rec.est_distance ? ordered_json(*rec.est_distance) : ordered_json(nullptr);
    j["est_yaw"] = rec.est_yaw ? ordered_json(*rec.est_yaw) : ordered_json(nullptr);
    j["pixel_spacing"] =
        rec.pixel_spacing ? ordered_json(*rec.pixel_spacing) : ordered_json(nullptr);
    j["midpoint_u"] = rec.midpoint_u ? ordered_json(*rec.midpoint_u) : ordered_json(nullptr);
    j["phase"] = control::to_string(rec.phase);
    j["cmd"] = ordered_json{{"surge", rec.cmd.surge},
                            {"sway", rec.cmd.sway},
                            {"heave", rec.cmd.heave},
                            {"yaw_rate", rec.cmd.yaw_rate}};
    j["detect_ran"] = rec.detect_ran;
    j["in_band"] = rec.in_band;
    ordered_json dets = ordered_json::array();
    for (const detect::Detection& d : rec.detections)
        dets.push_back(ordered_json{{"class", to_string(d.cls)},
                                    {"bbox", box_json(d.bbox)},
                                    {"confidence", d.confidence}});
    j["detections"] = dets;
    ordered_json gts = ordered_json::array();
    for (const sim::TruthBox& g : rec.gt)
        gts.push_back(ordered_json{
            {"class", to_string(g.cls)},
            {"bbox", ordered_json::array({g.x_min, g.y_min, g.x_max, g.y_max})}});
    j["gt"] = gts;
    return j.dump();
}

FrameRecord record_from_json(const std::string& line) {
    ordered_json j = ordered_json::parse(line);
    FrameRecord rec;
    rec.frame_id = j.at("frame").get<uint64_t>();
    rec.t = j.at("t").get<double>();
    rec.true_distance = j.at("true_distance").get<double>();
    rec.true_yaw = j.at("true_yaw").get<double>();
    rec.depth = j.at("depth").get<double>();
    rec.lateral = j.at("x").get<double>();
    if (!j.at("est_distance").is_null()) rec.est_distance = j.at("est_distance").get<double>();
    if (!j.at("est_yaw").is_null()) rec.est_yaw = j.at("est_yaw").get<double>();
    if (!j.at("pixel_spacing").is_null())
        rec.pixel_spacing = j.at("pixel_spacing").get<double>();
    if (!j.at("midpoint_u").is_null()) rec.midpoint_u = j.at("midpoint_u").get<double>();
    rec.phase = phase_from_string(j.at("phase").get<std::string>());
    rec.cmd.surge = j.at("cmd").at("surge").get<double>();
    rec.cmd.sway = j.at("cmd").at("sway").get<double>();
    rec.cmd.heave = j.at("cmd").at("heave").get<double>();
    rec.cmd.yaw_rate = j.at("cmd").at("yaw_rate").get<double>();
    rec.detect_ran = j.at("detect_ran").get<bool>();
    rec.in_band = j.at("in_band").get<bool>();
    for (const auto& d : j.at("detections")) {
        detect::Detection det;
        auto cls = defect_class_from_string(d.at("class").get<std::string>());
        if (!cls) throw Error(ErrorCode::IoFailure, "unknown class in log");
        det.cls = *cls;
        det.bbox = box_from_json(d.at("bbox"));
        det.confidence = d.at("confidence").get<double>();
        rec.detections.push_back(det);
    }
    for (const auto& g : j.at("gt")) {
        auto cls = defect_class_from_string(g.at("class").get<std::string>());
        if (!cls) throw Error(ErrorCode::IoFailure, "unknown class in log");
        detect::BBox b = box_from_json(g.at("bbox"));
        rec.gt.push_back({*cls, b.x_min, b.y_min, b.x_max, b.y_max});
    }
    return rec;
}

std::string summary_to_json(const MissionSummary& s) {
    ordered_json j;
    j["outcome"] = s.outcome;
    j["ticks"] = s.ticks;
    j["settling_time_s"] =
        s.settling_time_s ? ordered_json(*s.settling_time_s) : ordered_json(nullptr);
    j["rmse_control"] = s.rmse_control ? ordered_json(*s.rmse_control) : ordered_json(nullptr);
    j["rmse_estimation"] =
        s.rmse_estimation ? ordered_json(*s.rmse_estimation) : ordered_json(nullptr);
    j["max_abs_error_after_settle"] = s.max_abs_error_after_settle;
    j["coverage"] = s.coverage;
    j["precision"] = s.precision;
    j["recall"] = s.recall;
    j["eval_frames"] = s.eval_frames;
    j["iou_threshold"] = s.iou_threshold;
    j["target_distance"] = s.target_distance;
    j["conventions"] = "precision is 1.0 when no detections were made; recall is 1.0 when no "
                       "truth boxes exist; detection metrics cover frames inside the operating "
                       "band only";
    return j.dump(2) + "\n";
}

void export_artifacts(const MissionReport& report, const std::string& dir,
                      const std::function<Image(const FrameRecord&)>& render) {
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw Error(ErrorCode::IoFailure, "cannot create output dir " + dir);

    {
        std::ofstream log(dir + "/mission.log", std::ios::binary);
        if (!log) throw Error(ErrorCode::IoFailure, "cannot write " + dir + "/mission.log");
        for (const FrameRecord& rec : report.records) log << record_to_json(rec) << "\n";
    }
    {
        std::ofstream summary(dir + "/summary.json", std::ios::binary);
        if (!summary) throw Error(ErrorCode::IoFailure, "cannot write " + dir + "/summary.json");
        summary << summary_to_json(report.summary);
    }
    {
        std::ofstream csv(dir + "/distance_vs_time.csv", std::ios::binary);
        if (!csv)
            throw Error(ErrorCode::IoFailure, "cannot write " + dir + "/distance_vs_time.csv");
        csv << "t,true_distance,est_distance,target\n";
        char buf[160];
        for (const FrameRecord& rec : report.records) {
            if (rec.est_distance) {
                std::snprintf(buf, sizeof(buf), "%.6f,%.6f,%.6f,%.6f\n", rec.t,
                              rec.true_distance, *rec.est_distance,
                              report.summary.target_distance);
            } else {
                std::snprintf(buf, sizeof(buf), "%.6f,%.6f,,%.6f\n", rec.t, rec.true_distance,
                              report.summary.target_distance);
            }
            csv << buf;
        }
    }

    if (render) {
        int exported = 0;
        for (const FrameRecord& rec : report.records) {
            if (rec.detections.empty()) continue;
            if (exported >= 12) break;
            Image gray = render(rec);
            RgbImage rgb(gray);
            for (const sim::TruthBox& g : rec.gt)
                draw_rect(rgb, static_cast<int>(g.x_min), static_cast<int>(g.y_min),
                          static_cast<int>(g.x_max) - 1, static_cast<int>(g.y_max) - 1, 60, 220,
                          60);
            for (const detect::Detection& d : rec.detections)
                draw_rect(rgb, static_cast<int>(d.bbox.x_min), static_cast<int>(d.bbox.y_min),
                          static_cast<int>(d.bbox.x_max) - 1,
                          static_cast<int>(d.bbox.y_max) - 1, 230, 70, 70);
            char name[64];
            std::snprintf(name, sizeof(name), "/frame_%06llu.ppm",
                          static_cast<unsigned long long>(rec.frame_id));
            write_ppm(rgb, dir + name);
            ++exported;
        }
    }
}

std::vector<FrameRecord> load_log(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::IoFailure, "cannot open log " + path);
    std::vector<FrameRecord> records;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        records.push_back(record_from_json(line));
    }
    return records;
}

} // namespace netpen::runner
