#include "netpen/vision/rope.hpp"

#include "netpen/error.hpp"

#include <algorithm>
#include <cmath>

namespace netpen::vision {

namespace {

constexpr double kPi = 3.14159265358979323846;

struct Candidate {
    double u = 0.0;    // vote-weighted column at row cy
    double tilt = 0.0; // signed angle from vertical, vote-weighted
    int votes = 0;
};

// Signed tilt folds the theta wrap: lines just past pi are the same
// near-vertical family as lines just above 0.
double signed_tilt(double theta) { return theta <= kPi / 2 ? theta : theta - kPi; }

HoughLine cluster_line(const Candidate& c, double cy) {
    double theta = c.tilt < 0 ? c.tilt + kPi : c.tilt;
    double rho = c.u * std::cos(theta) + cy * std::sin(theta);
    return {rho, theta, c.votes};
}

} // namespace

std::optional<RopePairObservation> extract_rope_pair(const std::vector<HoughLine>& lines,
                                                     const sim::CameraIntrinsics& cam,
                                                     const RopeFilterConfig& cfg) {
    struct Vertical {
        double u;
        double tilt;
        int votes;
    };
    std::vector<Vertical> verticals;
    for (const HoughLine& line : lines) {
        double tilt = signed_tilt(line.theta);
        if (std::abs(tilt) > cfg.max_tilt) continue;
        double cos_t = std::cos(line.theta);
        double sin_t = std::sin(line.theta);
        double u = (line.rho - cam.cy * sin_t) / cos_t;
        verticals.push_back({u, tilt, line.votes});
    }
    if (verticals.size() < 2) return std::nullopt;

    std::sort(verticals.begin(), verticals.end(),
              [](const Vertical& a, const Vertical& b) { return a.u < b.u; });

    std::vector<Candidate> candidates;
    for (const Vertical& v : verticals) {
        if (!candidates.empty()) {
            Candidate& last = candidates.back();
            double last_u = last.u / last.votes;
            if (v.u - last_u <= cfg.merge_px) {
                last.u += v.u * v.votes;
                last.tilt += v.tilt * v.votes;
                last.votes += v.votes;
                continue;
            }
        }
        Candidate c;
        c.u = v.u * v.votes;
        c.tilt = v.tilt * v.votes;
        c.votes = v.votes;
        candidates.push_back(c);
    }
    for (Candidate& c : candidates) {
        c.u /= c.votes;
        c.tilt /= c.votes;
    }
    if (candidates.size() < 2) return std::nullopt;

    int best_i = -1, best_j = -1;
    int best_votes = -1;
    double best_center_err = 0.0;
    for (size_t i = 0; i + 1 < candidates.size(); ++i) {
        for (size_t j = i + 1; j < candidates.size(); ++j) {
            double spacing = candidates[j].u - candidates[i].u;
            if (spacing < cfg.min_px || spacing > cfg.max_px) continue;
            int votes = candidates[i].votes + candidates[j].votes;
            double center_err = std::abs((candidates[i].u + candidates[j].u) / 2 - cam.cx);
            bool better = votes > best_votes ||
                          (votes == best_votes && center_err < best_center_err);
            if (better) {
                best_votes = votes;
                best_center_err = center_err;
                best_i = static_cast<int>(i);
                best_j = static_cast<int>(j);
            }
        }
    }
    if (best_i < 0) return std::nullopt;

    const Candidate& left = candidates[best_i];
    const Candidate& right = candidates[best_j];
    RopePairObservation obs;
    obs.left_line = cluster_line(left, cam.cy);
    obs.right_line = cluster_line(right, cam.cy);
    obs.pixel_spacing = right.u - left.u;
    obs.midpoint_u = (left.u + right.u) / 2;
    return obs;
}

double estimate_distance(const RopePairObservation& obs, const sim::CameraIntrinsics& cam,
                         double rope_spacing) {
    if (rope_spacing <= 0)
        throw Error(ErrorCode::InvalidConfig, "rope_spacing must be positive");
    if (obs.pixel_spacing < 1.0)
        throw Error(ErrorCode::DegenerateObservation,
                    "pixel spacing below 1 px cannot be triangulated");
    return cam.focal_px * rope_spacing / obs.pixel_spacing;
}

} // namespace netpen::vision
