#include "netpen/vision/hough.hpp"

#include "netpen/error.hpp"

#include <algorithm>
#include <cmath>

namespace netpen::vision {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

HoughAccumulator hough_accumulate(const EdgeMap& edges, double rho_res, double theta_res) {
    if (rho_res <= 0 || theta_res <= 0)
        throw Error(ErrorCode::InvalidConfig, "hough resolutions must be positive");

    HoughAccumulator acc;
    acc.rho_res = rho_res;
    acc.theta_res = theta_res;
    acc.theta_bins = static_cast<int>(std::ceil(kPi / theta_res));
    const double diag = std::hypot(edges.width, edges.height);
    const int rho_half = static_cast<int>(std::ceil(diag / rho_res));
    acc.rho_bins = 2 * rho_half + 1;
    acc.votes.assign(static_cast<size_t>(acc.theta_bins) * acc.rho_bins, 0);

    std::vector<double> cos_t(acc.theta_bins), sin_t(acc.theta_bins);
    for (int ti = 0; ti < acc.theta_bins; ++ti) {
        cos_t[ti] = std::cos(ti * theta_res);
        sin_t[ti] = std::sin(ti * theta_res);
    }

    for (int y = 0; y < edges.height; ++y) {
        for (int x = 0; x < edges.width; ++x) {
            if (!edges.at(x, y)) continue;
            for (int ti = 0; ti < acc.theta_bins; ++ti) {
                double rho = x * cos_t[ti] + y * sin_t[ti];
                int ri = static_cast<int>(std::lround(rho / rho_res)) + rho_half;
                acc.votes[static_cast<size_t>(ti) * acc.rho_bins + ri]++;
            }
        }
    }
    return acc;
}

std::vector<HoughLine> hough_lines(const EdgeMap& edges, double rho_res, double theta_res,
                                   int min_votes) {
    if (min_votes < 1) throw Error(ErrorCode::InvalidConfig, "hough min_votes must be >= 1");

    HoughAccumulator acc = hough_accumulate(edges, rho_res, theta_res);
    const int rho_half = acc.rho_bins / 2;

    std::vector<HoughLine> lines;
    for (int ti = 0; ti < acc.theta_bins; ++ti) {
        for (int ri = 0; ri < acc.rho_bins; ++ri) {
            int v = acc.at(ti, ri);
            if (v < min_votes) continue;
            bool is_max = true;
            for (int dt = -1; dt <= 1 && is_max; ++dt) {
                for (int dr = -1; dr <= 1; ++dr) {
                    if (dt == 0 && dr == 0) continue;
                    int nt = ti + dt, nr = ri + dr;
                    if (nt < 0 || nr < 0 || nt >= acc.theta_bins || nr >= acc.rho_bins) continue;
                    if (acc.at(nt, nr) > v) {
                        is_max = false;
                        break;
                    }
                }
            }
            if (is_max)
                lines.push_back({(ri - rho_half) * rho_res, ti * theta_res, v});
        }
    }

    std::sort(lines.begin(), lines.end(), [](const HoughLine& a, const HoughLine& b) {
        if (a.votes != b.votes) return a.votes > b.votes;
        if (a.theta != b.theta) return a.theta < b.theta;
        return a.rho < b.rho;
    });
    return lines;
}

} // namespace netpen::vision
