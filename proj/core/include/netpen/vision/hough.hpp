#pragma once

#include "netpen/vision/canny.hpp"

#include <vector>

namespace netpen::vision {

/// Line in normal form rho = x*cos(theta) + y*sin(theta), theta in [0, pi),
/// pixel coordinates with origin at the top-left corner.
struct HoughLine {
    double rho = 0.0;
    double theta = 0.0;
    int votes = 0;

    bool operator==(const HoughLine&) const = default;
};

/// Standard accumulator vote over (rho, theta). Returns accumulator local
/// maxima ((>=) against all 8 neighbors) with votes >= min_votes, sorted by
/// votes descending, ties by (theta, rho) ascending. Deterministic.
std::vector<HoughLine> hough_lines(const EdgeMap& edges, double rho_res, double theta_res,
                                   int min_votes);

/// The raw accumulator, exposed for diagnostics and equivalence tests.
/// Bin (ti, ri): theta = ti * theta_res, rho = (ri - rho_bins/2) * rho_res.
struct HoughAccumulator {
    int theta_bins = 0;
    int rho_bins = 0;
    double rho_res = 1.0;
    double theta_res = 0.0;
    std::vector<int> votes; // theta-major: votes[ti * rho_bins + ri]

    int at(int ti, int ri) const { return votes[static_cast<size_t>(ti) * rho_bins + ri]; }
};

HoughAccumulator hough_accumulate(const EdgeMap& edges, double rho_res, double theta_res);

} // namespace netpen::vision
