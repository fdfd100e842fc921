#pragma once

#include "netpen/config.hpp"
#include "netpen/detect/detection.hpp"
#include "netpen/image.hpp"

#include <vector>

namespace netpen::detect {

struct BinaryMask {
    int width = 0;
    int height = 0;
    std::vector<uint8_t> mask; // 0/1, true = twine/rope structure

    BinaryMask() = default;
    BinaryMask(int w, int h) : width(w), height(h), mask(static_cast<size_t>(w) * h, 0) {}

    uint8_t& at(int x, int y) { return mask[static_cast<size_t>(y) * width + x]; }
    uint8_t at(int x, int y) const { return mask[static_cast<size_t>(y) * width + x]; }

    size_t count() const;
    double density() const;
};

struct BinarizeConfig {
    int window = 15;     // adaptive-mean neighborhood, odd
    double offset = 6.0; // gray levels below (or above) the local mean
    bool dark_structure = true; // net structure darker than open water
};

/// Adaptive mean threshold: marks pixels at least `offset` below the local
/// mean (above, when dark_structure is false).
BinaryMask binarize_net(const Image& img, const BinarizeConfig& cfg);

struct PeriodConfig {
    double min_correlation = 0.3; // of the zero-lag autocorrelation
    int min_lag = 3;
    int max_lag = 64;
};

/// Mesh period from the autocorrelation of row/column occupancy profiles:
/// the first off-zero peak lag, averaged over the axes that show one.
/// Throws Error(NoPeriodicity) when no peak clears min_correlation.
double estimate_mesh_period(const BinaryMask& mask, const PeriodConfig& cfg);

struct ClassicalConfig {
    BinarizeConfig binarize;
    double hole_density = 0.12;     // windows below this twine density
    double hole_min_mean = 138.0;   // open water shows through a real hole
    double bright_mean = 185.0;     // plastic threshold
    double occlusion_density = 0.52;
    double max_edge_energy = 60.0;  // rejects crisp mesh texture
    double veg_variance = 620.0;    // vegetation/biofouling split
    double full_height_frac = 0.85; // occlusion runs this tall are the ropes
};

/// Window-statistics detector for the four defect classes. Tiles the image
/// in 2*period windows, classifies each by twine density, mean intensity,
/// edge energy and variance, then merges 8-connected windows of one class
/// into detections. Occlusion components spanning nearly the full image
/// height are discarded as rope bands. Pre: period >= 2.
std::vector<Detection> detect_classical(const Image& img, double period,
                                        const ClassicalConfig& cfg);

ClassicalConfig classical_config_from_file(const ConfigFile& cfg);
PeriodConfig period_config_from_file(const ConfigFile& cfg);

} // namespace netpen::detect
