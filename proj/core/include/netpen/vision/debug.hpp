#pragma once

#include "netpen/image.hpp"
#include "netpen/vision/canny.hpp"
#include "netpen/vision/hough.hpp"

namespace netpen::vision {

// Diagnostic rasters; written out as portable graymaps by the CLI.

Image edge_map_image(const EdgeMap& edges);

/// Accumulator as a gray raster, votes scaled so the peak maps to 255.
/// Rows are theta bins, columns rho bins.
Image accumulator_heatmap(const HoughAccumulator& acc);

} // namespace netpen::vision
