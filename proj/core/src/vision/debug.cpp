#include "netpen/vision/debug.hpp"

#include <algorithm>

namespace netpen::vision {

Image edge_map_image(const EdgeMap& edges) {
    Image img(edges.width, edges.height);
    for (size_t i = 0; i < edges.edges.size(); ++i) img.pixels[i] = edges.edges[i] ? 255 : 0;
    return img;
}

Image accumulator_heatmap(const HoughAccumulator& acc) {
    Image img(acc.rho_bins, acc.theta_bins);
    int peak = 0;
    for (int v : acc.votes) peak = std::max(peak, v);
    if (peak == 0) return img;
    for (size_t i = 0; i < acc.votes.size(); ++i)
        img.pixels[i] = static_cast<uint8_t>((255LL * acc.votes[i]) / peak);
    return img;
}

} // namespace netpen::vision
