#pragma once

#include "netpen/detect/detection.hpp"

#include <cstdint>
#include <vector>

namespace netpen::detect {

/// Pre-defined box shapes for one feature-map scale.
struct AnchorScale {
    double stride = 8.0; // pixels per grid cell
    std::vector<std::pair<double, double>> anchors; // (width, height) pixels
};

struct AnchorSpec {
    std::vector<AnchorScale> scales;
};

/// Raw detection-head logits for one scale. Per cell and anchor the layout is
/// (tx, ty, tw, th, obj, class scores...) with kNumDefectClasses classes,
/// values indexed [anchor][gy][gx][channel].
struct RawHead {
    int grid_w = 0;
    int grid_h = 0;
    int num_anchors = 0;
    std::vector<float> values;

    static constexpr int kChannels = 5 + kNumDefectClasses;

    size_t expected_size() const {
        return static_cast<size_t>(grid_w) * grid_h * num_anchors * kChannels;
    }
    float at(int anchor, int gy, int gx, int ch) const {
        return values[((static_cast<size_t>(anchor) * grid_h + gy) * grid_w + gx) * kChannels +
                      ch];
    }
};

/// Grid-relative box decode with anchor refinement:
///   bx = (2*sigmoid(tx) - 0.5 + cx) * stride          (by likewise)
///   bw = (2*sigmoid(tw))^2 * anchor_w                 (bh likewise)
///   confidence = sigmoid(obj) * max(sigmoid(class))
/// Detections with confidence >= conf_threshold are returned as corner
/// boxes. Throws Error(ShapeMismatch) when the head and anchors disagree.
std::vector<Detection> decode_head(const RawHead& head, const AnchorScale& scale,
                                   double conf_threshold);

/// Decodes one head per scale; sizes must match.
std::vector<Detection> decode_heads(const std::vector<RawHead>& heads, const AnchorSpec& spec,
                                    double conf_threshold);

} // namespace netpen::detect
