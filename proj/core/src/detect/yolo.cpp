#include "netpen/detect/yolo.hpp"

#include "netpen/error.hpp"

#include <cmath>

namespace netpen::detect {

namespace {

float sigmoid(float x) { return 1.f / (1.f + std::exp(-x)); }

} // namespace

std::vector<Detection> decode_head(const RawHead& head, const AnchorScale& scale,
                                   double conf_threshold) {
    if (head.grid_w <= 0 || head.grid_h <= 0 || head.num_anchors <= 0)
        throw Error(ErrorCode::ShapeMismatch, "head grid and anchor counts must be positive");
    if (static_cast<int>(scale.anchors.size()) != head.num_anchors)
        throw Error(ErrorCode::ShapeMismatch, "anchor count does not match the head");
    if (head.values.size() != head.expected_size())
        throw Error(ErrorCode::ShapeMismatch, "head value buffer does not match its grid");

    std::vector<Detection> out;
    for (int a = 0; a < head.num_anchors; ++a) {
        const double anchor_w = scale.anchors[a].first;
        const double anchor_h = scale.anchors[a].second;
        for (int gy = 0; gy < head.grid_h; ++gy) {
            for (int gx = 0; gx < head.grid_w; ++gx) {
                float obj = sigmoid(head.at(a, gy, gx, 4));
                int best_cls = 0;
                float best_score = sigmoid(head.at(a, gy, gx, 5));
                for (int c = 1; c < kNumDefectClasses; ++c) {
                    float s = sigmoid(head.at(a, gy, gx, 5 + c));
                    if (s > best_score) { // ties keep the lowest class index
                        best_score = s;
                        best_cls = c;
                    }
                }
                double conf = static_cast<double>(obj) * best_score;
                if (conf < conf_threshold) continue;

                double bx = (2.0 * sigmoid(head.at(a, gy, gx, 0)) - 0.5 + gx) * scale.stride;
                double by = (2.0 * sigmoid(head.at(a, gy, gx, 1)) - 0.5 + gy) * scale.stride;
                double sw = 2.0 * sigmoid(head.at(a, gy, gx, 2));
                double sh = 2.0 * sigmoid(head.at(a, gy, gx, 3));
                double bw = sw * sw * anchor_w;
                double bh = sh * sh * anchor_h;

                Detection d;
                d.cls = static_cast<DefectClass>(best_cls);
                d.bbox = {bx - bw / 2, by - bh / 2, bx + bw / 2, by + bh / 2};
                d.confidence = conf;
                out.push_back(d);
            }
        }
    }
    return out;
}

std::vector<Detection> decode_heads(const std::vector<RawHead>& heads, const AnchorSpec& spec,
                                    double conf_threshold) {
    if (heads.size() != spec.scales.size())
        throw Error(ErrorCode::ShapeMismatch, "one head per anchor scale is required");
    std::vector<Detection> out;
    for (size_t i = 0; i < heads.size(); ++i) {
        std::vector<Detection> dets = decode_head(heads[i], spec.scales[i], conf_threshold);
        out.insert(out.end(), dets.begin(), dets.end());
    }
    return out;
}

} // namespace netpen::detect
