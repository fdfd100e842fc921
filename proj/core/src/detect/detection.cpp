#include "netpen/detect/detection.hpp"

#include <algorithm>

namespace netpen::detect {

double iou(const BBox& a, const BBox& b) {
    double ix = std::min(a.x_max, b.x_max) - std::max(a.x_min, b.x_min);
    double iy = std::min(a.y_max, b.y_max) - std::max(a.y_min, b.y_min);
    if (ix <= 0 || iy <= 0) return 0.0;
    double inter = ix * iy;
    double uni = a.area() + b.area() - inter;
    return uni > 0 ? inter / uni : 0.0;
}

std::vector<Detection> nms(const std::vector<Detection>& dets, double iou_threshold) {
    std::vector<Detection> sorted = dets;
    std::sort(sorted.begin(), sorted.end(), [](const Detection& a, const Detection& b) {
        if (a.confidence != b.confidence) return a.confidence > b.confidence;
        return a.bbox < b.bbox;
    });

    std::vector<Detection> kept;
    std::vector<bool> suppressed(sorted.size(), false);
    for (size_t i = 0; i < sorted.size(); ++i) {
        if (suppressed[i]) continue;
        kept.push_back(sorted[i]);
        for (size_t j = i + 1; j < sorted.size(); ++j) {
            if (suppressed[j] || sorted[j].cls != sorted[i].cls) continue;
            if (iou(sorted[i].bbox, sorted[j].bbox) > iou_threshold) suppressed[j] = true;
        }
    }
    return kept;
}

} // namespace netpen::detect
