#pragma once

#include "netpen/defect_class.hpp"

#include <vector>

namespace netpen::detect {

/// Axis-aligned box in pixel coordinates, corners as floats.
struct BBox {
    double x_min = 0.0;
    double y_min = 0.0;
    double x_max = 0.0;
    double y_max = 0.0;

    double area() const { return (x_max - x_min) * (y_max - y_min); }
    bool valid() const { return x_min < x_max && y_min < y_max; }

    bool operator==(const BBox&) const = default;
    auto operator<=>(const BBox&) const = default;
};

struct Detection {
    DefectClass cls = DefectClass::NetHole;
    BBox bbox;
    double confidence = 0.0;

    bool operator==(const Detection&) const = default;
};

/// Intersection over union; 0 for disjoint boxes.
double iou(const BBox& a, const BBox& b);

/// Greedy per-class non-maximum suppression: sort by confidence descending
/// (ties by bbox lexicographic), keep the highest, suppress same-class boxes
/// with iou strictly above the threshold, repeat. Output order follows the
/// sorted order.
std::vector<Detection> nms(const std::vector<Detection>& dets, double iou_threshold);

} // namespace netpen::detect
