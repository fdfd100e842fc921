#pragma once

#include "netpen/image.hpp"

namespace netpen::vision {

struct EdgeMap {
    int width = 0;
    int height = 0;
    std::vector<uint8_t> edges; // 0/1

    EdgeMap() = default;
    EdgeMap(int w, int h) : width(w), height(h), edges(static_cast<size_t>(w) * h, 0) {}

    uint8_t& at(int x, int y) { return edges[static_cast<size_t>(y) * width + x]; }
    uint8_t at(int x, int y) const { return edges[static_cast<size_t>(y) * width + x]; }

    size_t count() const;
};

/// Separable Gaussian with truncated kernel (half-width ceil(3*sigma)) and
/// mirrored borders. sigma 0 returns the input unchanged; rounding happens
/// once, on the output.
Image gaussian_blur(const Image& img, double sigma);

/// 3x3 Sobel gradients of an image, mirrored borders.
void sobel(const Image& img, FloatImage& gx, FloatImage& gy);

/// Blur, Sobel, L2 magnitude, non-maximum suppression over 4 quantized
/// directions, then hysteresis: pixels >= high seed, pixels >= low that are
/// 8-connected to a seed are kept. Pre: 0 < low <= high.
EdgeMap canny(const Image& img, double sigma, double low, double high);

} // namespace netpen::vision
