#include "netpen/vision/canny.hpp"

#include "netpen/error.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace netpen::vision {

namespace {

// reflect101 mirroring: ... 2 1 | 0 1 2 ... n-1 | n-2 n-3 ...
int mirror(int i, int n) {
    if (n == 1) return 0;
    while (i < 0 || i >= n) {
        if (i < 0) i = -i;
        if (i >= n) i = 2 * n - 2 - i;
    }
    return i;
}

std::vector<double> gaussian_kernel(double sigma) {
    int half = static_cast<int>(std::ceil(3.0 * sigma));
    std::vector<double> k(2 * half + 1);
    for (int i = -half; i <= half; ++i)
        k[i + half] = std::exp(-0.5 * (i * i) / (sigma * sigma));
    double sum = std::accumulate(k.begin(), k.end(), 0.0);
    for (double& w : k) w /= sum;
    return k;
}

} // namespace

size_t EdgeMap::count() const {
    return static_cast<size_t>(std::count(edges.begin(), edges.end(), uint8_t{1}));
}

Image gaussian_blur(const Image& img, double sigma) {
    if (sigma < 0) throw Error(ErrorCode::InvalidConfig, "gaussian_blur sigma must be >= 0");
    if (sigma == 0.0) return img;

    const std::vector<double> kernel = gaussian_kernel(sigma);
    const int half = static_cast<int>(kernel.size() / 2);
    const int w = img.width, h = img.height;

    FloatImage tmp(w, h);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            double acc = 0.0;
            for (int i = -half; i <= half; ++i)
                acc += kernel[i + half] * img.at(mirror(x + i, w), y);
            tmp.at(x, y) = static_cast<float>(acc);
        }
    }
    Image out(w, h);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            double acc = 0.0;
            for (int i = -half; i <= half; ++i)
                acc += kernel[i + half] * tmp.at(x, mirror(y + i, h));
            out.at(x, y) = static_cast<uint8_t>(std::clamp(std::lround(acc), 0L, 255L));
        }
    }
    return out;
}

void sobel(const Image& img, FloatImage& gx, FloatImage& gy) {
    const int w = img.width, h = img.height;
    gx = FloatImage(w, h);
    gy = FloatImage(w, h);
    for (int y = 0; y < h; ++y) {
        int ym = mirror(y - 1, h), yp = mirror(y + 1, h);
        for (int x = 0; x < w; ++x) {
            int xm = mirror(x - 1, w), xp = mirror(x + 1, w);
            double tl = img.at(xm, ym), tc = img.at(x, ym), tr = img.at(xp, ym);
            double ml = img.at(xm, y), mr = img.at(xp, y);
            double bl = img.at(xm, yp), bc = img.at(x, yp), br = img.at(xp, yp);
            gx.at(x, y) = static_cast<float>((tr + 2 * mr + br) - (tl + 2 * ml + bl));
            gy.at(x, y) = static_cast<float>((bl + 2 * bc + br) - (tl + 2 * tc + tr));
        }
    }
}

EdgeMap canny(const Image& img, double sigma, double low, double high) {
    if (!(low > 0) || !(low <= high))
        throw Error(ErrorCode::InvalidConfig, "canny thresholds require 0 < low <= high");

    Image blurred = gaussian_blur(img, sigma);
    FloatImage gx, gy;
    sobel(blurred, gx, gy);

    const int w = img.width, h = img.height;
    FloatImage mag(w, h);
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x)
            mag.at(x, y) = std::hypot(gx.at(x, y), gy.at(x, y));

    auto mag_at = [&](int x, int y) -> float {
        if (x < 0 || y < 0 || x >= w || y >= h) return 0.f;
        return mag.at(x, y);
    };

    // Non-maximum suppression across 4 quantized gradient directions. Ties
    // keep the forward-most pixel so a two-pixel plateau thins to one.
    FloatImage thin(w, h);
    constexpr double kPi = 3.14159265358979323846;
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            float m = mag.at(x, y);
            if (m == 0.f) continue;
            double angle = std::atan2(gy.at(x, y), gx.at(x, y));
            if (angle < 0) angle += kPi; // gradient direction is unsigned
            int bin = static_cast<int>((angle + kPi / 8) / (kPi / 4)) & 3;
            int dx = 0, dy = 0;
            switch (bin) {
                case 0: dx = 1; dy = 0; break;  // horizontal gradient
                case 1: dx = 1; dy = 1; break;
                case 2: dx = 0; dy = 1; break;  // vertical gradient
                case 3: dx = -1; dy = 1; break;
            }
            float fwd = mag_at(x + dx, y + dy);
            float back = mag_at(x - dx, y - dy);
            if (m > fwd && m >= back) thin.at(x, y) = m;
        }
    }

    // Hysteresis from strong seeds through 8-connected weak pixels.
    EdgeMap out(w, h);
    std::vector<std::pair<int, int>> stack;
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            if (thin.at(x, y) >= high && !out.at(x, y)) {
                out.at(x, y) = 1;
                stack.emplace_back(x, y);
                while (!stack.empty()) {
                    auto [cx, cy] = stack.back();
                    stack.pop_back();
                    for (int ny = cy - 1; ny <= cy + 1; ++ny) {
                        for (int nx = cx - 1; nx <= cx + 1; ++nx) {
                            if (nx < 0 || ny < 0 || nx >= w || ny >= h) continue;
                            if (out.at(nx, ny)) continue;
                            if (thin.at(nx, ny) >= low) {
                                out.at(nx, ny) = 1;
                                stack.emplace_back(nx, ny);
                            }
                        }
                    }
                }
            }
        }
    }
    return out;
}

} // namespace netpen::vision
