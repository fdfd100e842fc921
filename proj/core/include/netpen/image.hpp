#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace netpen {

/// Row-major 8-bit grayscale raster. The unit flowing through rendering and
/// the vision pipeline.
struct Image {
    int width = 0;
    int height = 0;
    std::vector<uint8_t> pixels;

    Image() = default;
    Image(int w, int h, uint8_t fill = 0)
        : width(w), height(h), pixels(static_cast<size_t>(w) * h, fill) {}

    uint8_t& at(int x, int y) { return pixels[static_cast<size_t>(y) * width + x]; }
    uint8_t at(int x, int y) const { return pixels[static_cast<size_t>(y) * width + x]; }

    bool operator==(const Image&) const = default;
};

/// Float plane used between filter stages so rounding happens once.
struct FloatImage {
    int width = 0;
    int height = 0;
    std::vector<float> values;

    FloatImage() = default;
    FloatImage(int w, int h, float fill = 0.f)
        : width(w), height(h), values(static_cast<size_t>(w) * h, fill) {}

    float& at(int x, int y) { return values[static_cast<size_t>(y) * width + x]; }
    float at(int x, int y) const { return values[static_cast<size_t>(y) * width + x]; }
};

// Binary portable graymap (P5).
void write_pgm(const Image& img, const std::string& path);
Image read_pgm(const std::string& path);

/// RGB frame used only for annotated exports (P6).
struct RgbImage {
    int width = 0;
    int height = 0;
    std::vector<uint8_t> pixels; // interleaved r,g,b

    RgbImage() = default;
    explicit RgbImage(const Image& gray);
};

void write_ppm(const RgbImage& img, const std::string& path);

/// Burns an axis-aligned rectangle outline into an RGB frame, clipped to bounds.
void draw_rect(RgbImage& img, int x_min, int y_min, int x_max, int y_max,
               uint8_t r, uint8_t g, uint8_t b);

} // namespace netpen
