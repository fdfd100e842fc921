#include "netpen/image.hpp"

#include "netpen/error.hpp"

#include <algorithm>
#include <fstream>

namespace netpen {

void write_pgm(const Image& img, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorCode::IoFailure, "cannot open for write: " + path);
    out << "P5\n" << img.width << " " << img.height << "\n255\n";
    out.write(reinterpret_cast<const char*>(img.pixels.data()),
              static_cast<std::streamsize>(img.pixels.size()));
    if (!out) throw Error(ErrorCode::IoFailure, "short write: " + path);
}

Image read_pgm(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::IoFailure, "cannot open for read: " + path);
    std::string magic;
    in >> magic;
    if (magic != "P5") throw Error(ErrorCode::IoFailure, "not a P5 graymap: " + path);
    int w = 0, h = 0, maxval = 0;
    in >> w >> h >> maxval;
    if (w <= 0 || h <= 0 || maxval != 255)
        throw Error(ErrorCode::IoFailure, "unsupported graymap header: " + path);
    in.get(); // single whitespace after header
    Image img(w, h);
    in.read(reinterpret_cast<char*>(img.pixels.data()),
            static_cast<std::streamsize>(img.pixels.size()));
    if (!in) throw Error(ErrorCode::IoFailure, "short read: " + path);
    return img;
}

RgbImage::RgbImage(const Image& gray)
    : width(gray.width), height(gray.height),
      pixels(static_cast<size_t>(gray.width) * gray.height * 3) {
    for (size_t i = 0; i < gray.pixels.size(); ++i) {
        pixels[3 * i] = pixels[3 * i + 1] = pixels[3 * i + 2] = gray.pixels[i];
    }
}

void write_ppm(const RgbImage& img, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorCode::IoFailure, "cannot open for write: " + path);
    out << "P6\n" << img.width << " " << img.height << "\n255\n";
    out.write(reinterpret_cast<const char*>(img.pixels.data()),
              static_cast<std::streamsize>(img.pixels.size()));
    if (!out) throw Error(ErrorCode::IoFailure, "short write: " + path);
}

void draw_rect(RgbImage& img, int x_min, int y_min, int x_max, int y_max,
               uint8_t r, uint8_t g, uint8_t b) {
    auto put = [&](int x, int y) {
        if (x < 0 || y < 0 || x >= img.width || y >= img.height) return;
        size_t i = (static_cast<size_t>(y) * img.width + x) * 3;
        img.pixels[i] = r;
        img.pixels[i + 1] = g;
        img.pixels[i + 2] = b;
    };
    for (int x = x_min; x <= x_max; ++x) {
        put(x, y_min);
        put(x, y_max);
    }
    for (int y = y_min; y <= y_max; ++y) {
        put(x_min, y);
        put(x_max, y);
    }
}

} // namespace netpen
