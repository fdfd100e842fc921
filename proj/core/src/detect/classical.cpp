#include "netpen/detect/classical.hpp"

#include "netpen/error.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

namespace netpen::detect {

namespace {

/// Summed-area table with one extra row/column of zeros.
class Integral {
public:
    Integral(int w, int h) : w_(w + 1), sums_(static_cast<size_t>(w + 1) * (h + 1), 0.0) {}

    void build_from(int w, int h, const std::function<double(int, int)>& f) {
        for (int y = 0; y < h; ++y) {
            double row = 0.0;
            for (int x = 0; x < w; ++x) {
                row += f(x, y);
                at(x + 1, y + 1) = at(x + 1, y) + row;
            }
        }
    }

    // sum over [x0, x1) x [y0, y1)
    double sum(int x0, int y0, int x1, int y1) const {
        return at(x1, y1) - at(x0, y1) - at(x1, y0) + at(x0, y0);
    }

private:
    double& at(int x, int y) { return sums_[static_cast<size_t>(y) * w_ + x]; }
    double at(int x, int y) const { return sums_[static_cast<size_t>(y) * w_ + x]; }

    int w_;
    std::vector<double> sums_;
};

struct WindowFlag {
    bool flagged = false;
    DefectClass cls = DefectClass::NetHole;
    double confidence = 0.0;
};

} // namespace

size_t BinaryMask::count() const {
    return static_cast<size_t>(std::count(mask.begin(), mask.end(), uint8_t{1}));
}

double BinaryMask::density() const {
    return mask.empty() ? 0.0 : static_cast<double>(count()) / mask.size();
}

BinaryMask binarize_net(const Image& img, const BinarizeConfig& cfg) {
    if (cfg.window < 1) throw Error(ErrorCode::InvalidConfig, "binarize window must be >= 1");
    const int w = img.width, h = img.height;
    const int half = cfg.window / 2;

    Integral intensity(w, h);
    intensity.build_from(w, h, [&](int x, int y) { return img.at(x, y); });

    BinaryMask out(w, h);
    for (int y = 0; y < h; ++y) {
        int y0 = std::max(0, y - half), y1 = std::min(h, y + half + 1);
        for (int x = 0; x < w; ++x) {
            int x0 = std::max(0, x - half), x1 = std::min(w, x + half + 1);
            double mean = intensity.sum(x0, y0, x1, y1) / ((x1 - x0) * (y1 - y0));
            double v = img.at(x, y);
            bool hit = cfg.dark_structure ? v <= mean - cfg.offset : v >= mean + cfg.offset;
            out.at(x, y) = hit ? 1 : 0;
        }
    }
    return out;
}

namespace {

// First off-zero autocorrelation peak of a mean-removed profile, or 0 when
// nothing clears the floor.
double profile_peak_lag(const std::vector<double>& profile, const PeriodConfig& cfg) {
    const int n = static_cast<int>(profile.size());
    if (n < cfg.min_lag + 2) return 0.0;
    double mean = std::accumulate(profile.begin(), profile.end(), 0.0) / n;
    std::vector<double> a(profile.size());
    for (int i = 0; i < n; ++i) a[i] = profile[i] - mean;

    auto corr = [&](int lag) {
        double s = 0.0;
        for (int i = 0; i + lag < n; ++i) s += a[i] * a[i + lag];
        return s / (n - lag);
    };

    double r0 = corr(0);
    if (r0 <= 0.0) return 0.0;
    int max_lag = std::min(cfg.max_lag, n - 2);
    double prev = corr(std::max(1, cfg.min_lag - 1));
    double cur = corr(cfg.min_lag);
    for (int lag = cfg.min_lag; lag <= max_lag; ++lag) {
        double next = corr(lag + 1);
        if (cur >= prev && cur >= next && cur >= cfg.min_correlation * r0) {
            // sub-bin refinement by parabola through the three points
            double denom = prev - 2 * cur + next;
            double shift = denom != 0.0 ? 0.5 * (prev - next) / denom : 0.0;
            return lag + std::clamp(shift, -0.5, 0.5);
        }
        prev = cur;
        cur = next;
    }
    return 0.0;
}

} // namespace

double estimate_mesh_period(const BinaryMask& mask, const PeriodConfig& cfg) {
    std::vector<double> cols(mask.width, 0.0), rows(mask.height, 0.0);
    for (int y = 0; y < mask.height; ++y)
        for (int x = 0; x < mask.width; ++x)
            if (mask.at(x, y)) {
                cols[x] += 1.0;
                rows[y] += 1.0;
            }

    double col_lag = profile_peak_lag(cols, cfg);
    double row_lag = profile_peak_lag(rows, cfg);
    if (col_lag > 0.0 && row_lag > 0.0) return (col_lag + row_lag) / 2;
    if (col_lag > 0.0) return col_lag;
    if (row_lag > 0.0) return row_lag;
    throw Error(ErrorCode::NoPeriodicity, "no autocorrelation peak above the floor");
}

std::vector<Detection> detect_classical(const Image& img, double period,
                                        const ClassicalConfig& cfg) {
    if (period < 2.0) throw Error(ErrorCode::InvalidConfig, "detect_classical period must be >= 2");
    const int w = img.width, h = img.height;
    const int side = std::max(4, static_cast<int>(std::lround(2.0 * period)));
    const int nx = std::max(1, w / side);
    const int ny = std::max(1, h / side);

    BinaryMask mask = binarize_net(img, cfg.binarize);

    Integral m_int(w, h), i_int(w, h), i2_int(w, h), g_int(w, h);
    m_int.build_from(w, h, [&](int x, int y) { return mask.at(x, y); });
    i_int.build_from(w, h, [&](int x, int y) { return img.at(x, y); });
    i2_int.build_from(w, h, [&](int x, int y) {
        double v = img.at(x, y);
        return v * v;
    });
    g_int.build_from(w, h, [&](int x, int y) {
        double gx = x + 1 < w ? std::abs(img.at(x + 1, y) - img.at(x, y)) : 0.0;
        double gy = y + 1 < h ? std::abs(img.at(x, y + 1) - img.at(x, y)) : 0.0;
        return gx + gy;
    });

    // Window extents; the last window per axis absorbs the remainder.
    auto win_x0 = [&](int gx) { return gx * side; };
    auto win_x1 = [&](int gx) { return gx + 1 == nx ? w : (gx + 1) * side; };
    auto win_y0 = [&](int gy) { return gy * side; };
    auto win_y1 = [&](int gy) { return gy + 1 == ny ? h : (gy + 1) * side; };

    std::vector<WindowFlag> flags(static_cast<size_t>(nx) * ny);
    for (int gy = 0; gy < ny; ++gy) {
        for (int gx = 0; gx < nx; ++gx) {
            int x0 = win_x0(gx), x1 = win_x1(gx), y0 = win_y0(gy), y1 = win_y1(gy);
            double area = static_cast<double>((x1 - x0) * (y1 - y0));
            double density = m_int.sum(x0, y0, x1, y1) / area;
            double mean = i_int.sum(x0, y0, x1, y1) / area;
            double var = i2_int.sum(x0, y0, x1, y1) / area - mean * mean;
            double edge = g_int.sum(x0, y0, x1, y1) / area;

            WindowFlag& f = flags[static_cast<size_t>(gy) * nx + gx];
            if (mean >= cfg.bright_mean) {
                f = {true, DefectClass::Plastic,
                     std::min(1.0, (mean - cfg.bright_mean) / (255.0 - cfg.bright_mean))};
            } else if (density < cfg.hole_density && mean >= cfg.hole_min_mean) {
                f = {true, DefectClass::NetHole,
                     (cfg.hole_density - density) / cfg.hole_density};
            } else if (density >= cfg.occlusion_density && edge <= cfg.max_edge_energy) {
                DefectClass cls =
                    var >= cfg.veg_variance ? DefectClass::Vegetation : DefectClass::Biofouling;
                f = {true, cls,
                     std::min(1.0, (density - cfg.occlusion_density) /
                                       (1.0 - cfg.occlusion_density))};
            }
        }
    }

    // Merge 8-connected windows of the same class.
    std::vector<int> component(flags.size(), -1);
    std::vector<Detection> merged;
    std::vector<std::pair<int, int>> span_rows; // per component: min/max grid row
    std::vector<std::pair<int, int>> stack;
    for (int gy = 0; gy < ny; ++gy) {
        for (int gx = 0; gx < nx; ++gx) {
            size_t idx = static_cast<size_t>(gy) * nx + gx;
            if (!flags[idx].flagged || component[idx] >= 0) continue;
            int comp = static_cast<int>(merged.size());
            DefectClass cls = flags[idx].cls;
            Detection det;
            det.cls = cls;
            det.bbox = {static_cast<double>(win_x0(gx)), static_cast<double>(win_y0(gy)),
                        static_cast<double>(win_x1(gx)), static_cast<double>(win_y1(gy))};
            det.confidence = flags[idx].confidence;
            int row_min = gy, row_max = gy;

            component[idx] = comp;
            stack.clear();
            stack.emplace_back(gx, gy);
            while (!stack.empty()) {
                auto [cx, cy] = stack.back();
                stack.pop_back();
                for (int dy = -1; dy <= 1; ++dy) {
                    for (int dx = -1; dx <= 1; ++dx) {
                        int nx2 = cx + dx, ny2 = cy + dy;
                        if (nx2 < 0 || ny2 < 0 || nx2 >= nx || ny2 >= ny) continue;
                        size_t nidx = static_cast<size_t>(ny2) * nx + nx2;
                        if (!flags[nidx].flagged || flags[nidx].cls != cls ||
                            component[nidx] >= 0)
                            continue;
                        component[nidx] = comp;
                        stack.emplace_back(nx2, ny2);
                        det.bbox.x_min = std::min(det.bbox.x_min, double(win_x0(nx2)));
                        det.bbox.y_min = std::min(det.bbox.y_min, double(win_y0(ny2)));
                        det.bbox.x_max = std::max(det.bbox.x_max, double(win_x1(nx2)));
                        det.bbox.y_max = std::max(det.bbox.y_max, double(win_y1(ny2)));
                        det.confidence = std::max(det.confidence, flags[nidx].confidence);
                        row_min = std::min(row_min, ny2);
                        row_max = std::max(row_max, ny2);
                    }
                }
            }
            merged.push_back(det);
            span_rows.emplace_back(row_min, row_max);
        }
    }

    // Rope bands show up as occlusion runs spanning the full image height.
    std::vector<Detection> out;
    for (size_t i = 0; i < merged.size(); ++i) {
        const Detection& d = merged[i];
        bool occlusion =
            d.cls == DefectClass::Vegetation || d.cls == DefectClass::Biofouling;
        if (occlusion) {
            double row_span = span_rows[i].second - span_rows[i].first + 1;
            if (row_span >= cfg.full_height_frac * ny) continue;
        }
        out.push_back(d);
    }

    std::sort(out.begin(), out.end(), [](const Detection& a, const Detection& b) {
        if (a.cls != b.cls) return a.cls < b.cls;
        return a.bbox < b.bbox;
    });
    return out;
}

ClassicalConfig classical_config_from_file(const ConfigFile& cfg) {
    ClassicalConfig c;
    c.binarize.window = static_cast<int>(cfg.get_int("detect", "binarize_window",
                                                     c.binarize.window));
    c.binarize.offset = cfg.get_double("detect", "binarize_offset", c.binarize.offset);
    c.binarize.dark_structure = cfg.get_bool("detect", "dark_structure",
                                             c.binarize.dark_structure);
    c.hole_density = cfg.get_double("detect", "hole_density", c.hole_density);
    c.hole_min_mean = cfg.get_double("detect", "hole_min_mean", c.hole_min_mean);
    c.bright_mean = cfg.get_double("detect", "bright_mean", c.bright_mean);
    c.occlusion_density = cfg.get_double("detect", "occlusion_density", c.occlusion_density);
    c.max_edge_energy = cfg.get_double("detect", "max_edge_energy", c.max_edge_energy);
    c.veg_variance = cfg.get_double("detect", "veg_variance", c.veg_variance);
    c.full_height_frac = cfg.get_double("detect", "full_height_frac", c.full_height_frac);
    return c;
}

PeriodConfig period_config_from_file(const ConfigFile& cfg) {
    PeriodConfig p;
    p.min_correlation = cfg.get_double("detect", "min_correlation", p.min_correlation);
    p.min_lag = static_cast<int>(cfg.get_int("detect", "min_lag", p.min_lag));
    p.max_lag = static_cast<int>(cfg.get_int("detect", "max_lag", p.max_lag));
    return p;
}

} // namespace netpen::detect
