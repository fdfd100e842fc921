#include "netpen/sim/render.hpp"

#include "netpen/rand.hpp"

#include <algorithm>
#include <cmath>

namespace netpen::sim {

namespace {

// Base gray levels before range attenuation. The veil is the asymptotic
// water color; pixels that see through the net (mesh gaps, holes) show it
// directly.
constexpr double kVeil = 150.0;
constexpr double kCollar = 35.0;
constexpr double kRope = 25.0;
constexpr double kTwine = 70.0;
constexpr double kPlastic = 235.0;

struct SurfaceSample {
    bool hit = false;     // false: open water, veil color at any range
    double value = kVeil;
};

double smoothstep(double t) { return t * t * (3.0 - 2.0 * t); }

// Value noise on an integer lattice, deterministic in (key, cell).
double value_noise(double x, double y, uint64_t key) {
    double fx = std::floor(x);
    double fy = std::floor(y);
    int64_t ix = static_cast<int64_t>(fx);
    int64_t iy = static_cast<int64_t>(fy);
    auto lattice = [&](int64_t cx, int64_t cy) {
        uint64_t h = hash_combine(key, hash_combine(static_cast<uint64_t>(cx) * 0x9E3779B1ULL,
                                                    static_cast<uint64_t>(cy)));
        return u01(h);
    };
    double tx = smoothstep(x - fx);
    double ty = smoothstep(y - fy);
    double v00 = lattice(ix, iy);
    double v10 = lattice(ix + 1, iy);
    double v01 = lattice(ix, iy + 1);
    double v11 = lattice(ix + 1, iy + 1);
    double a = v00 + (v10 - v00) * tx;
    double b = v01 + (v11 - v01) * tx;
    return a + (b - a) * ty;
}

double dist_to_grid(double coord, double pitch) {
    double r = coord / pitch;
    double frac = r - std::floor(r);
    return std::min(frac, 1.0 - frac) * pitch;
}

// Appearance of the net plane at world point (wx, wy). wx is lateral from
// the rope midline, wy is depth below the net top.
SurfaceSample sample_plane(const NetScene& scene, double wx, double wy) {
    if (wy < 0.0 || wy > scene.net_depth) return {true, kCollar};
    if (std::abs(wx) > scene.net_width / 2) return {false, kVeil};

    double half_b = scene.rope_spacing / 2;
    bool on_rope = std::abs(std::abs(wx) - half_b) <= scene.rope_width / 2;
    if (on_rope) return {true, kRope};

    for (size_t i = 0; i < scene.defects.size(); ++i) {
        const DefectSpec& d = scene.defects[i];
        double dx = wx - d.center_x;
        double dy = wy - d.center_y;
        if (std::abs(dx) > d.extent_x / 2 || std::abs(dy) > d.extent_y / 2) continue;
        uint64_t key = hash_combine(scene.seed, 0x5000 + i);
        switch (d.cls) {
            case DefectClass::NetHole:
                return {false, kVeil};
            case DefectClass::Plastic: {
                double ex = dx / (d.extent_x / 2);
                double ey = dy / (d.extent_y / 2);
                if (ex * ex + ey * ey <= 1.0) {
                    double n = value_noise(wx / 0.03, wy / 0.03, key);
                    return {true, kPlastic - 10.0 * n};
                }
                break; // outside the blob the mesh shows through
            }
            case DefectClass::Vegetation: {
                // fine, high-contrast strands occluding the mesh
                double n = value_noise(wx / 0.015, wy / 0.015, key);
                if (n < 0.66) {
                    double n2 = value_noise(wx / 0.006, wy / 0.006, key ^ 0xABCD);
                    return {true, 48.0 + 22.0 * n2};
                }
                return {true, 128.0};
            }
            case DefectClass::Biofouling: {
                // coarse, low-contrast growth occluding the mesh
                double n = value_noise(wx / 0.05, wy / 0.05, key);
                if (n < 0.66) {
                    double n2 = value_noise(wx / 0.02, wy / 0.02, key ^ 0xBEEF);
                    return {true, 80.0 + 10.0 * n2};
                }
                return {true, 118.0};
            }
        }
    }

    bool on_twine = dist_to_grid(wx, scene.mesh_pitch) <= scene.twine_width / 2 ||
                    dist_to_grid(wy, scene.mesh_pitch) <= scene.twine_width / 2;
    if (on_twine) return {true, kTwine};
    return {false, kVeil};
}

} // namespace

Image render_frame(const NetScene& scene, const VehicleState& state,
                   const CameraIntrinsics& cam, uint64_t frame_id) {
    Image img(cam.width, cam.height);

    const double sin_yaw = std::sin(state.yaw);
    const double cos_yaw = std::cos(state.yaw);
    const double inv_f = 1.0 / cam.focal_px;
    const double att = scene.water.attenuation_per_m;
    const double noise_sigma = scene.water.noise_sigma;
    const uint64_t frame_key = hash_combine(scene.seed, hash_combine(0xF0A3, frame_id));

    // 2x2 supersampling tames the thin-twine aliasing without hiding it.
    constexpr double kOffsets[2] = {0.25, 0.75};

    for (int py = 0; py < cam.height; ++py) {
        for (int px = 0; px < cam.width; ++px) {
            double acc = 0.0;
            for (double oy : kOffsets) {
                double ay = (py + oy - cam.cy) * inv_f;
                for (double ox : kOffsets) {
                    double ax = (px + ox - cam.cx) * inv_f;
                    // Ray direction: right*(ax) + down*(ay) + forward.
                    double dx = ax * cos_yaw + sin_yaw;
                    double dy = ay;
                    double dz = -ax * sin_yaw + cos_yaw;
                    if (dz <= 1e-9) {
                        acc += kVeil;
                        continue;
                    }
                    double t = state.z / dz;
                    double wx = state.x + t * dx;
                    double wy = state.depth + t * dy;
                    SurfaceSample s = sample_plane(scene, wx, wy);
                    if (!s.hit) {
                        acc += kVeil;
                        continue;
                    }
                    double range = t * std::sqrt(dx * dx + dy * dy + dz * dz);
                    acc += kVeil + (s.value - kVeil) * std::exp(-att * range);
                }
            }
            double value = acc / 4.0;
            if (noise_sigma > 0.0) {
                uint64_t pixel_key =
                    hash_combine(frame_key, static_cast<uint64_t>(py) * cam.width + px);
                value += noise_sigma * gauss01(pixel_key);
            }
            img.at(px, py) =
                static_cast<uint8_t>(std::clamp(std::lround(value), 0L, 255L));
        }
    }
    return img;
}

GroundTruth ground_truth(const NetScene& scene, const VehicleState& state,
                         const CameraIntrinsics& cam) {
    GroundTruth gt;
    gt.true_distance = state.z;
    gt.true_yaw = state.yaw;

    const double sin_yaw = std::sin(state.yaw);
    const double cos_yaw = std::cos(state.yaw);

    // Forward-project a plane point to pixels; false if behind the camera.
    auto project = [&](double wx, double wy, double& u, double& v) {
        double rx = wx - state.x;
        double ry = wy - state.depth;
        double d_right = rx * cos_yaw - state.z * sin_yaw;
        double d_fwd = rx * sin_yaw + state.z * cos_yaw;
        if (d_fwd <= 1e-9) return false;
        u = cam.cx + cam.focal_px * d_right / d_fwd;
        v = cam.cy + cam.focal_px * ry / d_fwd;
        return true;
    };

    for (const DefectSpec& d : scene.defects) {
        double xs[2] = {d.center_x - d.extent_x / 2, d.center_x + d.extent_x / 2};
        double ys[2] = {d.center_y - d.extent_y / 2, d.center_y + d.extent_y / 2};
        double u_min = 1e18, u_max = -1e18, v_min = 1e18, v_max = -1e18;
        bool ok = true;
        for (double wx : xs) {
            for (double wy : ys) {
                double u, v;
                if (!project(wx, wy, u, v)) {
                    ok = false;
                    break;
                }
                u_min = std::min(u_min, u);
                u_max = std::max(u_max, u);
                v_min = std::min(v_min, v);
                v_max = std::max(v_max, v);
            }
            if (!ok) break;
        }
        if (!ok) continue;
        u_min = std::max(u_min, 0.0);
        v_min = std::max(v_min, 0.0);
        u_max = std::min(u_max, static_cast<double>(cam.width));
        v_max = std::min(v_max, static_cast<double>(cam.height));
        if (u_min < u_max && v_min < v_max)
            gt.visible_defects.push_back({d.cls, u_min, v_min, u_max, v_max});
    }
    return gt;
}

} // namespace netpen::sim
