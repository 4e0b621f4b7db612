#include "tactile/edge_detect.hpp"

#include <cmath>

#include "tactile/errors.hpp"
#include "tactile/filters.hpp"
#include "tactile/image_io.hpp"

namespace tactile {

namespace {

// tan(22.5 deg): sector boundaries of the 8-neighbor suppression directions.
constexpr double kDiagonalSlope = 0.41421356237309503;

int clamp_index(int i, int n) { return i < 0 ? 0 : (i >= n ? n - 1 : i); }

// Suppression axis from the gradient, chosen by slope comparisons (not
// atan2) so that rotating the gradient by exactly 90 degrees maps each
// sector onto its rotated counterpart without floating-point drift.
// 0: horizontal, 1: down-right diagonal, 2: vertical, 3: down-left diagonal.
int gradient_sector(double gx, double gy) {
    const double ax = std::fabs(gx), ay = std::fabs(gy);
    if (ay <= kDiagonalSlope * ax) return 0;
    if (ax <= kDiagonalSlope * ay) return 2;
    return gx * gy > 0.0 ? 1 : 3;
}

float snap_to_u16(float s) {
    const long q = std::lround(static_cast<double>(s) * 65535.0);
    return static_cast<float>(static_cast<double>(q) / 65535.0);
}

}  // namespace

EdgeStrengthMap detect_edges(const ColorImage& img, const PipelineConfig& cfg) {
    if (img.empty()) throw ValidationError("detect_edges: empty input image");

    const int w = img.width, h = img.height;
    const ColorImage smooth = gaussian_blur(img, cfg.color_blur_radius / 2.0);

    GrayImage magnitude(w, h);
    std::vector<double> grad_x(static_cast<size_t>(w) * h), grad_y(static_cast<size_t>(w) * h);

    for (int y = 0; y < h; ++y) {
        const int ya = clamp_index(y - 1, h), yb = clamp_index(y + 1, h);
        for (int x = 0; x < w; ++x) {
            const int xa = clamp_index(x - 1, w), xb = clamp_index(x + 1, w);
            double best_sq = -1.0, best_gx = 0.0, best_gy = 0.0;
            for (int c = 0; c < 3; ++c) {
                const double gx = (static_cast<double>(smooth.at(xb, y)[c]) - smooth.at(xa, y)[c]) * 0.5;
                const double gy = (static_cast<double>(smooth.at(x, yb)[c]) - smooth.at(x, ya)[c]) * 0.5;
                const double sq = gx * gx + gy * gy;
                if (sq > best_sq) {
                    best_sq = sq;
                    best_gx = gx;
                    best_gy = gy;
                }
            }
            const size_t i = static_cast<size_t>(y) * w + x;
            magnitude.values[i] = static_cast<float>(std::sqrt(best_sq));
            grad_x[i] = best_gx;
            grad_y[i] = best_gy;
        }
    }

    float max_mag = 0.0f;
    for (float m : magnitude.values) max_mag = std::max(max_mag, m);
    EdgeStrengthMap out(w, h);
    if (max_mag <= 0.0f) return out;

    GrayImage strength(w, h);
    for (size_t i = 0; i < strength.values.size(); ++i) strength.values[i] = magnitude.values[i] / max_mag;

    // Keep only local maxima along the gradient (plateaus survive whole).
    static const int kOffsets[4][2] = {{1, 0}, {1, 1}, {0, 1}, {1, -1}};
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            const size_t i = static_cast<size_t>(y) * w + x;
            const float s = strength.values[i];
            if (s <= 0.0f) continue;
            const int* d = kOffsets[gradient_sector(grad_x[i], grad_y[i])];
            auto neighbor = [&](int sx, int sy) -> float {
                const int nx = x + sx, ny = y + sy;
                if (nx < 0 || nx >= w || ny < 0 || ny >= h) return 0.0f;
                return strength.at(nx, ny);
            };
            if (s >= neighbor(d[0], d[1]) && s >= neighbor(-d[0], -d[1])) out.values[i] = snap_to_u16(s);
        }
    }
    return out;
}

BinaryEdgeMap threshold_edges(const EdgeStrengthMap& edges, double threshold) {
    BinaryEdgeMap out(edges.width, edges.height);
    for (size_t i = 0; i < edges.values.size(); ++i)
        out.mask[i] = static_cast<double>(edges.values[i]) > threshold;
    return out;
}

EdgeStrengthMap import_edges(const std::string& path, int expected_width, int expected_height) {
    EdgeStrengthMap map = load_gray_image_16(path);
    if (map.width != expected_width || map.height != expected_height)
        throw ValidationError("imported edge map is " + std::to_string(map.width) + "x" +
                              std::to_string(map.height) + " but the image is " +
                              std::to_string(expected_width) + "x" + std::to_string(expected_height));
    return map;
}

}  // namespace tactile
