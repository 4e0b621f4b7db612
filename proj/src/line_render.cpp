#include "tactile/line_render.hpp"

#include <cmath>

#include "tactile/errors.hpp"
#include "tactile/filters.hpp"

namespace tactile {

double thickness_for_strength(double s, const PipelineConfig& cfg) {
    if (s <= cfg.edge_threshold) return 0.0;
    if (s >= cfg.edge_saturation) return cfg.line_thickness_max;
    const double t = (s - cfg.edge_threshold) / (cfg.edge_saturation - cfg.edge_threshold);
    return cfg.line_thickness_min + (cfg.line_thickness_max - cfg.line_thickness_min) * t;
}

LineLayer render_lines(const EdgeStrengthMap& edges, const PipelineConfig& cfg) {
    const int w = edges.width, h = edges.height;
    LineLayer out(w, h);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            const double s = edges.at(x, y);
            if (s <= cfg.edge_threshold) continue;
            const double radius = thickness_for_strength(s, cfg) * 0.5;
            const double r_sq = radius * radius;
            const int ri = static_cast<int>(std::floor(radius));
            for (int dy = -ri; dy <= ri; ++dy) {
                const int py = y + dy;
                if (py < 0 || py >= h) continue;
                for (int dx = -ri; dx <= ri; ++dx) {
                    const int px = x + dx;
                    if (px < 0 || px >= w) continue;
                    if (static_cast<double>(dx) * dx + static_cast<double>(dy) * dy <= r_sq)
                        out.at(px, py) = 1;
                }
            }
        }
    }
    return out;
}

GapMask compute_gap_mask(const LineLayer& lines, double gap_width) {
    if (gap_width <= 0.0) throw ValidationError("compute_gap_mask: gap width must be positive");
    const std::vector<double> dist_sq = squared_distance_transform(lines);
    GapMask out(lines.width, lines.height);
    const double limit = gap_width * gap_width;
    for (size_t i = 0; i < dist_sq.size(); ++i) out.mask[i] = dist_sq[i] <= limit;
    return out;
}

}  // namespace tactile
