#include "tactile/layout.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tactile/errors.hpp"

namespace tactile {

namespace {

// Frame dots render at mid boldness against the standard fill ceiling.
constexpr double kFrameFill = 0.3;
constexpr double kPi = 3.14159265358979323846;

void blit(BinaryImage& dst, const BinaryImage& src, int x0, int y0) {
    for (int y = 0; y < src.height; ++y)
        for (int x = 0; x < src.width; ++x)
            if (src.at(x, y)) dst.at(x0 + x, y0 + y) = 1;
}

// Distance of a point to the nearest raster border; the ring band spans
// depths [0, thickness).
double band_depth(double x, double y, int w, int h) {
    return std::min(std::min(x, w - 1.0 - x), std::min(y, h - 1.0 - y));
}

// Frame dot test: a square lattice turned 45 degrees, which has exact
// 4-fold symmetry, so horizontal and vertical read identically. Only dots
// whose center sits fully inside the ring band are drawn; clipped half-dots
// would line up into streaks along the band and give the frame a readable
// direction.
bool frame_dot_ink(int px, int py, int w, int h, int thickness, double period) {
    const double radius = period * std::sqrt(kFrameFill / kPi);
    const double r_sq = radius * radius;
    const double a = period / std::sqrt(2.0);  // checkerboard cell size
    const long i0 = static_cast<long>(std::floor(px / a));
    const long j0 = static_cast<long>(std::floor(py / a));
    for (long ci = i0 - 1; ci <= i0 + 1; ++ci) {
        for (long cj = j0 - 1; cj <= j0 + 1; ++cj) {
            if (((ci + cj) % 2 + 2) % 2 != 0) continue;  // even-parity sites only
            const double cx = ci * a;
            const double cy = cj * a;
            const double depth = band_depth(cx, cy, w, h);
            if (depth < radius + 0.5 || depth > thickness - radius - 0.5) continue;
            const double dx = px - cx, dy = py - cy;
            if (dx * dx + dy * dy <= r_sq) return true;
        }
    }
    return false;
}

}  // namespace

BinaryImage compose_tactile(const LineLayer& lines, const TextureLayer& textures) {
    if (lines.width != textures.width || lines.height != textures.height)
        throw ValidationError("compose_tactile: line layer is " + std::to_string(lines.width) + "x" +
                              std::to_string(lines.height) + " but texture layer is " +
                              std::to_string(textures.width) + "x" + std::to_string(textures.height));
    BinaryImage out = lines;
    for (size_t i = 0; i < out.mask.size(); ++i) out.mask[i] |= textures.mask[i];
    return out;
}

BinaryImage render_frame(int content_w, int content_h, const FrameSpec& spec) {
    const int border = spec.thickness + spec.gap;
    const int w = content_w + 2 * border;
    const int h = content_h + 2 * border;

    BinaryImage out(w, h);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            const int ring_depth = std::min(std::min(x, w - 1 - x), std::min(y, h - 1 - y));
            if (ring_depth >= spec.thickness) continue;  // gap band and content stay empty
            out.at(x, y) = frame_dot_ink(x, y, w, h, spec.thickness, spec.texture_period);
        }
    }
    return out;
}

LineLayer make_thumbnail(const LineLayer& lines, double scale) {
    const int w = static_cast<int>(std::lround(lines.width * scale));
    const int h = static_cast<int>(std::lround(lines.height * scale));
    if (w < 1 || h < 1)
        throw ValidationError("make_thumbnail: scale " + std::to_string(scale) +
                              " yields an empty raster for " + std::to_string(lines.width) + "x" +
                              std::to_string(lines.height));

    LineLayer out(w, h);
    for (int y = 0; y < lines.height; ++y) {
        const int ty = std::min(h - 1, static_cast<int>(std::floor(y * scale)));
        for (int x = 0; x < lines.width; ++x) {
            if (!lines.at(x, y)) continue;
            const int tx = std::min(w - 1, static_cast<int>(std::floor(x * scale)));
            out.at(tx, ty) = 1;
        }
    }
    return out;
}

ComposedPage compose_page(const BinaryImage& main, const BinaryImage& thumb, const PipelineConfig& cfg) {
    const FrameSpec spec{cfg.frame_thickness, cfg.frame_gap, cfg.frame_texture_period};
    const BinaryImage main_framed = render_frame(main.width, main.height, spec);
    const BinaryImage thumb_framed = render_frame(thumb.width, thumb.height, spec);
    const int border = spec.thickness + spec.gap;

    const int page_w = static_cast<int>(std::lround(cfg.page_width_in * cfg.dpi));
    const int page_h = static_cast<int>(std::lround(cfg.page_height_in * cfg.dpi));
    const int need_w = std::max(main_framed.width, thumb_framed.width) + 2 * cfg.page_margin;
    const int need_h = 2 * cfg.page_margin + main_framed.height + cfg.inter_frame_gap + thumb_framed.height;
    if (need_w > page_w || need_h > page_h)
        throw ValidationError("compose_page: content needs " + std::to_string(need_w) + "x" +
                              std::to_string(need_h) + " px but the page provides " + std::to_string(page_w) +
                              "x" + std::to_string(page_h) + " px at " + std::to_string(cfg.dpi) + " dpi");

    ComposedPage out;
    out.page.dpi = cfg.dpi;
    out.page.ink = BinaryImage(page_w, page_h);

    const int main_x = (page_w - main_framed.width) / 2;
    const int main_y = cfg.page_margin;
    const int thumb_x = (page_w - thumb_framed.width) / 2;
    const int thumb_y = main_y + main_framed.height + cfg.inter_frame_gap;

    blit(out.page.ink, main_framed, main_x, main_y);
    blit(out.page.ink, main, main_x + border, main_y + border);
    blit(out.page.ink, thumb_framed, thumb_x, thumb_y);
    blit(out.page.ink, thumb, thumb_x + border, thumb_y + border);

    out.main_frame = {main_x, main_y, main_framed.width, main_framed.height};
    out.main_content = {main_x + border, main_y + border, main.width, main.height};
    out.thumb_frame = {thumb_x, thumb_y, thumb_framed.width, thumb_framed.height};
    out.thumb_content = {thumb_x + border, thumb_y + border, thumb.width, thumb.height};
    return out;
}

}  // namespace tactile
