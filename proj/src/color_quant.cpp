#include "tactile/color_quant.hpp"

#include <algorithm>
#include <cmath>

#include "tactile/filters.hpp"
#include "tactile/image_io.hpp"

namespace tactile {

namespace {

double wrap_degrees(double h) {
    h = std::fmod(h, 360.0);
    return h < 0.0 ? h + 360.0 : h;
}

bool in_arc(double h, double start, double end) { return h >= start && h < end; }

// Moves h along the shorter way around the wheel toward `target`, by at most
// `amount` degrees and never past the target.
double move_toward(double h, double target, double amount) {
    double delta = wrap_degrees(target - h);
    if (delta > 180.0) delta -= 360.0;
    const double step = std::min(amount, std::fabs(delta));
    return wrap_degrees(h + (delta < 0.0 ? -step : step));
}

}  // namespace

ColorImage blur_colors(const ColorImage& img, double radius) { return gaussian_blur(img, radius); }

HsvColor rgb_to_hsv(double r, double g, double b) {
    const double max = std::max({r, g, b});
    const double min = std::min({r, g, b});
    const double delta = max - min;

    HsvColor c;
    c.v = max;
    c.s = max > 0.0 ? delta / max : 0.0;
    if (delta <= 0.0) return c;  // achromatic, h stays 0

    double h;
    if (max == r)
        h = (g - b) / delta;
    else if (max == g)
        h = (b - r) / delta + 2.0;
    else
        h = (r - g) / delta + 4.0;
    c.h = wrap_degrees(h * 60.0);
    return c;
}

HsvColor correct_hue(const HsvColor& c, const PipelineConfig& cfg) {
    HsvColor out = c;
    if (in_arc(c.h, cfg.orange_arc_start, cfg.orange_arc_end) && c.v < cfg.hue_correct_value_orange) {
        const double yellow_center = (cfg.hue_yellow_start + cfg.hue_green_start) * 0.5;
        out.h = move_toward(c.h, yellow_center, cfg.hue_correct_strength * (cfg.hue_correct_value_orange - c.v));
    } else if (in_arc(c.h, cfg.hue_yellow_start, cfg.hue_green_start) && c.v < cfg.hue_correct_value_yellow) {
        const double green_center = (cfg.hue_green_start + cfg.hue_blue_start) * 0.5;
        out.h = move_toward(c.h, green_center, cfg.hue_correct_strength * (cfg.hue_correct_value_yellow - c.v));
    }
    return out;
}

Classified classify_color(const HsvColor& c, const PipelineConfig& cfg) {
    Classified result;
    result.brightness = c.v;
    if (c.s <= cfg.neutral_saturation_max || c.v <= cfg.neutral_value_max) {
        result.color_class = {ColorGroup::Neutral, Fringe::Center};
        return result;
    }

    ColorGroup group;
    double arc_start, arc_len;
    if (in_arc(c.h, cfg.hue_yellow_start, cfg.hue_green_start)) {
        group = ColorGroup::Yellow;
        arc_start = cfg.hue_yellow_start;
        arc_len = cfg.hue_green_start - cfg.hue_yellow_start;
    } else if (in_arc(c.h, cfg.hue_green_start, cfg.hue_blue_start)) {
        group = ColorGroup::Green;
        arc_start = cfg.hue_green_start;
        arc_len = cfg.hue_blue_start - cfg.hue_green_start;
    } else if (in_arc(c.h, cfg.hue_blue_start, cfg.hue_blue_end)) {
        group = ColorGroup::Blue;
        arc_start = cfg.hue_blue_start;
        arc_len = cfg.hue_blue_end - cfg.hue_blue_start;
    } else {
        // Red's own arc wraps through 0; [blue_end, red_start) joins it as
        // the nearest wheel neighbor.
        group = ColorGroup::Red;
        arc_start = cfg.hue_red_start;
        arc_len = cfg.hue_yellow_start + 360.0 - cfg.hue_red_start;
    }

    Fringe fringe = Fringe::Center;
    if (cfg.fringe_enabled) {
        double offset = c.h - arc_start;
        if (group == ColorGroup::Red) {
            if (c.h >= cfg.hue_red_start)
                offset = c.h - cfg.hue_red_start;
            else if (c.h < cfg.hue_yellow_start)
                offset = c.h + 360.0 - cfg.hue_red_start;
            else
                offset = -1.0;  // purples glued onto red sit below its arc
        }
        const double third = arc_len / 3.0;
        fringe = offset < third ? Fringe::Lower : (offset < 2.0 * third ? Fringe::Center : Fringe::Upper);
    }
    result.color_class = {group, fringe};
    return result;
}

QuantizedColorField quantize_field(const ColorImage& img, const PipelineConfig& cfg) {
    const ColorImage blurred = blur_colors(img, cfg.color_blur_radius);
    QuantizedColorField field(img.width, img.height);
    for (int y = 0; y < img.height; ++y) {
        for (int x = 0; x < img.width; ++x) {
            const float* p = blurred.at(x, y);
            const HsvColor hsv = rgb_to_hsv(p[0], p[1], p[2]);
            const Classified cl = classify_color(correct_hue(hsv, cfg), cfg);
            const size_t i = static_cast<size_t>(y) * img.width + x;
            field.classes[i] = cl.color_class;
            field.brightness[i] = static_cast<float>(cl.brightness);
        }
    }
    return field;
}

void save_class_debug_png(const QuantizedColorField& field, const std::string& path) {
    static const std::vector<std::array<uint8_t, 3>> palette = {
        {0, 64, 224},    // Blue
        {0, 160, 48},    // Green
        {240, 208, 0},   // Yellow
        {208, 32, 32},   // Red
        {128, 128, 128}  // Neutral
    };
    std::vector<uint8_t> indices(field.classes.size());
    for (size_t i = 0; i < field.classes.size(); ++i)
        indices[i] = static_cast<uint8_t>(field.classes[i].group);
    save_indexed_png(field.width, field.height, indices, palette, path);
}

}  // namespace tactile
