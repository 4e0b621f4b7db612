#include "tactile/texture_synth.hpp"

#include <cmath>

#include "tactile/errors.hpp"
#include "tactile/filters.hpp"

namespace tactile {

namespace {

constexpr double kPi = 3.14159265358979323846;

double class_angle(ColorGroup g) {
    switch (g) {
        case ColorGroup::Blue: return 0.0;
        case ColorGroup::Green: return 45.0;
        case ColorGroup::Yellow: return 90.0;
        case ColorGroup::Red: return 135.0;
        default: throw ValidationError("class_orientation: Neutral has no texture orientation");
    }
}

// Wheel neighbors in hue order; Upper leans toward the next class, Lower
// toward the previous one.
ColorGroup wheel_next(ColorGroup g) {
    switch (g) {
        case ColorGroup::Red: return ColorGroup::Yellow;
        case ColorGroup::Yellow: return ColorGroup::Green;
        case ColorGroup::Green: return ColorGroup::Blue;
        default: return ColorGroup::Red;  // Blue
    }
}

ColorGroup wheel_prev(ColorGroup g) {
    switch (g) {
        case ColorGroup::Red: return ColorGroup::Blue;
        case ColorGroup::Yellow: return ColorGroup::Red;
        case ColorGroup::Green: return ColorGroup::Yellow;
        default: return ColorGroup::Green;  // Blue
    }
}

struct LatticeFrame {
    double cos_lat, sin_lat;    // rotation into lattice coordinates
    double cos_tilt, sin_tilt;  // extra rotation from rows to the feature axis
};

LatticeFrame make_frame(const TextureOrientation& o) {
    const double lat = o.lattice_deg * kPi / 180.0;
    const double tilt = (o.feature_deg - o.lattice_deg) * kPi / 180.0;
    return {std::cos(lat), std::sin(lat), std::cos(tilt), std::sin(tilt)};
}

}  // namespace

DensityField compute_density(const BinaryEdgeMap& edges, const PipelineConfig& cfg) {
    GrayImage ones(edges.width, edges.height);
    for (size_t i = 0; i < ones.values.size(); ++i) ones.values[i] = edges.mask[i] ? 1.0f : 0.0f;
    DensityField density = gaussian_blur(ones, cfg.density_blur_radius);
    const float floor = static_cast<float>(cfg.density_floor);
    for (float& d : density.values) d = d < floor ? floor : (d > 1.0f ? 1.0f : d);
    return density;
}

TextureOrientation class_orientation(const ColorClass& cls) {
    const double lattice = class_angle(cls.group);
    double feature = lattice;
    if (cls.fringe == Fringe::Upper)
        feature = class_angle(wheel_next(cls.group));
    else if (cls.fringe == Fringe::Lower)
        feature = class_angle(wheel_prev(cls.group));
    return {lattice, feature};
}

double boldness_for_brightness(double v) { return 1.0 - v; }

double period_for_density(double d, const PipelineConfig& cfg) {
    return cfg.texture_period_max + d * (cfg.texture_period_min - cfg.texture_period_max);
}

TextureLayer stamp_texture(const QuantizedColorField& field, const DensityField& density, const GapMask& gap,
                           const PipelineConfig& cfg) {
    const int w = field.width, h = field.height;
    if (density.width != w || density.height != h || gap.width != w || gap.height != h)
        throw ValidationError("stamp_texture: raster dimensions do not match");

    // Orientation frames for the 4 saturated groups x 3 fringes.
    LatticeFrame frames[4][3];
    for (int g = 0; g < 4; ++g)
        for (int f = 0; f < 3; ++f)
            frames[g][f] = make_frame(class_orientation({static_cast<ColorGroup>(g), static_cast<Fringe>(f)}));

    // Continuous periods shear the lattice, so spacing snaps to a few fixed
    // levels and stays phase-coherent inside each density plateau.
    const int levels = cfg.texture_period_levels;
    const double period_span = cfg.texture_period_max - cfg.texture_period_min;
    auto quantized_period = [&](double t) {
        const double u = (t - cfg.texture_period_min) / period_span * (levels - 1);
        const long k = std::lround(u);
        return cfg.texture_period_min + static_cast<double>(k) * period_span / (levels - 1);
    };

    TextureLayer out(w, h);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            const size_t i = static_cast<size_t>(y) * w + x;
            if (gap.mask[i]) continue;
            const double boldness = boldness_for_brightness(field.brightness[i]);
            if (boldness <= 0.0) continue;

            const double period = quantized_period(period_for_density(density.values[i], cfg));
            const double area = boldness * cfg.fill_ceiling * period * period;
            const ColorClass cls = field.classes[i];

            bool ink = false;
            if (cls.group == ColorGroup::Neutral) {
                ink = dot_lattice_ink(x, y, period, area);
            } else {
                const LatticeFrame& fr = frames[static_cast<int>(cls.group)][static_cast<int>(cls.fringe)];
                // Rhombus half-diagonals: 2*A*B = area with A = aspect * B.
                const double long_half = std::sqrt(area * cfg.rhombus_aspect * 0.5);
                const double u = (x * fr.cos_lat + y * fr.sin_lat) / period;
                const double v = (-x * fr.sin_lat + y * fr.cos_lat) / period;
                const long i0 = static_cast<long>(std::floor(u));
                const long j0 = static_cast<long>(std::floor(v));
                for (long ci = i0; ci <= i0 + 1 && !ink; ++ci) {
                    for (long cj = j0; cj <= j0 + 1 && !ink; ++cj) {
                        const double du = (u - ci) * period;
                        const double dv = (v - cj) * period;
                        const double ru = du * fr.cos_tilt + dv * fr.sin_tilt;
                        const double rv = -du * fr.sin_tilt + dv * fr.cos_tilt;
                        ink = std::fabs(ru) + cfg.rhombus_aspect * std::fabs(rv) <= long_half;
                    }
                }
            }
            out.mask[i] = ink;
        }
    }
    return out;
}

bool dot_lattice_ink(double x, double y, double period, double area) {
    // Dot rows with alternate rows offset half a cell: no strong axis for
    // the directionality statistic to latch onto.
    const double r_sq = area / kPi;
    const double u = x / period, v = y / period;
    const long j0 = static_cast<long>(std::floor(v));
    for (long cj = j0; cj <= j0 + 1; ++cj) {
        const double off = (((cj % 2) + 2) % 2) ? 0.5 : 0.0;
        const double uu = u - off;
        const long i0 = static_cast<long>(std::floor(uu));
        for (long ci = i0; ci <= i0 + 1; ++ci) {
            const double du = (uu - ci) * period;
            const double dv = (v - cj) * period;
            if (du * du + dv * dv <= r_sq) return true;
        }
    }
    return false;
}

}  // namespace tactile
