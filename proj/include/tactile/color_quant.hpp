#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tactile/config.hpp"
#include "tactile/raster.hpp"

namespace tactile {

enum class ColorGroup : uint8_t { Blue, Green, Yellow, Red, Neutral };

// Position of a hue inside its class arc; Lower/Upper mark transitional
// colors bordering the adjacent class on the wheel.
enum class Fringe : uint8_t { Lower, Center, Upper };

struct ColorClass {
    ColorGroup group = ColorGroup::Neutral;
    Fringe fringe = Fringe::Center;

    bool operator==(const ColorClass&) const = default;
};

struct HsvColor {
    double h = 0.0;  // degrees in [0,360); 0 for achromatic colors
    double s = 0.0;
    double v = 0.0;
};

struct Classified {
    ColorClass color_class;
    double brightness = 0.0;  // the HSV value component
};

// Per-pixel quantization result; brightness is the post-blur HSV value.
struct QuantizedColorField {
    int width = 0;
    int height = 0;
    std::vector<ColorClass> classes;
    std::vector<float> brightness;

    QuantizedColorField() = default;
    QuantizedColorField(int w, int h)
        : width(w), height(h), classes(static_cast<size_t>(w) * h), brightness(static_cast<size_t>(w) * h, 0.0f) {}

    ColorClass class_at(int x, int y) const { return classes[static_cast<size_t>(y) * width + x]; }
    float brightness_at(int x, int y) const { return brightness[static_cast<size_t>(y) * width + x]; }
};

// Gaussian pre-blur that stands in for the averaging quality of vision.
ColorImage blur_colors(const ColorImage& img, double radius);

// Standard hexcone conversion; achromatic colors get h = 0, s = 0.
HsvColor rgb_to_hsv(double r, double g, double b);

// Dark yellows drift toward green and dark oranges toward yellow, linearly
// in the value deficit and clamped at the target arc center; s and v pass
// through untouched.
HsvColor correct_hue(const HsvColor& c, const PipelineConfig& cfg);

// Neutral when s or v sits at or below its threshold, otherwise the class
// whose hue arc contains h. Expects an already hue-corrected color.
Classified classify_color(const HsvColor& c, const PipelineConfig& cfg);

// blur -> convert -> correct -> classify, pixelwise.
QuantizedColorField quantize_field(const ColorImage& img, const PipelineConfig& cfg);

// Debug dump: one fixed palette entry per class.
void save_class_debug_png(const QuantizedColorField& field, const std::string& path);

}  // namespace tactile
