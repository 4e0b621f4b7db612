#pragma once

#include "tactile/color_quant.hpp"
#include "tactile/config.hpp"
#include "tactile/raster.hpp"

namespace tactile {

struct TextureOrientation {
    double lattice_deg;  // direction of the feature rows (primary class cue)
    double feature_deg;  // long axis of each rhombus (secondary fringe cue)
};

// Gaussian blur of the binary edge map, clamped below to density_floor so
// empty regions stay sparsely textured rather than blank.
DensityField compute_density(const BinaryEdgeMap& edges, const PipelineConfig& cfg);

// Row orientation per saturated class: Blue 0, Green 45, Yellow 90, Red 135
// degrees. Center-fringe features align with their rows; Lower/Upper fringe
// features tilt to the adjacent class's angle on the color wheel. Neutral
// has no orientation and raises ValidationError.
TextureOrientation class_orientation(const ColorClass& cls);

// 1 - v: darker colors get bolder features, white gets none.
double boldness_for_brightness(double v);

// Feature spacing, linear from texture_period_max at density 0 down to
// texture_period_min at density 1.
double period_for_density(double d, const PipelineConfig& cfg);

// Procedurally evaluates the texture lattice per pixel: rotated square
// lattices of rhombi for saturated classes, offset rows of dots for Neutral,
// feature area scaled by boldness, spacing by the density field, and nothing
// inked inside the gap mask.
TextureLayer stamp_texture(const QuantizedColorField& field, const DensityField& density, const GapMask& gap,
                           const PipelineConfig& cfg);

// Whether (x, y) falls inside a dot of the offset-row lattice with the given
// spacing and per-dot area (the Neutral texture primitive).
bool dot_lattice_ink(double x, double y, double period, double area);

}  // namespace tactile
