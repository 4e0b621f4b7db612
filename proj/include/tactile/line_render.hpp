#pragma once

#include "tactile/config.hpp"
#include "tactile/raster.hpp"

namespace tactile {

// Piecewise-linear thickness law: 0 at or below edge_threshold, then a jump
// to line_thickness_min ramping linearly to line_thickness_max at
// edge_saturation, clamped there.
double thickness_for_strength(double s, const PipelineConfig& cfg);

// Stamps a filled disk of diameter thickness_for_strength(s) onto every edge
// pixel whose strength exceeds the threshold; the layer is the union.
LineLayer render_lines(const EdgeStrengthMap& edges, const PipelineConfig& cfg);

// Marks every pixel within Euclidean distance gap_width of inked line pixels
// (exact distance transform, so the mask is a true disk dilation).
GapMask compute_gap_mask(const LineLayer& lines, double gap_width);

}  // namespace tactile
