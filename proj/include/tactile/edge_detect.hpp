#pragma once

#include <string>

#include "tactile/config.hpp"
#include "tactile/raster.hpp"

namespace tactile {

// Strength-valued edge map: Gaussian pre-smooth (sigma = color_blur_radius/2),
// per-channel central differences, channel-max gradient magnitude normalized
// so the image-wide maximum maps to 1 (flat images map to all-zero), thinned
// by non-maximum suppression along the gradient. Survivor strengths are
// snapped to the 16-bit export grid so an exported-then-reimported map feeds
// the rest of the pipeline with identical values.
EdgeStrengthMap detect_edges(const ColorImage& img, const PipelineConfig& cfg);

// mask(p) = strength(p) > threshold (strict, so threshold 1 encodes "no edges").
BinaryEdgeMap threshold_edges(const EdgeStrengthMap& edges, double threshold);

// Reads a 16-bit gray PGM/PNG as an edge map; values map to value/65535 with
// no re-thinning so hand edits pass through verbatim. Dimensions must match
// the color image being converted.
EdgeStrengthMap import_edges(const std::string& path, int expected_width, int expected_height);

}  // namespace tactile
