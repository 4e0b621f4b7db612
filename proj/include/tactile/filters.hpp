#pragma once

#include <vector>

#include "tactile/raster.hpp"

namespace tactile {

// Half-kernel Gaussian taps exp(-k^2 / (2 sigma^2)) for k = 0..floor(3 sigma),
// unnormalized; callers divide by the windowed sum.
std::vector<double> gaussian_kernel(double sigma);

// Gaussian blur with the kernel truncated at 3 sigma and renormalized;
// borders handled by clamp-to-edge. Constant images pass through unchanged
// (bit-exact), and the result is invariant under 90-degree rotation of the
// input: taps are accumulated in mirror-symmetric pairs and the two
// separable pass orders are averaged.
GrayImage gaussian_blur(const GrayImage& src, double sigma);

// Per-channel gaussian_blur.
ColorImage gaussian_blur(const ColorImage& src, double sigma);

// Exact squared Euclidean distance from every pixel to the nearest set pixel
// (row-major, matching src). Pixels with no set pixel anywhere get a value
// larger than any squared image distance.
std::vector<double> squared_distance_transform(const BinaryImage& src);

}  // namespace tactile
