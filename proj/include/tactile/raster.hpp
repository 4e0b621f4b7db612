#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace tactile {

// Row-major RGB raster, channels in [0,1].
struct ColorImage {
    int width = 0;
    int height = 0;
    std::vector<float> pixels;  // r,g,b interleaved

    ColorImage() = default;
    ColorImage(int w, int h) : width(w), height(h), pixels(static_cast<size_t>(w) * h * 3, 0.0f) {}

    float* at(int x, int y) { return pixels.data() + (static_cast<size_t>(y) * width + x) * 3; }
    const float* at(int x, int y) const { return pixels.data() + (static_cast<size_t>(y) * width + x) * 3; }
    bool empty() const { return width <= 0 || height <= 0; }
};

// Row-major single-channel raster, values in [0,1].
struct GrayImage {
    int width = 0;
    int height = 0;
    std::vector<float> values;

    GrayImage() = default;
    GrayImage(int w, int h, float fill = 0.0f) : width(w), height(h), values(static_cast<size_t>(w) * h, fill) {}

    float& at(int x, int y) { return values[static_cast<size_t>(y) * width + x]; }
    float at(int x, int y) const { return values[static_cast<size_t>(y) * width + x]; }
    bool empty() const { return width <= 0 || height <= 0; }
};

// Row-major boolean raster (1 = set).
struct BinaryImage {
    int width = 0;
    int height = 0;
    std::vector<uint8_t> mask;

    BinaryImage() = default;
    BinaryImage(int w, int h, bool fill = false)
        : width(w), height(h), mask(static_cast<size_t>(w) * h, fill ? 1 : 0) {}

    uint8_t& at(int x, int y) { return mask[static_cast<size_t>(y) * width + x]; }
    bool at(int x, int y) const { return mask[static_cast<size_t>(y) * width + x] != 0; }
    bool empty() const { return width <= 0 || height <= 0; }

    size_t count() const {
        size_t n = 0;
        for (uint8_t m : mask) n += (m != 0);
        return n;
    }
};

// Role aliases for pipeline stages.
using EdgeStrengthMap = GrayImage;  // nonzero only on thinned edge loci
using DensityField = GrayImage;     // texture density in [d_min, 1]
using BinaryEdgeMap = BinaryImage;  // strength > edge_threshold
using LineLayer = BinaryImage;      // rendered line ink
using GapMask = BinaryImage;        // texture exclusion zone around lines
using TextureLayer = BinaryImage;   // rendered texture ink

}  // namespace tactile
