#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "tactile/raster.hpp"

namespace tactile {

// Loads an 8-bit PNG (RGB, RGBA, palette or gray; alpha composited onto
// white) or a binary PPM (P6, maxval 255). Channels come out in [0,1].
// Unsupported files raise IoError naming the offending property.
ColorImage load_color_image(const std::string& path);

// Writes a binary PGM (P5) at 8 or 16 bits; values quantized by rounding.
void save_gray_image(const GrayImage& img, const std::string& path, int bit_depth);

// Reads a 16-bit grayscale PGM or PNG; samples map to value/65535.
GrayImage load_gray_image_16(const std::string& path);

// Reads an 8- or 16-bit binary PGM (P5); samples map to value/maxval.
GrayImage load_gray_pgm(const std::string& path);

// Writes set pixels as black ink on white: 1-bit grayscale PNG. A positive
// dpi is recorded in the PNG resolution metadata.
void save_binary_png(const BinaryImage& img, const std::string& path, int dpi = 0);

// Same raster as an 8-bit P5 PGM (ink = 0, ground = 255).
void save_binary_pgm(const BinaryImage& img, const std::string& path);

// Reads a binary raster back from either format above (ink = below mid-gray).
BinaryImage load_binary_image(const std::string& path);

// Writes an indexed-color PNG from per-pixel palette indices.
void save_indexed_png(int width, int height, const std::vector<uint8_t>& indices,
                      const std::vector<std::array<uint8_t, 3>>& palette, const std::string& path);

}  // namespace tactile
