#pragma once

#include "tactile/config.hpp"
#include "tactile/raster.hpp"

namespace tactile {

struct FrameSpec {
    int thickness = 12;           // width of the textured ring
    int gap = 8;                  // empty band between ring and content
    double texture_period = 4.0;  // dot spacing, finer than any content texture
};

struct Rect {
    int x = 0, y = 0, w = 0, h = 0;
};

struct TactilePage {
    BinaryImage ink;
    int dpi = 0;
};

// Page raster plus where everything landed, for callers that need to address
// regions (tests, future labeling).
struct ComposedPage {
    TactilePage page;
    Rect main_frame;     // outer bounds of the framed main image
    Rect main_content;   // the main image itself
    Rect thumb_frame;    // outer bounds of the framed thumbnail
    Rect thumb_content;  // the thumbnail itself
};

// ink = lines OR textures; dimensions must match.
BinaryImage compose_tactile(const LineLayer& lines, const TextureLayer& textures);

// A ring of fine near-isotropic dot texture around an empty gap band around
// an empty content area; outer size = content + 2 * (thickness + gap).
BinaryImage render_frame(int content_w, int content_h, const FrameSpec& spec);

// Downscale by OR-pooling: a thumbnail pixel is inked iff any source pixel
// in its footprint is inked, so thin lines never vanish.
LineLayer make_thumbnail(const LineLayer& lines, double scale);

// Framed main image on top, framed line-only thumbnail below, on a page of
// the configured physical size. Raises ValidationError when the content does
// not fit, reporting required vs available pixels.
ComposedPage compose_page(const BinaryImage& main, const BinaryImage& thumb, const PipelineConfig& cfg);

}  // namespace tactile
