#pragma once

#include <string>
#include <utility>
#include <vector>

namespace tactile {

// All numeric knobs of the conversion pipeline. Values are pixels unless
// noted. Defaults hold for any key missing from the config file.
struct PipelineConfig {
    // Edge detection and line rendering.
    double edge_threshold = 0.15;     // s0: edges at or below this strength are dropped
    double edge_saturation = 0.5;     // s1: strengths at or above this render at full thickness
    double line_thickness_min = 2.0;  // thinnest rendered line
    double line_thickness_max = 6.0;  // thickest rendered line
    double gap_width = 3.0;           // texture-free margin around lines

    // Color quantization.
    double color_blur_radius = 4.0;  // Gaussian sigma for the color pre-blur
    double neutral_saturation_max = 0.2;
    double neutral_value_max = 0.15;
    double hue_red_start = 330.0;  // degrees; arcs run red -> yellow -> green -> blue
    double hue_yellow_start = 30.0;
    double hue_green_start = 90.0;
    double hue_blue_start = 180.0;
    double hue_blue_end = 270.0;            // [blue_end, red_start) falls back to the red class
    double hue_correct_value_yellow = 0.5;  // v_y: below this, yellow hues drift toward green
    double hue_correct_value_orange = 0.5;  // v_o: below this, orange hues drift toward yellow
    double hue_correct_strength = 150.0;    // degrees of hue shift per unit of value deficit
    double orange_arc_start = 10.0;
    double orange_arc_end = 40.0;
    bool fringe_enabled = false;  // transitional-hue subclasses (off by default)

    // Texture synthesis.
    double density_blur_radius = 16.0;  // Gaussian sigma for the edge-density field
    double density_floor = 0.08;        // d_min: empty regions keep this much density
    double texture_period_min = 6.0;    // feature spacing at density 1
    double texture_period_max = 18.0;   // feature spacing at density 0
    int texture_period_levels = 4;      // discrete period steps between min and max
    double rhombus_aspect = 3.0;        // long/short diagonal ratio of rhombus features
    double fill_ceiling = 0.6;          // feature area fraction of a lattice cell at boldness 1

    // Page layout.
    int frame_thickness = 12;
    int frame_gap = 8;                  // empty band between frame and content
    double frame_texture_period = 4.0;  // must stay below texture_period_min
    int inter_frame_gap = 24;           // defaults to 2 * frame_thickness when unset
    double thumbnail_scale = 1.0 / 3.0;
    int page_margin = 16;
    double page_width_in = 8.5;  // inches
    double page_height_in = 11.0;
    int dpi = 200;
};

// Parses a flat key=value config ('#' starts a comment). Unknown keys and
// invariant violations raise ValidationError naming the offending key.
PipelineConfig parse_config(const std::string& text);

// parse_config over the contents of a file.
PipelineConfig load_config(const std::string& path);

// Re-checks every config invariant; raises ValidationError on the first violation.
void validate_config(const PipelineConfig& cfg);

// Key/value snapshot in config-file syntax, e.g. for the run manifest.
std::vector<std::pair<std::string, std::string>> config_entries(const PipelineConfig& cfg);

}  // namespace tactile
