#include "tactile/config.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "tactile/errors.hpp"

namespace tactile {

namespace {

std::string trim(const std::string& s) {
    size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

double parse_double(const std::string& key, const std::string& value) {
    try {
        size_t used = 0;
        double d = std::stod(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
        return d;
    } catch (const std::exception&) {
        throw ValidationError("config key '" + key + "': expected a number, got '" + value + "'");
    }
}

int parse_int(const std::string& key, const std::string& value) {
    try {
        size_t used = 0;
        int i = std::stoi(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
        return i;
    } catch (const std::exception&) {
        throw ValidationError("config key '" + key + "': expected an integer, got '" + value + "'");
    }
}

bool parse_bool(const std::string& key, const std::string& value) {
    if (value == "1" || value == "true" || value == "yes" || value == "on") return true;
    if (value == "0" || value == "false" || value == "no" || value == "off") return false;
    throw ValidationError("config key '" + key + "': expected a boolean, got '" + value + "'");
}

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

using Setter = std::function<void(PipelineConfig&, const std::string&, const std::string&)>;

const std::map<std::string, Setter>& setters() {
    auto dbl = [](double PipelineConfig::* field) {
        return [field](PipelineConfig& c, const std::string& k, const std::string& v) { c.*field = parse_double(k, v); };
    };
    auto itg = [](int PipelineConfig::* field) {
        return [field](PipelineConfig& c, const std::string& k, const std::string& v) { c.*field = parse_int(k, v); };
    };
    auto bol = [](bool PipelineConfig::* field) {
        return [field](PipelineConfig& c, const std::string& k, const std::string& v) { c.*field = parse_bool(k, v); };
    };
    static const std::map<std::string, Setter> table = {
        {"edge_threshold", dbl(&PipelineConfig::edge_threshold)},
        {"edge_saturation", dbl(&PipelineConfig::edge_saturation)},
        {"line_thickness_min", dbl(&PipelineConfig::line_thickness_min)},
        {"line_thickness_max", dbl(&PipelineConfig::line_thickness_max)},
        {"gap_width", dbl(&PipelineConfig::gap_width)},
        {"color_blur_radius", dbl(&PipelineConfig::color_blur_radius)},
        {"neutral_saturation_max", dbl(&PipelineConfig::neutral_saturation_max)},
        {"neutral_value_max", dbl(&PipelineConfig::neutral_value_max)},
        {"hue_red_start", dbl(&PipelineConfig::hue_red_start)},
        {"hue_yellow_start", dbl(&PipelineConfig::hue_yellow_start)},
        {"hue_green_start", dbl(&PipelineConfig::hue_green_start)},
        {"hue_blue_start", dbl(&PipelineConfig::hue_blue_start)},
        {"hue_blue_end", dbl(&PipelineConfig::hue_blue_end)},
        {"hue_correct_value_yellow", dbl(&PipelineConfig::hue_correct_value_yellow)},
        {"hue_correct_value_orange", dbl(&PipelineConfig::hue_correct_value_orange)},
        {"hue_correct_strength", dbl(&PipelineConfig::hue_correct_strength)},
        {"orange_arc_start", dbl(&PipelineConfig::orange_arc_start)},
        {"orange_arc_end", dbl(&PipelineConfig::orange_arc_end)},
        {"fringe_enabled", bol(&PipelineConfig::fringe_enabled)},
        {"density_blur_radius", dbl(&PipelineConfig::density_blur_radius)},
        {"density_floor", dbl(&PipelineConfig::density_floor)},
        {"texture_period_min", dbl(&PipelineConfig::texture_period_min)},
        {"texture_period_max", dbl(&PipelineConfig::texture_period_max)},
        {"texture_period_levels", itg(&PipelineConfig::texture_period_levels)},
        {"rhombus_aspect", dbl(&PipelineConfig::rhombus_aspect)},
        {"fill_ceiling", dbl(&PipelineConfig::fill_ceiling)},
        {"frame_thickness", itg(&PipelineConfig::frame_thickness)},
        {"frame_gap", itg(&PipelineConfig::frame_gap)},
        {"frame_texture_period", dbl(&PipelineConfig::frame_texture_period)},
        {"inter_frame_gap", itg(&PipelineConfig::inter_frame_gap)},
        {"thumbnail_scale", dbl(&PipelineConfig::thumbnail_scale)},
        {"page_margin", itg(&PipelineConfig::page_margin)},
        {"page_width_in", dbl(&PipelineConfig::page_width_in)},
        {"page_height_in", dbl(&PipelineConfig::page_height_in)},
        {"dpi", itg(&PipelineConfig::dpi)},
    };
    return table;
}

void require(bool ok, const std::string& message) {
    if (!ok) throw ValidationError("config: " + message);
}

}  // namespace

PipelineConfig parse_config(const std::string& text) {
    PipelineConfig cfg;
    bool inter_frame_gap_set = false;
    bool frame_thickness_set = false;

    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;

        size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw ValidationError("config line " + std::to_string(line_no) + ": expected key=value, got '" + line + "'");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));

        auto it = setters().find(key);
        if (it == setters().end())
            throw ValidationError("config line " + std::to_string(line_no) + ": unknown key '" + key + "'");
        it->second(cfg, key, value);
        if (key == "inter_frame_gap") inter_frame_gap_set = true;
        if (key == "frame_thickness") frame_thickness_set = true;
    }

    if (!inter_frame_gap_set && frame_thickness_set) cfg.inter_frame_gap = 2 * cfg.frame_thickness;

    validate_config(cfg);
    return cfg;
}

PipelineConfig load_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

void validate_config(const PipelineConfig& c) {
    require(c.edge_threshold > 0.0 && c.edge_threshold < 1.0, "'edge_threshold' must lie in (0,1)");
    require(c.edge_saturation > c.edge_threshold && c.edge_saturation <= 1.0,
            "'edge_saturation' must lie in (edge_threshold, 1]");
    require(c.line_thickness_min > 0.0, "'line_thickness_min' must be positive");
    require(c.line_thickness_min <= c.line_thickness_max,
            "'line_thickness_min' must not exceed 'line_thickness_max'");
    require(c.gap_width > 0.0, "'gap_width' must be positive");
    require(c.color_blur_radius > 0.0, "'color_blur_radius' must be positive");
    require(c.neutral_saturation_max >= 0.0 && c.neutral_saturation_max <= 1.0,
            "'neutral_saturation_max' must lie in [0,1]");
    require(c.neutral_value_max >= 0.0 && c.neutral_value_max <= 1.0, "'neutral_value_max' must lie in [0,1]");
    require(c.hue_yellow_start >= 0.0 && c.hue_yellow_start < c.hue_green_start &&
                c.hue_green_start < c.hue_blue_start && c.hue_blue_start < c.hue_blue_end &&
                c.hue_blue_end < c.hue_red_start && c.hue_red_start < 360.0,
            "hue arc boundaries must satisfy 0 <= 'hue_yellow_start' < 'hue_green_start' < "
            "'hue_blue_start' < 'hue_blue_end' < 'hue_red_start' < 360");
    require(c.hue_correct_value_yellow >= 0.0 && c.hue_correct_value_yellow <= 1.0,
            "'hue_correct_value_yellow' must lie in [0,1]");
    require(c.hue_correct_value_orange >= 0.0 && c.hue_correct_value_orange <= 1.0,
            "'hue_correct_value_orange' must lie in [0,1]");
    require(c.hue_correct_strength >= 0.0, "'hue_correct_strength' must be nonnegative");
    require(c.orange_arc_start >= 0.0 && c.orange_arc_start < c.orange_arc_end && c.orange_arc_end <= 360.0,
            "'orange_arc_start' must precede 'orange_arc_end' within [0,360]");
    require(c.density_blur_radius > 0.0, "'density_blur_radius' must be positive");
    require(c.density_floor > 0.0 && c.density_floor <= 1.0, "'density_floor' must lie in (0,1]");
    require(c.texture_period_min > 0.0, "'texture_period_min' must be positive");
    require(c.texture_period_min < c.texture_period_max,
            "'texture_period_min' must be less than 'texture_period_max'");
    require(c.texture_period_levels >= 2, "'texture_period_levels' must be at least 2");
    require(c.rhombus_aspect >= 1.0, "'rhombus_aspect' must be at least 1");
    // The stamper probes only the four lattice cells around a pixel, which
    // bounds how far a feature may reach; 0.66 keeps every feature inside.
    require(c.fill_ceiling > 0.0 && c.fill_ceiling <= 0.66, "'fill_ceiling' must lie in (0, 0.66]");
    require(c.frame_thickness > 0, "'frame_thickness' must be positive");
    require(c.frame_gap > 0, "'frame_gap' must be positive");
    require(c.frame_texture_period > 0.0, "'frame_texture_period' must be positive");
    require(c.frame_texture_period < c.texture_period_min,
            "'frame_texture_period' must be finer than 'texture_period_min'");
    // at least one row of whole dots has to fit inside the ring band
    require(c.frame_thickness >= 2.0 * c.frame_texture_period,
            "'frame_thickness' must be at least twice 'frame_texture_period'");
    require(c.inter_frame_gap > 0, "'inter_frame_gap' must be positive");
    require(c.thumbnail_scale > 0.0 && c.thumbnail_scale < 1.0, "'thumbnail_scale' must lie in (0,1)");
    require(c.page_margin >= 0, "'page_margin' must be nonnegative");
    require(c.page_width_in > 0.0 && c.page_height_in > 0.0, "page dimensions must be positive");
    require(c.dpi > 0, "'dpi' must be positive");
}

std::vector<std::pair<std::string, std::string>> config_entries(const PipelineConfig& c) {
    std::vector<std::pair<std::string, std::string>> out;
    auto add = [&out](const char* k, const std::string& v) { out.emplace_back(k, v); };
    add("edge_threshold", fmt_double(c.edge_threshold));
    add("edge_saturation", fmt_double(c.edge_saturation));
    add("line_thickness_min", fmt_double(c.line_thickness_min));
    add("line_thickness_max", fmt_double(c.line_thickness_max));
    add("gap_width", fmt_double(c.gap_width));
    add("color_blur_radius", fmt_double(c.color_blur_radius));
    add("neutral_saturation_max", fmt_double(c.neutral_saturation_max));
    add("neutral_value_max", fmt_double(c.neutral_value_max));
    add("hue_red_start", fmt_double(c.hue_red_start));
    add("hue_yellow_start", fmt_double(c.hue_yellow_start));
    add("hue_green_start", fmt_double(c.hue_green_start));
    add("hue_blue_start", fmt_double(c.hue_blue_start));
    add("hue_blue_end", fmt_double(c.hue_blue_end));
    add("hue_correct_value_yellow", fmt_double(c.hue_correct_value_yellow));
    add("hue_correct_value_orange", fmt_double(c.hue_correct_value_orange));
    add("hue_correct_strength", fmt_double(c.hue_correct_strength));
    add("orange_arc_start", fmt_double(c.orange_arc_start));
    add("orange_arc_end", fmt_double(c.orange_arc_end));
    add("fringe_enabled", c.fringe_enabled ? "true" : "false");
    add("density_blur_radius", fmt_double(c.density_blur_radius));
    add("density_floor", fmt_double(c.density_floor));
    add("texture_period_min", fmt_double(c.texture_period_min));
    add("texture_period_max", fmt_double(c.texture_period_max));
    add("texture_period_levels", std::to_string(c.texture_period_levels));
    add("rhombus_aspect", fmt_double(c.rhombus_aspect));
    add("fill_ceiling", fmt_double(c.fill_ceiling));
    add("frame_thickness", std::to_string(c.frame_thickness));
    add("frame_gap", std::to_string(c.frame_gap));
    add("frame_texture_period", fmt_double(c.frame_texture_period));
    add("inter_frame_gap", std::to_string(c.inter_frame_gap));
    add("thumbnail_scale", fmt_double(c.thumbnail_scale));
    add("page_margin", std::to_string(c.page_margin));
    add("page_width_in", fmt_double(c.page_width_in));
    add("page_height_in", fmt_double(c.page_height_in));
    add("dpi", std::to_string(c.dpi));
    return out;
}

}  // namespace tactile
