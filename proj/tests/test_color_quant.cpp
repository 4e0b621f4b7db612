#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "tactile/color_quant.hpp"
#include "tactile/config.hpp"
#include "test_support.hpp"

using namespace tactile;

namespace {

double hue_distance(double a, double b) { return testsupport::angle_diff_mod(a, b, 360.0); }

}  // namespace

TEST_SUITE("color_quant") {
    TEST_CASE("blur leaves constant images untouched") {
        const ColorImage img = testsupport::constant_image(20, 14, 0.2f, 0.5f, 0.8f);
        const ColorImage out = blur_colors(img, 4.0);
        CHECK(out.pixels == img.pixels);
    }

    TEST_CASE("blur flattens a 1-px checkerboard to mid gray") {
        const int n = 48;
        ColorImage img(n, n);
        for (int y = 0; y < n; ++y)
            for (int x = 0; x < n; ++x) {
                const float v = ((x + y) & 1) ? 1.0f : 0.0f;
                float* p = img.at(x, y);
                p[0] = p[1] = p[2] = v;
            }
        const double sigma = 2.0;
        const ColorImage out = blur_colors(img, sigma);
        const int margin = 3 * static_cast<int>(sigma) + 1;
        for (int y = margin; y < n - margin; ++y)
            for (int x = margin; x < n - margin; ++x)
                CHECK(std::fabs(out.at(x, y)[0] - 0.5f) < 0.05f);
    }

    TEST_CASE("single white pixel blurs to the kernel's central weight") {
        const int n = 31;
        ColorImage img(n, n);
        img.at(n / 2, n / 2)[0] = 1.0f;
        img.at(n / 2, n / 2)[1] = 1.0f;
        img.at(n / 2, n / 2)[2] = 1.0f;
        const double sigma = 2.0;
        const ColorImage out = blur_colors(img, sigma);

        const std::vector<double> taps = testsupport::oracle_gaussian_taps(sigma);
        double sum = taps[0];
        for (size_t i = 1; i < taps.size(); ++i) sum += 2.0 * taps[i];
        const double center_weight = (taps[0] / sum) * (taps[0] / sum);
        CHECK(out.at(n / 2, n / 2)[0] == doctest::Approx(center_weight).epsilon(1e-5));
    }

    TEST_CASE("blur matches the direct-convolution oracle") {
        std::mt19937 rng(21);
        std::uniform_real_distribution<float> dist(0.0f, 1.0f);
        ColorImage img(27, 18);
        for (float& v : img.pixels) v = dist(rng);
        const ColorImage fast = blur_colors(img, 3.0);
        const ColorImage slow = testsupport::oracle_blur_color(img, 3.0);
        for (size_t i = 0; i < fast.pixels.size(); ++i) CHECK(std::fabs(fast.pixels[i] - slow.pixels[i]) < 1e-6);
    }

    TEST_CASE("hexcone conversion hits the canonical values") {
        const HsvColor red = rgb_to_hsv(1.0, 0.0, 0.0);
        CHECK(red.h == 0.0);
        CHECK(red.s == 1.0);
        CHECK(red.v == 1.0);

        const HsvColor gray = rgb_to_hsv(0.5, 0.5, 0.5);
        CHECK(gray.h == 0.0);
        CHECK(gray.s == 0.0);
        CHECK(gray.v == 0.5);

        const HsvColor violet = rgb_to_hsv(0.5, 0.25, 0.75);
        CHECK(violet.h == doctest::Approx(270.0));
        CHECK(violet.s == doctest::Approx(2.0 / 3.0));
        CHECK(violet.v == doctest::Approx(0.75));
    }

    TEST_CASE("hue correction is identity at full value") {
        const PipelineConfig cfg;
        for (double h : {0.0, 15.0, 45.0, 60.0, 120.0, 250.0, 359.0}) {
            const HsvColor c{h, 1.0, 1.0};
            const HsvColor out = correct_hue(c, cfg);
            CHECK(out.h == h);
            CHECK(out.s == c.s);
            CHECK(out.v == c.v);
        }
    }

    TEST_CASE("dark yellow classifies as green downstream") {
        const PipelineConfig cfg;  // v_y = 0.5
        const HsvColor corrected = correct_hue({60.0, 1.0, 0.2}, cfg);
        CHECK(corrected.v == 0.2);
        CHECK(corrected.s == 1.0);
        const Classified cl = classify_color(corrected, cfg);
        CHECK(cl.color_class.group == ColorGroup::Green);
    }

    TEST_CASE("dark orange shifts into the yellow arc") {
        const PipelineConfig cfg;  // v_o = 0.5
        const HsvColor corrected = correct_hue({30.0, 1.0, 0.2}, cfg);
        CHECK(corrected.h >= cfg.hue_yellow_start);
        CHECK(corrected.h < cfg.hue_green_start);
        CHECK(classify_color(corrected, cfg).color_class.group == ColorGroup::Yellow);
    }

    TEST_CASE("correction moves hue only toward the target and keeps s, v") {
        const PipelineConfig cfg;
        std::mt19937 rng(37);
        std::uniform_real_distribution<double> hue_in_yellow(cfg.hue_yellow_start, cfg.hue_green_start);
        std::uniform_real_distribution<double> hue_in_orange(cfg.orange_arc_start, cfg.orange_arc_end);
        std::uniform_real_distribution<double> value(0.0, 1.0);
        const double green_center = (cfg.hue_green_start + cfg.hue_blue_start) * 0.5;
        const double yellow_center = (cfg.hue_yellow_start + cfg.hue_green_start) * 0.5;

        for (int i = 0; i < 500; ++i) {
            const HsvColor c{hue_in_yellow(rng), 0.7, value(rng)};
            const HsvColor out = correct_hue(c, cfg);
            CHECK(out.s == c.s);
            CHECK(out.v == c.v);
            // never farther from green than before
            CHECK(hue_distance(out.h, green_center) <= hue_distance(c.h, green_center) + 1e-12);
        }
        for (int i = 0; i < 500; ++i) {
            const HsvColor c{hue_in_orange(rng), 0.7, value(rng)};
            const HsvColor out = correct_hue(c, cfg);
            CHECK(hue_distance(out.h, yellow_center) <= hue_distance(c.h, yellow_center) + 1e-12);
        }
    }

    TEST_CASE("classification canonical cases") {
        const PipelineConfig cfg;
        const Classified blue = classify_color({240.0, 1.0, 1.0}, cfg);
        CHECK(blue.color_class.group == ColorGroup::Blue);
        CHECK(blue.brightness == 1.0);

        const Classified faint = classify_color({123.0, 0.03, 0.9}, cfg);
        CHECK(faint.color_class.group == ColorGroup::Neutral);
        CHECK(faint.brightness == 0.9);
        CHECK(faint.color_class.fringe == Fringe::Center);
    }

    TEST_CASE("neutral thresholds are inclusive") {
        const PipelineConfig cfg;  // s <= 0.2 or v <= 0.15 is neutral
        CHECK(classify_color({200.0, cfg.neutral_saturation_max, 0.9}, cfg).color_class.group ==
              ColorGroup::Neutral);
        CHECK(classify_color({200.0, cfg.neutral_saturation_max + 1e-6, 0.9}, cfg).color_class.group ==
              ColorGroup::Blue);
        CHECK(classify_color({200.0, 0.9, cfg.neutral_value_max}, cfg).color_class.group == ColorGroup::Neutral);
        CHECK(classify_color({200.0, 0.9, cfg.neutral_value_max + 1e-6}, cfg).color_class.group ==
              ColorGroup::Blue);
    }

    TEST_CASE("hue sweep visits the four classes once each in wheel order") {
        const PipelineConfig cfg;
        std::vector<ColorGroup> sequence;
        for (int deg = 0; deg < 360; ++deg) {
            const ColorGroup g = classify_color({static_cast<double>(deg), 1.0, 1.0}, cfg).color_class.group;
            CHECK(g != ColorGroup::Neutral);
            if (sequence.empty() || sequence.back() != g) sequence.push_back(g);
        }
        // collapse the cyclic wrap (red at both ends)
        REQUIRE(!sequence.empty());
        if (sequence.front() == sequence.back()) sequence.pop_back();
        REQUIRE(sequence.size() == 4);
        // rotate so red leads, then expect wheel order
        std::vector<ColorGroup> expect{ColorGroup::Red, ColorGroup::Yellow, ColorGroup::Green, ColorGroup::Blue};
        size_t start = 0;
        while (start < 4 && sequence[start] != ColorGroup::Red) ++start;
        REQUIRE(start < 4);
        for (size_t i = 0; i < 4; ++i) CHECK(sequence[(start + i) % 4] == expect[i]);
    }

    TEST_CASE("classification is total over a dense HSV grid") {
        const PipelineConfig cfg;
        for (int hi = 0; hi < 360; hi += 3)
            for (double s : {0.0, 0.1, 0.2, 0.5, 1.0})
                for (double v : {0.0, 0.1, 0.15, 0.5, 1.0}) {
                    const Classified cl = classify_color({static_cast<double>(hi), s, v}, cfg);
                    const int g = static_cast<int>(cl.color_class.group);
                    CHECK(g >= 0);
                    CHECK(g <= 4);
                    CHECK(cl.brightness == v);
                }
    }

    TEST_CASE("class is stable under value changes above the thresholds") {
        const PipelineConfig cfg;
        for (int hi = 0; hi < 360; hi += 7) {
            ColorGroup first = ColorGroup::Neutral;
            bool any = false;
            for (double v : {0.6, 0.75, 0.9, 1.0}) {  // all above v_y, v_o and neutral_value_max
                const HsvColor corrected = correct_hue({static_cast<double>(hi), 0.9, v}, cfg);
                const ColorGroup g = classify_color(corrected, cfg).color_class.group;
                if (!any) {
                    first = g;
                    any = true;
                } else {
                    CHECK(g == first);
                }
            }
        }
    }

    TEST_CASE("fringe splits each arc into thirds") {
        PipelineConfig cfg;
        cfg.fringe_enabled = true;
        // yellow arc [30, 90): thirds at 50 and 70
        CHECK(classify_color({35.0, 1.0, 1.0}, cfg).color_class.fringe == Fringe::Lower);
        CHECK(classify_color({60.0, 1.0, 1.0}, cfg).color_class.fringe == Fringe::Center);
        CHECK(classify_color({85.0, 1.0, 1.0}, cfg).color_class.fringe == Fringe::Upper);
        // red arc wraps [330, 30): thirds at 350 and 10
        CHECK(classify_color({340.0, 1.0, 1.0}, cfg).color_class.fringe == Fringe::Lower);
        CHECK(classify_color({355.0, 1.0, 1.0}, cfg).color_class.fringe == Fringe::Center);
        CHECK(classify_color({15.0, 1.0, 1.0}, cfg).color_class.fringe == Fringe::Upper);
        // purples fall below red's own arc
        const Classified purple = classify_color({290.0, 1.0, 1.0}, cfg);
        CHECK(purple.color_class.group == ColorGroup::Red);
        CHECK(purple.color_class.fringe == Fringe::Lower);
        // with the flag off everything is Center
        cfg.fringe_enabled = false;
        CHECK(classify_color({85.0, 1.0, 1.0}, cfg).color_class.fringe == Fringe::Center);
    }

    TEST_CASE("five bars quantize to five classes on a neutral ground") {
        const PipelineConfig cfg;
        std::vector<testsupport::Bar> bars;
        const ColorImage img = testsupport::five_bar_image(300, 100, &bars);
        const QuantizedColorField field = quantize_field(img, cfg);

        const ColorGroup expect[5] = {ColorGroup::Blue, ColorGroup::Green, ColorGroup::Yellow, ColorGroup::Red,
                                      ColorGroup::Neutral};
        for (int i = 0; i < 5; ++i) {
            const auto& b = bars[i];
            CHECK(field.class_at(b.x0 + b.w / 2, b.y0 + b.h / 2).group == expect[i]);
        }
        CHECK(field.class_at(2, 2).group == ColorGroup::Neutral);  // white ground
        CHECK(field.brightness_at(2, 2) >= 0.99f);  // corner sits within blur reach of a bar
    }

    TEST_CASE("all-white and all-black quantize to neutral extremes") {
        const PipelineConfig cfg;
        const QuantizedColorField white = quantize_field(testsupport::constant_image(10, 8, 1, 1, 1), cfg);
        for (size_t i = 0; i < white.classes.size(); ++i) {
            CHECK(white.classes[i].group == ColorGroup::Neutral);
            CHECK(white.brightness[i] == 1.0f);
        }
        const QuantizedColorField black = quantize_field(testsupport::constant_image(10, 8, 0, 0, 0), cfg);
        for (size_t i = 0; i < black.classes.size(); ++i) {
            CHECK(black.classes[i].group == ColorGroup::Neutral);
            CHECK(black.brightness[i] == 0.0f);
        }
    }

    TEST_CASE("field brightness equals the blurred value channel exactly") {
        const PipelineConfig cfg;
        std::mt19937 rng(61);
        std::uniform_real_distribution<float> dist(0.0f, 1.0f);
        ColorImage img(22, 15);
        for (float& v : img.pixels) v = dist(rng);

        const QuantizedColorField field = quantize_field(img, cfg);
        const ColorImage blurred = blur_colors(img, cfg.color_blur_radius);
        for (int y = 0; y < img.height; ++y)
            for (int x = 0; x < img.width; ++x) {
                const float* p = blurred.at(x, y);
                const float v = std::max(p[0], std::max(p[1], p[2]));
                CHECK(field.brightness_at(x, y) == v);
            }
    }
}
