#include <cmath>
#include <filesystem>
#include <random>
#include <set>

#include "doctest.h"
#include "tactile/config.hpp"
#include "tactile/edge_detect.hpp"
#include "tactile/errors.hpp"
#include "tactile/image_io.hpp"
#include "test_support.hpp"

using namespace tactile;

namespace {

// Independent route: direct 2D convolution blur, atan2-based suppression
// sectors. Shares nothing with the implementation but the contract.
EdgeStrengthMap oracle_detect(const ColorImage& img, const PipelineConfig& cfg) {
    const int w = img.width, h = img.height;
    const ColorImage smooth = testsupport::oracle_blur_color(img, cfg.color_blur_radius / 2.0);
    std::vector<double> mag(static_cast<size_t>(w) * h), gxs(mag.size()), gys(mag.size());
    auto cl = [](int i, int n) { return i < 0 ? 0 : (i >= n ? n - 1 : i); };
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) {
            double best = -1.0, bgx = 0.0, bgy = 0.0;
            for (int c = 0; c < 3; ++c) {
                const double gx = (smooth.at(cl(x + 1, w), y)[c] - smooth.at(cl(x - 1, w), y)[c]) * 0.5;
                const double gy = (smooth.at(x, cl(y + 1, h))[c] - smooth.at(x, cl(y - 1, h))[c]) * 0.5;
                const double sq = gx * gx + gy * gy;
                if (sq > best) {
                    best = sq;
                    bgx = gx;
                    bgy = gy;
                }
            }
            const size_t i = static_cast<size_t>(y) * w + x;
            mag[i] = std::sqrt(best);
            gxs[i] = bgx;
            gys[i] = bgy;
        }
    double mx = 0.0;
    for (double m : mag) mx = std::max(mx, m);
    EdgeStrengthMap out(w, h);
    if (mx <= 0.0) return out;
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) {
            const size_t i = static_cast<size_t>(y) * w + x;
            const double s = mag[i] / mx;
            if (s <= 0.0) continue;
            double ang = std::atan2(gys[i], gxs[i]) * 180.0 / testsupport::kPi;
            if (ang < 0.0) ang += 180.0;
            int dx1, dy1;
            if (ang < 22.5 || ang >= 157.5) {
                dx1 = 1;
                dy1 = 0;
            } else if (ang < 67.5) {
                dx1 = 1;
                dy1 = 1;
            } else if (ang < 112.5) {
                dx1 = 0;
                dy1 = 1;
            } else {
                dx1 = -1;
                dy1 = 1;
            }
            auto nb = [&](int sx, int sy) {
                const int nx = x + sx, ny = y + sy;
                if (nx < 0 || nx >= w || ny < 0 || ny >= h) return 0.0;
                return mag[static_cast<size_t>(ny) * w + nx] / mx;
            };
            if (s >= nb(dx1, dy1) && s >= nb(-dx1, -dy1))
                out.at(x, y) = static_cast<float>(static_cast<double>(std::lround(s * 65535.0)) / 65535.0);
        }
    return out;
}

ColorImage random_image(int w, int h, uint32_t seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<float> dist(0.0f, 1.0f);
    ColorImage img(w, h);
    for (float& v : img.pixels) v = dist(rng);
    return img;
}

std::string temp_path(const std::string& name) {
    return (std::filesystem::temp_directory_path() / name).string();
}

}  // namespace

TEST_SUITE("edge_detect") {
    TEST_CASE("constant image maps to all zeros") {
        const PipelineConfig cfg;
        const ColorImage img = testsupport::constant_image(16, 12, 0.3f, 0.6f, 0.9f);
        const EdgeStrengthMap edges = detect_edges(img, cfg);
        for (float v : edges.values) CHECK(v == 0.0f);
    }

    TEST_CASE("5x5 vertical step thins to one full-strength column") {
        const PipelineConfig cfg;
        ColorImage img(5, 5);
        for (int y = 0; y < 5; ++y)
            for (int x = 0; x < 5; ++x) {
                float* p = img.at(x, y);
                p[0] = x < 2 ? 0.25f : 0.75f;  // 50% step in one channel
                p[1] = 0.5f;
                p[2] = 0.5f;
            }
        const EdgeStrengthMap edges = detect_edges(img, cfg);
        // Frozen from the brute-force oracle: strength 1 down column 2 only.
        for (int y = 0; y < 5; ++y)
            for (int x = 0; x < 5; ++x) CHECK(edges.at(x, y) == (x == 2 ? 1.0f : 0.0f));

        const EdgeStrengthMap expect = oracle_detect(img, cfg);
        for (size_t i = 0; i < edges.values.size(); ++i)
            CHECK(std::fabs(edges.values[i] - expect.values[i]) < 1e-6);
    }

    TEST_CASE("matches the brute-force detector on random images") {
        const PipelineConfig cfg;
        // strengths land on the 16-bit export grid, so the two routes may
        // round to adjacent quanta
        const double tolerance = 1.0 / 65535.0 + 1e-6;
        for (uint32_t seed : {101u, 102u, 103u}) {
            const ColorImage img = random_image(21, 17, seed);
            const EdgeStrengthMap got = detect_edges(img, cfg);
            const EdgeStrengthMap expect = oracle_detect(img, cfg);
            size_t mismatches = 0;
            for (size_t i = 0; i < got.values.size(); ++i)
                if (std::fabs(got.values[i] - expect.values[i]) > tolerance) ++mismatches;
            CHECK(mismatches == 0);
        }
    }

    TEST_CASE("bar outlines come out closed") {
        const PipelineConfig cfg;
        std::vector<testsupport::Bar> bars;
        const ColorImage img = testsupport::five_bar_image(300, 100, &bars);
        const BinaryEdgeMap mask = threshold_edges(detect_edges(img, cfg), cfg.edge_threshold);
        const BinaryImage outside = testsupport::flood_reach(mask, 0, 0);
        REQUIRE(outside.at(0, 0));
        for (const auto& b : bars) {
            // an unbroken outline seals the bar center off from the border
            CHECK_FALSE(outside.at(b.x0 + b.w / 2, b.y0 + b.h / 2));
        }
    }

    TEST_CASE("commutes with quarter turns") {
        const PipelineConfig cfg;
        for (uint32_t seed : {7u, 8u}) {
            const ColorImage img = random_image(24, 18, seed);
            const EdgeStrengthMap a = testsupport::rot90(detect_edges(img, cfg));
            const EdgeStrengthMap b = detect_edges(testsupport::rot90(img), cfg);
            REQUIRE(a.width == b.width);
            for (size_t i = 0; i < a.values.size(); ++i) CHECK(std::fabs(a.values[i] - b.values[i]) < 1e-6);
        }
    }

    TEST_CASE("contrast scaling keeps the survivor set") {
        const PipelineConfig cfg;
        const ColorImage img = random_image(20, 15, 31);
        auto survivors = [&](const ColorImage& im) {
            std::set<size_t> s;
            const EdgeStrengthMap e = detect_edges(im, cfg);
            for (size_t i = 0; i < e.values.size(); ++i)
                if (e.values[i] > 0.0f) s.insert(i);
            return s;
        };
        const std::set<size_t> base = survivors(img);
        CHECK_FALSE(base.empty());
        for (float alpha : {0.5f, 0.25f, 0.125f}) {
            ColorImage scaled = img;
            for (float& v : scaled.pixels) v *= alpha;  // differences from black scale by alpha
            CHECK(survivors(scaled) == base);
        }
    }

    TEST_CASE("every survivor is a local maximum along some axis") {
        const PipelineConfig cfg;
        const ColorImage img = random_image(25, 19, 41);
        const EdgeStrengthMap edges = detect_edges(img, cfg);
        for (int y = 1; y < edges.height - 1; ++y)
            for (int x = 1; x < edges.width - 1; ++x) {
                const float s = edges.at(x, y);
                if (s <= 0.0f) continue;
                bool has_axis_max = false;
                const int axes[4][2] = {{1, 0}, {1, 1}, {0, 1}, {1, -1}};
                for (const auto& a : axes)
                    if (s >= edges.at(x + a[0], y + a[1]) && s >= edges.at(x - a[0], y - a[1]))
                        has_axis_max = true;
                CHECK(has_axis_max);
            }
    }

    TEST_CASE("threshold is strict") {
        EdgeStrengthMap edges(3, 1);
        edges.at(0, 0) = 0.2f;
        edges.at(1, 0) = 0.5f;
        edges.at(2, 0) = 0.9f;
        const BinaryEdgeMap mask = threshold_edges(edges, 0.5);
        CHECK_FALSE(mask.at(0, 0));
        CHECK_FALSE(mask.at(1, 0));  // equality does not pass
        CHECK(mask.at(2, 0));

        EdgeStrengthMap at_threshold(4, 2, 0.5f);
        CHECK(threshold_edges(at_threshold, 0.5).count() == 0);
        EdgeStrengthMap full(4, 2, 1.0f);
        CHECK(threshold_edges(full, 0.5).count() == 8);
    }

    TEST_CASE("threshold matches pointwise brute force on random maps") {
        std::mt19937 rng(55);
        std::uniform_real_distribution<float> dist(0.0f, 1.0f);
        EdgeStrengthMap edges(13, 9);
        for (float& v : edges.values) v = dist(rng);
        const double t = 0.4;
        const BinaryEdgeMap mask = threshold_edges(edges, t);
        for (size_t i = 0; i < edges.values.size(); ++i)
            CHECK(static_cast<bool>(mask.mask[i]) == (static_cast<double>(edges.values[i]) > t));
    }

    TEST_CASE("export-import round trip and hand edits") {
        const PipelineConfig cfg;
        const ColorImage img = random_image(18, 14, 77);
        const EdgeStrengthMap edges = detect_edges(img, cfg);
        const std::string path = temp_path("edges_roundtrip.pgm");
        save_gray_image(edges, path, 16);

        const EdgeStrengthMap back = import_edges(path, 18, 14);
        for (size_t i = 0; i < edges.values.size(); ++i)
            CHECK(std::fabs(back.values[i] - edges.values[i]) <= 1.0f / 65535.0f);

        // simulate a hand-drawn stroke on the exported map
        EdgeStrengthMap edited = back;
        for (int x = 2; x < 16; ++x) edited.at(x, 7) = 1.0f;
        save_gray_image(edited, path, 16);
        const EdgeStrengthMap reimported = import_edges(path, 18, 14);
        for (int x = 2; x < 16; ++x) CHECK(reimported.at(x, 7) == 1.0f);  // no re-thinning

        CHECK_THROWS_WITH_AS(import_edges(path, 20, 14), doctest::Contains("18x14"), ValidationError);
    }
}
