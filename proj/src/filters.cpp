#include "tactile/filters.hpp"

#include <algorithm>
#include <cmath>

namespace tactile {

namespace {

constexpr double kEdtInfinity = 1e30;

int clamp_index(int i, int n) { return i < 0 ? 0 : (i >= n ? n - 1 : i); }

// One separable pass over `src` along x (stride 1) or y (stride width).
// Taps accumulate as center + sum of mirrored pairs so that reversing the
// axis reproduces the same floating-point sums.
void blur_pass(const float* src, float* dst, int w, int h, const std::vector<double>& k, bool horizontal) {
    const int r = static_cast<int>(k.size()) - 1;
    double weight_sum = k[0];
    for (int i = 1; i <= r; ++i) weight_sum += k[i] * 2.0;

    const int outer = horizontal ? h : w;
    const int inner = horizontal ? w : h;
    const size_t outer_stride = horizontal ? static_cast<size_t>(w) : 1;
    const size_t inner_stride = horizontal ? 1 : static_cast<size_t>(w);

    for (int o = 0; o < outer; ++o) {
        const float* s = src + o * outer_stride;
        float* d = dst + o * outer_stride;
        for (int i = 0; i < inner; ++i) {
            double acc = k[0] * s[i * inner_stride];
            for (int j = 1; j <= r; ++j) {
                const int lo = clamp_index(i - j, inner);
                const int hi = clamp_index(i + j, inner);
                acc += k[j] * (s[lo * inner_stride] + s[hi * inner_stride]);
            }
            d[i * inner_stride] = static_cast<float>(acc / weight_sum);
        }
    }
}

void blur_plane(const float* src, float* dst, int w, int h, const std::vector<double>& k) {
    const size_t n = static_cast<size_t>(w) * h;
    std::vector<float> tmp(n), hv(n), vh(n);
    // Average of the two pass orders: swapping the axes (a 90-degree
    // rotation does exactly that) swaps the summands and leaves dst intact.
    blur_pass(src, tmp.data(), w, h, k, true);
    blur_pass(tmp.data(), hv.data(), w, h, k, false);
    blur_pass(src, tmp.data(), w, h, k, false);
    blur_pass(tmp.data(), vh.data(), w, h, k, true);
    for (size_t i = 0; i < n; ++i) dst[i] = 0.5f * (hv[i] + vh[i]);
}

// Felzenszwalb-Huttenlocher 1D squared distance transform.
void edt_1d(std::vector<double>& f, std::vector<double>& d, std::vector<int>& v, std::vector<double>& z, int n) {
    int k = 0;
    v[0] = 0;
    z[0] = -kEdtInfinity;
    z[1] = kEdtInfinity;
    for (int q = 1; q < n; ++q) {
        double s = ((f[q] + static_cast<double>(q) * q) - (f[v[k]] + static_cast<double>(v[k]) * v[k])) /
                   (2.0 * q - 2.0 * v[k]);
        while (s <= z[k]) {
            --k;
            s = ((f[q] + static_cast<double>(q) * q) - (f[v[k]] + static_cast<double>(v[k]) * v[k])) /
                (2.0 * q - 2.0 * v[k]);
        }
        ++k;
        v[k] = q;
        z[k] = s;
        z[k + 1] = kEdtInfinity;
    }
    k = 0;
    for (int q = 0; q < n; ++q) {
        while (z[k + 1] < q) ++k;
        const double dq = q - v[k];
        d[q] = dq * dq + f[v[k]];
    }
}

}  // namespace

std::vector<double> gaussian_kernel(double sigma) {
    const int r = std::max(1, static_cast<int>(std::floor(3.0 * sigma)));
    std::vector<double> k(r + 1);
    for (int i = 0; i <= r; ++i) k[i] = std::exp(-(static_cast<double>(i) * i) / (2.0 * sigma * sigma));
    return k;
}

GrayImage gaussian_blur(const GrayImage& src, double sigma) {
    if (src.empty()) return src;
    const std::vector<double> k = gaussian_kernel(sigma);
    GrayImage out(src.width, src.height);
    blur_plane(src.values.data(), out.values.data(), src.width, src.height, k);
    return out;
}

ColorImage gaussian_blur(const ColorImage& src, double sigma) {
    if (src.empty()) return src;
    const std::vector<double> k = gaussian_kernel(sigma);
    const size_t n = static_cast<size_t>(src.width) * src.height;
    ColorImage out(src.width, src.height);
    std::vector<float> plane(n), blurred(n);
    for (int c = 0; c < 3; ++c) {
        for (size_t i = 0; i < n; ++i) plane[i] = src.pixels[i * 3 + c];
        blur_plane(plane.data(), blurred.data(), src.width, src.height, k);
        for (size_t i = 0; i < n; ++i) out.pixels[i * 3 + c] = blurred[i];
    }
    return out;
}

std::vector<double> squared_distance_transform(const BinaryImage& src) {
    const int w = src.width, h = src.height;
    std::vector<double> dist(static_cast<size_t>(w) * h);
    for (size_t i = 0; i < dist.size(); ++i) dist[i] = src.mask[i] ? 0.0 : kEdtInfinity;

    const int n = std::max(w, h);
    std::vector<double> f(n), d(n), z(n + 1);
    std::vector<int> v(n);

    for (int x = 0; x < w; ++x) {
        for (int y = 0; y < h; ++y) f[y] = dist[static_cast<size_t>(y) * w + x];
        edt_1d(f, d, v, z, h);
        for (int y = 0; y < h; ++y) dist[static_cast<size_t>(y) * w + x] = d[y];
    }
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) f[x] = dist[static_cast<size_t>(y) * w + x];
        edt_1d(f, d, v, z, w);
        for (int x = 0; x < w; ++x) dist[static_cast<size_t>(y) * w + x] = d[x];
    }
    return dist;
}

}  // namespace tactile
