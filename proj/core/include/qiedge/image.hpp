#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace qiedge {

/// RGB image with real-valued channels in [0, 255], row-major RGB triples.
struct RgbImage {
    int width = 0;
    int height = 0;
    std::vector<double> data;  // width * height * 3

    RgbImage() = default;
    RgbImage(int w, int h) : width(w), height(h), data(static_cast<std::size_t>(w) * h * 3, 0.0) {
        if (w < 1 || h < 1) throw std::invalid_argument("RgbImage: dimensions must be >= 1");
    }

    double& at(int x, int y, int c) { return data[(static_cast<std::size_t>(y) * width + x) * 3 + c]; }
    double at(int x, int y, int c) const { return data[(static_cast<std::size_t>(y) * width + x) * 3 + c]; }

    std::size_t pixel_count() const { return static_cast<std::size_t>(width) * height; }
};

/// Single-channel intensity field. Nominal range [0, 255]; intermediates
/// (raw Laplacians, Sobel responses) may leave that range.
struct GrayImage {
    int width = 0;
    int height = 0;
    std::vector<double> data;  // width * height, row-major

    GrayImage() = default;
    GrayImage(int w, int h, double fill = 0.0)
        : width(w), height(h), data(static_cast<std::size_t>(w) * h, fill) {
        if (w < 1 || h < 1) throw std::invalid_argument("GrayImage: dimensions must be >= 1");
    }

    double& at(int x, int y) { return data[static_cast<std::size_t>(y) * width + x]; }
    double at(int x, int y) const { return data[static_cast<std::size_t>(y) * width + x]; }

    /// Replicate-padded read: out-of-range coordinates clamp to the nearest pixel.
    double at_clamped(int x, int y) const {
        if (x < 0) x = 0; else if (x >= width) x = width - 1;
        if (y < 0) y = 0; else if (y >= height) y = height - 1;
        return at(x, y);
    }

    std::size_t pixel_count() const { return static_cast<std::size_t>(width) * height; }
    bool same_size(const GrayImage& other) const {
        return width == other.width && height == other.height;
    }
};

/// Odd-sized square stencil. Weight lookup is by (dx, dy) offset, so a
/// printed matrix maps rows to dy and columns to dx.
struct Kernel {
    int radius = 0;
    std::vector<double> weights;  // (2r+1)^2, row-major in dy then dx

    Kernel() : weights(1, 0.0) {}
    explicit Kernel(int r) : radius(r) {
        if (r < 0) throw std::invalid_argument("Kernel: radius must be >= 0");
        const int n = 2 * r + 1;
        weights.assign(static_cast<std::size_t>(n) * n, 0.0);
    }
    Kernel(int r, std::vector<double> w) : radius(r), weights(std::move(w)) {
        const std::size_t n = static_cast<std::size_t>(2 * r + 1);
        if (r < 0 || weights.size() != n * n)
            throw std::invalid_argument("Kernel: weight count must be (2k+1)^2");
    }

    int size() const { return 2 * radius + 1; }
    double& at(int dx, int dy) {
        return weights[static_cast<std::size_t>(dy + radius) * size() + (dx + radius)];
    }
    double at(int dx, int dy) const {
        return weights[static_cast<std::size_t>(dy + radius) * size() + (dx + radius)];
    }

    /// Identity stencil: center 1, else 0.
    static Kernel delta(int r = 0) {
        Kernel k(r);
        k.at(0, 0) = 1.0;
        return k;
    }
};

/// Luma conversion with the 0.2989 / 0.5870 / 0.1140 weights, kept real-valued.
GrayImage to_grayscale(const RgbImage& img);

/// Pointwise clamp to [lo, hi].
GrayImage clip_intensity(const GrayImage& img, double lo, double hi);

/// Correlation (no kernel flip) with replicate padding. Output is not clipped.
GrayImage convolve(const GrayImage& img, const Kernel& kern);

}  // namespace qiedge
