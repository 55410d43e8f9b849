#include "qiedge/diffusion.hpp"

#include <algorithm>

namespace qiedge {

namespace {

Kernel weighted_laplacian_kernel() {
    Kernel k(1);
    k.at(0, -1) = 1.0;
    k.at(-1, 0) = 1.0;
    k.at(0, 0) = -4.0;
    k.at(1, 0) = 1.0;
    k.at(0, 1) = 1.0;
    return k;
}

}  // namespace

GrayImage laplacian(const GrayImage& img, LaplacianStencil stencil) {
    if (stencil == LaplacianStencil::Weighted) {
        return convolve(img, weighted_laplacian_kernel());
    }
    GrayImage out(img.width, img.height);
    const int w = img.width, h = img.height;
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            out.at(x, y) = img.at_clamped(x - 1, y) + img.at_clamped(x + 1, y) +
                           img.at_clamped(x, y - 1) + img.at_clamped(x, y + 1) -
                           4.0 * img.at(x, y);
        }
    }
    return out;
}

GrayImage diffuse_step(const GrayImage& img, double delta, LaplacianStencil stencil) {
    if (delta <= 0.0) throw std::invalid_argument("diffuse_step: delta must be > 0");
    GrayImage lap = laplacian(img, stencil);
    GrayImage out(img.width, img.height);
    const std::size_t n = img.pixel_count();
    for (std::size_t i = 0; i < n; ++i) {
        out.data[i] = std::clamp(img.data[i] + delta * lap.data[i], 0.0, 255.0);
    }
    return out;
}

GrayImage evolve(const GrayImage& img, const DiffusionConfig& cfg) {
    if (cfg.time_steps < 0) throw std::invalid_argument("evolve: time_steps must be >= 0");
    GrayImage psi = img;
    for (int t = 0; t < cfg.time_steps; ++t) {
        psi = diffuse_step(psi, cfg.delta, cfg.stencil);
    }
    return psi;
}

}  // namespace qiedge
