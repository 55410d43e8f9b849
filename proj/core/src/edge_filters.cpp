#include "qiedge/edge_filters.hpp"

#include "qiedge/diffusion.hpp"

#include <algorithm>
#include <cmath>

namespace qiedge {

namespace {

Kernel sobel_x_kernel() {
    // columns are dx: [-1 0 1; -2 0 2; -1 0 1]
    return Kernel(1, {-1, 0, 1, -2, 0, 2, -1, 0, 1});
}

Kernel sobel_y_kernel() {
    // rows are dy: [-1 -2 -1; 0 0 0; 1 2 1]
    return Kernel(1, {-1, -2, -1, 0, 0, 0, 1, 2, 1});
}

}  // namespace

Kernel gaussian_kernel(const GaussianSpec& spec) {
    if (spec.sigma <= 0.0) throw std::invalid_argument("gaussian_kernel: sigma must be > 0");
    if (spec.radius < 1) throw std::invalid_argument("gaussian_kernel: radius must be >= 1");
    Kernel k(spec.radius);
    const double inv_two_sigma_sq = 1.0 / (2.0 * spec.sigma * spec.sigma);
    double sum = 0.0;
    for (int dy = -spec.radius; dy <= spec.radius; ++dy) {
        for (int dx = -spec.radius; dx <= spec.radius; ++dx) {
            const double w = std::exp(-(dx * dx + dy * dy) * inv_two_sigma_sq);
            k.at(dx, dy) = w;
            sum += w;
        }
    }
    for (double& w : k.weights) w /= sum;
    return k;
}

GrayImage gaussian_blur(const GrayImage& img, const GaussianSpec& spec) {
    return convolve(img, gaussian_kernel(spec));
}

GradientField sobel_gradients(const GrayImage& img) {
    GradientField f;
    f.gx = convolve(img, sobel_x_kernel());
    f.gy = convolve(img, sobel_y_kernel());
    f.magnitude = GrayImage(img.width, img.height);
    f.direction = GrayImage(img.width, img.height);
    const std::size_t n = img.pixel_count();
    for (std::size_t i = 0; i < n; ++i) {
        const double gx = f.gx.data[i], gy = f.gy.data[i];
        f.magnitude.data[i] = std::hypot(gx, gy);
        f.direction.data[i] = (gx == 0.0 && gy == 0.0) ? 0.0 : std::atan2(gy, gx);
    }
    return f;
}

GrayImage sobel_edge_map(const GrayImage& img) {
    GradientField f = sobel_gradients(img);
    const double peak = *std::max_element(f.magnitude.data.begin(), f.magnitude.data.end());
    if (peak == 0.0) return f.magnitude;
    GrayImage out = std::move(f.magnitude);
    const double scale = 255.0 / peak;
    for (double& v : out.data) v *= scale;
    return out;
}

GrayImage laplacian_edge_map(const GrayImage& blurred) {
    return clip_intensity(laplacian(blurred, LaplacianStencil::FourNeighbor), 0.0, 255.0);
}

}  // namespace qiedge
