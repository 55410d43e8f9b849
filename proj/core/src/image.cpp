#include "qiedge/image.hpp"

#include <algorithm>

namespace qiedge {

GrayImage to_grayscale(const RgbImage& img) {
    GrayImage out(img.width, img.height);
    const std::size_t n = img.pixel_count();
    for (std::size_t i = 0; i < n; ++i) {
        const double* px = &img.data[i * 3];
        out.data[i] = 0.2989 * px[0] + 0.5870 * px[1] + 0.1140 * px[2];
    }
    return out;
}

GrayImage clip_intensity(const GrayImage& img, double lo, double hi) {
    if (lo > hi) throw std::invalid_argument("clip_intensity: lo > hi");
    GrayImage out = img;
    for (double& v : out.data) v = std::clamp(v, lo, hi);
    return out;
}

GrayImage convolve(const GrayImage& img, const Kernel& kern) {
    GrayImage out(img.width, img.height);
    const int w = img.width, h = img.height, r = kern.radius;
    for (int y = 0; y < h; ++y) {
        const bool y_interior = (y >= r && y + r < h);
        for (int x = 0; x < w; ++x) {
            double acc = 0.0;
            if (y_interior && x >= r && x + r < w) {
                const double* kw = kern.weights.data();
                for (int dy = -r; dy <= r; ++dy) {
                    const double* row = &img.data[static_cast<std::size_t>(y + dy) * w + (x - r)];
                    for (int i = 0; i <= 2 * r; ++i) acc += kw[i] * row[i];
                    kw += 2 * r + 1;
                }
            } else {
                for (int dy = -r; dy <= r; ++dy)
                    for (int dx = -r; dx <= r; ++dx)
                        acc += kern.at(dx, dy) * img.at_clamped(x + dx, y + dy);
            }
            out.at(x, y) = acc;
        }
    }
    return out;
}

}  // namespace qiedge
