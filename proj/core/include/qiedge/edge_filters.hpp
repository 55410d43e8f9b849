#pragma once

#include "qiedge/image.hpp"

namespace qiedge {

struct GaussianSpec {
    double sigma = 1.0;  // standard deviation in pixels, > 0
    int radius = 1;      // kernel is (2*radius+1)^2
};

/// Sobel response planes. gx/gy are unclipped; direction is atan2(gy, gx)
/// in (-pi, pi], with 0 at zero gradient.
struct GradientField {
    GrayImage gx;
    GrayImage gy;
    GrayImage magnitude;
    GrayImage direction;
};

/// Sampled Gaussian renormalized so the discrete weights sum to exactly 1.
Kernel gaussian_kernel(const GaussianSpec& spec);

GrayImage gaussian_blur(const GrayImage& img, const GaussianSpec& spec);

GradientField sobel_gradients(const GrayImage& img);

/// Sobel magnitude linearly rescaled so its maximum maps to 255
/// (all-zero magnitude stays all-zero). Ablation baseline.
GrayImage sobel_edge_map(const GrayImage& img);

/// Four-neighbor Laplacian of the blurred image, clipped to [0, 255].
GrayImage laplacian_edge_map(const GrayImage& blurred);

}  // namespace qiedge
