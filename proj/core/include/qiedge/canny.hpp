#pragma once

#include "qiedge/edge_filters.hpp"
#include "qiedge/image.hpp"

namespace qiedge {

struct CannyThresholds {
    double low = 50.0;    // values <= low are discarded
    double high = 150.0;  // values > high seed edges
};

/// Thin the magnitude plane: a pixel survives iff its magnitude is >= both
/// axis neighbors along the quantized gradient direction (4 axes, modulo pi).
/// Ties pass, so ridge plateaus survive. Output <= input pointwise.
GrayImage non_max_suppression(const GradientField& field);

/// Double-threshold edge tracing. Strong pixels (> high) are kept; weak
/// pixels (low, high] are kept iff 8-connected to a strong pixel through
/// weak/strong pixels. Output is binary {0, 255}.
GrayImage hysteresis(const GrayImage& nms, const CannyThresholds& th);

/// Full chain: blur -> Sobel -> NMS -> hysteresis.
GrayImage canny(const GrayImage& img, const GaussianSpec& blur, const CannyThresholds& th);

}  // namespace qiedge
