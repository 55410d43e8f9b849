#include "qiedge/canny.hpp"

#include <cmath>
#include <numbers>
#include <vector>

namespace qiedge {

namespace {

// Quantize an atan2 angle to one of four axes (0, 45, 90, 135 degrees)
// modulo pi, returning the (dx, dy) step of that axis.
std::pair<int, int> axis_step(double angle) {
    double a = std::fmod(angle, std::numbers::pi);
    if (a < 0.0) a += std::numbers::pi;
    const double deg = a * 180.0 / std::numbers::pi;
    if (deg < 22.5 || deg >= 157.5) return {1, 0};
    if (deg < 67.5) return {1, 1};
    if (deg < 112.5) return {0, 1};
    return {-1, 1};
}

void check_thresholds(const CannyThresholds& th) {
    if (th.low < 0.0 || !(th.low < th.high))
        throw std::invalid_argument("CannyThresholds: need 0 <= t_low < t_high");
}

}  // namespace

GrayImage non_max_suppression(const GradientField& field) {
    const GrayImage& mag = field.magnitude;
    GrayImage out(mag.width, mag.height);
    for (int y = 0; y < mag.height; ++y) {
        for (int x = 0; x < mag.width; ++x) {
            const double m = mag.at(x, y);
            if (m == 0.0) continue;
            const auto [dx, dy] = axis_step(field.direction.at(x, y));
            if (m >= mag.at_clamped(x + dx, y + dy) && m >= mag.at_clamped(x - dx, y - dy)) {
                out.at(x, y) = m;
            }
        }
    }
    return out;
}

GrayImage hysteresis(const GrayImage& nms, const CannyThresholds& th) {
    check_thresholds(th);
    const int w = nms.width, h = nms.height;
    GrayImage out(w, h);
    std::vector<std::pair<int, int>> stack;
    // Seed from strong pixels, flood through anything above t_low.
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            if (nms.at(x, y) > th.high && out.at(x, y) == 0.0) {
                out.at(x, y) = 255.0;
                stack.emplace_back(x, y);
                while (!stack.empty()) {
                    const auto [cx, cy] = stack.back();
                    stack.pop_back();
                    for (int dy = -1; dy <= 1; ++dy) {
                        for (int dx = -1; dx <= 1; ++dx) {
                            const int nx = cx + dx, ny = cy + dy;
                            if (nx < 0 || nx >= w || ny < 0 || ny >= h) continue;
                            if (out.at(nx, ny) == 0.0 && nms.at(nx, ny) > th.low) {
                                out.at(nx, ny) = 255.0;
                                stack.emplace_back(nx, ny);
                            }
                        }
                    }
                }
            }
        }
    }
    return out;
}

GrayImage canny(const GrayImage& img, const GaussianSpec& blur, const CannyThresholds& th) {
    check_thresholds(th);
    return hysteresis(non_max_suppression(sobel_gradients(gaussian_blur(img, blur))), th);
}

}  // namespace qiedge
