#include "qiedge/synthetic.hpp"

#include <cmath>

namespace qiedge {

namespace {

// Ground truth = foreground pixels with at least one 4-neighbor outside the
// shape (the inner boundary ring).
GrayImage inner_boundary(const GrayImage& mask) {
    GrayImage gt(mask.width, mask.height);
    for (int y = 0; y < mask.height; ++y) {
        for (int x = 0; x < mask.width; ++x) {
            if (mask.at(x, y) == 0.0) continue;
            const bool edge = mask.at_clamped(x - 1, y) == 0.0 ||
                              mask.at_clamped(x + 1, y) == 0.0 ||
                              mask.at_clamped(x, y - 1) == 0.0 ||
                              mask.at_clamped(x, y + 1) == 0.0;
            if (edge) gt.at(x, y) = 255.0;
        }
    }
    return gt;
}

}  // namespace

ShapeScene make_square_scene(int size, int side) {
    GrayImage img(size, size, 0.0);
    const int lo = (size - side) / 2, hi = lo + side;
    for (int y = lo; y < hi; ++y)
        for (int x = lo; x < hi; ++x) img.at(x, y) = 255.0;
    return {"square" + std::to_string(side), img, inner_boundary(img)};
}

ShapeScene make_circle_scene(int size, int radius) {
    GrayImage img(size, size, 0.0);
    const double c = (size - 1) / 2.0;
    for (int y = 0; y < size; ++y)
        for (int x = 0; x < size; ++x)
            if (std::hypot(x - c, y - c) <= radius) img.at(x, y) = 255.0;
    return {"circle" + std::to_string(radius), img, inner_boundary(img)};
}

ShapeScene make_step_scene(int size) {
    GrayImage img(size, size);
    GrayImage gt(size, size);
    const int split = size / 2;
    for (int y = 0; y < size; ++y) {
        for (int x = 0; x < size; ++x) {
            const double ramp = 30.0 * x / (size - 1);
            // Intermediate transition column keeps the gradient peak a single
            // pixel wide, so non-maximum suppression has no tie plateau.
            const double base = x < split ? 40.0 : (x == split ? 120.0 : 200.0);
            img.at(x, y) = base + ramp;
        }
    }
    for (int y = 0; y < size; ++y) gt.at(split, y) = 255.0;
    return {"step", img, gt};
}

ShapeScene make_texture_scene(int size, double amplitude, double period) {
    GrayImage img(size, size);
    GrayImage gt(size, size);
    const int split = size / 2;
    const double w = 2.0 * std::acos(-1.0) / period;
    for (int y = 0; y < size; ++y) {
        for (int x = 0; x < size; ++x) {
            img.at(x, y) = x < split
                               ? 30.0
                               : 180.0 + amplitude * std::sin(w * x) * std::sin(w * y);
        }
    }
    for (int y = 0; y < size; ++y) gt.at(split, y) = 255.0;
    return {"texture", img, gt};
}

std::vector<ShapeScene> synthetic_suite() {
    return {
        make_square_scene(64, 32),
        make_square_scene(64, 20),
        make_circle_scene(64, 14),
        make_step_scene(64),
        make_texture_scene(64, 60.0, 12.0),
    };
}

}  // namespace qiedge
