#pragma once

#include "qiedge/image.hpp"

#include <string>
#include <vector>

namespace qiedge {

/// Deterministic test scene with an exact boundary ground truth, so the
/// evaluation harness needs no external datasets.
struct ShapeScene {
    std::string name;
    GrayImage image;
    GrayImage gt;  // binary {0, 255}; shape pixels adjacent to background
};

/// Axis-aligned bright square (value 255) centered on a dark background.
ShapeScene make_square_scene(int size, int side);

/// Filled bright disk centered on a dark background.
ShapeScene make_circle_scene(int size, int radius);

/// Vertical step edge riding on a gentle horizontal ramp.
ShapeScene make_step_scene(int size);

/// Step edge next to a sinusoidal texture field. The texture gradients sit
/// below the hysteresis thresholds when clean; additive noise pushes them
/// over and floods the right half with false edges, so this scene is the
/// noise-sensitive member of the suite.
ShapeScene make_texture_scene(int size, double amplitude, double period);

/// The fixed suite the CLI and acceptance harness use.
std::vector<ShapeScene> synthetic_suite();

}  // namespace qiedge
