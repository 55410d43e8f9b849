#pragma once

#include "qiedge/image.hpp"

#include <optional>
#include <string>
#include <variant>

namespace qiedge {

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using AnyImage = std::variant<GrayImage, RgbImage>;

/// Decode a PNG (8-bit gray or RGB) or PGM (P5) file, dispatching on magic
/// bytes. Throws IoError on unreadable or unsupported input.
AnyImage load_image(const std::string& path);

GrayImage to_gray(const AnyImage& img);
RgbImage to_rgb(const AnyImage& img);

/// Round half-up and clamp to [0, 255].
std::uint8_t quantize_intensity(double v);

void save_png(const std::string& path, const GrayImage& img);
void save_png(const std::string& path, const RgbImage& img);
void save_pgm(const std::string& path, const GrayImage& img);

}  // namespace qiedge
