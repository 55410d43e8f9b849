#pragma once

#include "qiedge/image.hpp"

#include <cstdint>

namespace qiedge {

struct NoiseSpec {
    double sigma = 0.0;      // standard deviation in intensity units
    std::uint64_t seed = 0;  // generator seed; fixed seed => bit-identical output
};

/// Additive zero-mean Gaussian noise, clipped to [0, 255]. Samples come from
/// a Box-Muller transform over an mt19937_64 stream, so outputs are
/// reproducible across platforms for a given (image, spec). sigma = 0 copies
/// the input exactly.
GrayImage add_gaussian_noise(const GrayImage& img, const NoiseSpec& spec);

/// splitmix64 hash for deriving independent per-image seeds from a base seed.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt);

}  // namespace qiedge
