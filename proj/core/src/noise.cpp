#include "qiedge/noise.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace qiedge {

namespace {

// Uniform in (0, 1] from the top 53 bits; never 0, so log() is safe.
double next_unit(std::mt19937_64& rng) {
    return (static_cast<double>(rng() >> 11) + 1.0) * 0x1p-53;
}

}  // namespace

GrayImage add_gaussian_noise(const GrayImage& img, const NoiseSpec& spec) {
    if (spec.sigma < 0.0) throw std::invalid_argument("add_gaussian_noise: sigma must be >= 0");
    if (spec.sigma == 0.0) return img;

    std::mt19937_64 rng(spec.seed);
    GrayImage out(img.width, img.height);
    const std::size_t n = img.pixel_count();
    double spare = 0.0;
    bool has_spare = false;
    for (std::size_t i = 0; i < n; ++i) {
        double z;
        if (has_spare) {
            z = spare;
            has_spare = false;
        } else {
            const double u1 = next_unit(rng);
            const double u2 = next_unit(rng);
            const double mag = std::sqrt(-2.0 * std::log(u1));
            z = mag * std::cos(2.0 * std::numbers::pi * u2);
            spare = mag * std::sin(2.0 * std::numbers::pi * u2);
            has_spare = true;
        }
        out.data[i] = std::clamp(img.data[i] + spec.sigma * z, 0.0, 255.0);
    }
    return out;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace qiedge
