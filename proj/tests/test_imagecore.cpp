#include "qiedge/image.hpp"

#include "test_support.hpp"

#include <doctest.h>

using namespace qiedge;

TEST_CASE("to_grayscale zero image stays zero") {
    RgbImage img(3, 2);
    const GrayImage out = to_grayscale(img);
    for (double v : out.data) CHECK(v == 0.0);
}

TEST_CASE("to_grayscale white and mixed pixels") {
    RgbImage img(2, 1);
    for (int c = 0; c < 3; ++c) img.at(0, 0, c) = 255.0;
    img.at(1, 0, 0) = 100.0;
    img.at(1, 0, 1) = 150.0;
    img.at(1, 0, 2) = 50.0;
    const GrayImage out = to_grayscale(img);
    CHECK(out.at(0, 0) == doctest::Approx(254.9745).epsilon(1e-12));
    CHECK(out.at(1, 0) == doctest::Approx(123.64).epsilon(1e-12));
}

TEST_CASE("to_grayscale of gray pixels is 0.9999 * v") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> dist(0.0, 255.0);
    RgbImage img(16, 1);
    for (int x = 0; x < 16; ++x) {
        const double v = dist(rng);
        for (int c = 0; c < 3; ++c) img.at(x, 0, c) = v;
    }
    const GrayImage out = to_grayscale(img);
    for (int x = 0; x < 16; ++x) {
        CHECK(std::abs(out.at(x, 0) - 0.9999 * img.at(x, 0, 0)) < 1e-9);
        CHECK(out.at(x, 0) >= 0.0);
        CHECK(out.at(x, 0) <= 254.9745);
    }
}

TEST_CASE("clip_intensity branches") {
    GrayImage img(3, 1);
    img.at(0, 0) = -5.0;
    img.at(1, 0) = 300.0;
    img.at(2, 0) = 128.0;
    const GrayImage out = clip_intensity(img, 0.0, 255.0);
    CHECK(out.at(0, 0) == 0.0);
    CHECK(out.at(1, 0) == 255.0);
    CHECK(out.at(2, 0) == 128.0);
}

TEST_CASE("clip_intensity rejects lo > hi and is idempotent") {
    GrayImage img(2, 2, 10.0);
    CHECK_THROWS_AS(clip_intensity(img, 10.0, 0.0), std::invalid_argument);

    std::mt19937_64 rng(7);
    const GrayImage noisy = testsupport::random_gray(8, 8, rng, -100.0, 400.0);
    const GrayImage once = clip_intensity(noisy, 0.0, 255.0);
    const GrayImage twice = clip_intensity(once, 0.0, 255.0);
    CHECK(testsupport::bit_identical(once, twice));
}

TEST_CASE("convolve with delta kernel is identity") {
    std::mt19937_64 rng(3);
    const GrayImage img = testsupport::random_gray(9, 7, rng);
    CHECK(testsupport::bit_identical(convolve(img, Kernel::delta(0)), img));
    CHECK(testsupport::max_abs_diff(convolve(img, Kernel::delta(2)), img) == 0.0);
}

TEST_CASE("unit-sum kernel preserves constant images") {
    GrayImage img(6, 6, 42.0);
    Kernel k(1, {0.1, 0.1, 0.1, 0.1, 0.2, 0.1, 0.1, 0.1, 0.1});
    const GrayImage out = convolve(img, k);
    for (double v : out.data) CHECK(v == doctest::Approx(42.0).epsilon(1e-12));
}

TEST_CASE("convolve matches brute-force oracle on random pairs") {
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 60; ++trial) {
        const int r = trial % 3;  // k in {0, 1, 2}
        const GrayImage img = testsupport::random_gray(16, 16, rng);
        const Kernel kern = testsupport::random_kernel(r, rng);
        CHECK(testsupport::max_abs_diff(convolve(img, kern),
                                        testsupport::convolve_reference(img, kern)) <= 1e-9);
    }
}

TEST_CASE("convolve is linear") {
    std::mt19937_64 rng(55);
    for (int trial = 0; trial < 10; ++trial) {
        const GrayImage a = testsupport::random_gray(16, 16, rng);
        const GrayImage b = testsupport::random_gray(16, 16, rng);
        const Kernel kern = testsupport::random_kernel(1, rng);
        GrayImage combo(16, 16);
        for (std::size_t i = 0; i < combo.data.size(); ++i)
            combo.data[i] = 2.5 * a.data[i] - 0.75 * b.data[i];
        const GrayImage lhs = convolve(combo, kern);
        const GrayImage ca = convolve(a, kern);
        const GrayImage cb = convolve(b, kern);
        GrayImage rhs(16, 16);
        for (std::size_t i = 0; i < rhs.data.size(); ++i)
            rhs.data[i] = 2.5 * ca.data[i] - 0.75 * cb.data[i];
        CHECK(testsupport::max_abs_diff(lhs, rhs) < 1e-9);
    }
}

TEST_CASE("malformed constructions are rejected") {
    CHECK_THROWS_AS(GrayImage(0, 4), std::invalid_argument);
    CHECK_THROWS_AS(RgbImage(3, 0), std::invalid_argument);
    CHECK_THROWS_AS(Kernel(1, {1.0, 2.0}), std::invalid_argument);
}
