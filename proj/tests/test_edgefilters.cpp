#include "qiedge/edge_filters.hpp"

#include "test_support.hpp"

#include <doctest.h>

#include <cmath>

using namespace qiedge;

TEST_CASE("gaussian_kernel normalization and symmetry") {
    for (double sigma : {0.5, 1.0, 2.0}) {
        for (int radius : {1, 2, 3}) {
            const Kernel k = gaussian_kernel({sigma, radius});
            double sum = 0.0;
            for (double w : k.weights) {
                CHECK(w > 0.0);
                sum += w;
            }
            CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
            for (int dy = -radius; dy <= radius; ++dy) {
                for (int dx = -radius; dx <= radius; ++dx) {
                    CHECK(k.at(dx, dy) == doctest::Approx(k.at(-dx, dy)).epsilon(1e-12));
                    CHECK(k.at(dx, dy) == doctest::Approx(k.at(dx, -dy)).epsilon(1e-12));
                    CHECK(k.at(dx, dy) == doctest::Approx(k.at(dy, dx)).epsilon(1e-12));
                }
            }
        }
    }
}

TEST_CASE("gaussian_kernel center weight for sigma=1, k=1") {
    const Kernel k = gaussian_kernel({1.0, 1});
    const double expected = 1.0 / (1.0 + 4.0 * std::exp(-0.5) + 4.0 * std::exp(-1.0));
    CHECK(k.at(0, 0) == doctest::Approx(expected).epsilon(1e-12));
    CHECK(k.at(0, 0) == doctest::Approx(0.204180).epsilon(1e-5));
}

TEST_CASE("gaussian_kernel large sigma tends to uniform") {
    const Kernel k = gaussian_kernel({1e6, 1});
    for (double w : k.weights) CHECK(w == doctest::Approx(1.0 / 9.0).epsilon(1e-9));
}

TEST_CASE("gaussian_kernel rejects bad specs") {
    CHECK_THROWS_AS(gaussian_kernel({0.0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(gaussian_kernel({-1.0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(gaussian_kernel({1.0, 0}), std::invalid_argument);
}

TEST_CASE("gaussian_blur preserves constants and matches impulse response") {
    GrayImage constant(7, 7, 31.0);
    CHECK(testsupport::max_abs_diff(gaussian_blur(constant, {1.0, 1}), constant) < 1e-12);

    GrayImage impulse(7, 7);
    impulse.at(3, 3) = 255.0;
    const Kernel k = gaussian_kernel({1.0, 1});
    const GrayImage out = gaussian_blur(impulse, {1.0, 1});
    for (int dy = -1; dy <= 1; ++dy)
        for (int dx = -1; dx <= 1; ++dx)
            CHECK(out.at(3 + dx, 3 + dy) ==
                  doctest::Approx(255.0 * k.at(dx, dy)).epsilon(1e-12));
    CHECK(out.at(0, 0) == 0.0);
}

TEST_CASE("gaussian_blur equals brute-force convolution") {
    std::mt19937_64 rng(31);
    const GrayImage img = testsupport::random_gray(16, 16, rng);
    const GaussianSpec spec{1.5, 2};
    CHECK(testsupport::max_abs_diff(
              gaussian_blur(img, spec),
              testsupport::convolve_reference(img, gaussian_kernel(spec))) <= 1e-9);
}

TEST_CASE("sobel_gradients on constant and ramp images") {
    GrayImage constant(6, 6, 17.0);
    const GradientField fc = sobel_gradients(constant);
    for (std::size_t i = 0; i < fc.magnitude.data.size(); ++i) {
        CHECK(fc.gx.data[i] == doctest::Approx(0.0).epsilon(1e-12));
        CHECK(fc.gy.data[i] == doctest::Approx(0.0).epsilon(1e-12));
        CHECK(fc.magnitude.data[i] == doctest::Approx(0.0).epsilon(1e-12));
        CHECK(fc.direction.data[i] == 0.0);
    }

    const double c = 3.0;
    GrayImage ramp(8, 8);
    for (int y = 0; y < 8; ++y)
        for (int x = 0; x < 8; ++x) ramp.at(x, y) = c * x;
    const GradientField fr = sobel_gradients(ramp);
    for (int y = 1; y < 7; ++y) {
        for (int x = 1; x < 7; ++x) {
            CHECK(fr.gx.at(x, y) == doctest::Approx(8.0 * c).epsilon(1e-12));
            CHECK(fr.gy.at(x, y) == doctest::Approx(0.0).epsilon(1e-12));
            CHECK(fr.magnitude.at(x, y) == doctest::Approx(8.0 * c).epsilon(1e-12));
        }
    }
}

TEST_CASE("magnitude and direction arithmetic") {
    // plane I = (3x + 4y)/8 has interior gx = 3, gy = 4
    GrayImage img(8, 8);
    for (int y = 0; y < 8; ++y)
        for (int x = 0; x < 8; ++x) img.at(x, y) = (3.0 * x + 4.0 * y) / 8.0;
    const GradientField f = sobel_gradients(img);
    CHECK(f.gx.at(4, 4) == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(f.gy.at(4, 4) == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(f.magnitude.at(4, 4) == doctest::Approx(5.0).epsilon(1e-12));
    CHECK(f.direction.at(4, 4) == doctest::Approx(0.927295).epsilon(1e-6));
}

TEST_CASE("gradient magnitude satisfies its defining identity") {
    std::mt19937_64 rng(32);
    const GrayImage img = testsupport::random_gray(16, 16, rng);
    const GradientField f = sobel_gradients(img);
    for (std::size_t i = 0; i < f.magnitude.data.size(); ++i)
        CHECK(std::abs(f.magnitude.data[i] -
                       std::hypot(f.gx.data[i], f.gy.data[i])) < 1e-9);
}

TEST_CASE("sobel transpose symmetry") {
    std::mt19937_64 rng(33);
    const GrayImage img = testsupport::random_gray(12, 12, rng);
    GrayImage transposed(12, 12);
    for (int y = 0; y < 12; ++y)
        for (int x = 0; x < 12; ++x) transposed.at(y, x) = img.at(x, y);
    const GradientField f = sobel_gradients(img);
    const GradientField ft = sobel_gradients(transposed);
    for (int y = 0; y < 12; ++y)
        for (int x = 0; x < 12; ++x)
            CHECK(std::abs(ft.gy.at(y, x) - f.gx.at(x, y)) < 1e-9);
}

TEST_CASE("magnitude is invariant under image negation") {
    std::mt19937_64 rng(34);
    const GrayImage img = testsupport::random_gray(12, 12, rng);
    GrayImage neg(12, 12);
    for (std::size_t i = 0; i < neg.data.size(); ++i) neg.data[i] = 255.0 - img.data[i];
    CHECK(testsupport::max_abs_diff(sobel_gradients(img).magnitude,
                                    sobel_gradients(neg).magnitude) < 1e-9);
}

TEST_CASE("sobel_edge_map rescaling") {
    GrayImage constant(6, 6, 50.0);
    const GrayImage zero = sobel_edge_map(constant);
    for (double v : zero.data) CHECK(v == 0.0);

    GrayImage ramp(10, 10);
    for (int y = 0; y < 10; ++y)
        for (int x = 0; x < 10; ++x) ramp.at(x, y) = 2.0 * x;
    const GrayImage out = sobel_edge_map(ramp);
    for (int y = 1; y < 9; ++y)
        for (int x = 1; x < 9; ++x) CHECK(out.at(x, y) == doctest::Approx(255.0).epsilon(1e-12));

    // scale invariance: a * I yields the same rescaled map
    std::mt19937_64 rng(35);
    const GrayImage img = testsupport::random_gray(12, 12, rng);
    GrayImage scaled(12, 12);
    for (std::size_t i = 0; i < img.data.size(); ++i) scaled.data[i] = 3.25 * img.data[i];
    CHECK(testsupport::max_abs_diff(sobel_edge_map(img), sobel_edge_map(scaled)) < 1e-9);
}

TEST_CASE("laplacian_edge_map clips negatives") {
    GrayImage constant(5, 5, 12.0);
    for (double v : laplacian_edge_map(constant).data) CHECK(v == 0.0);

    GrayImage spike(5, 5);
    spike.at(2, 2) = 100.0;
    const GrayImage out = laplacian_edge_map(spike);
    CHECK(out.at(2, 2) == 0.0);  // -400 clipped
    CHECK(out.at(1, 2) == 100.0);
    CHECK(out.at(3, 2) == 100.0);
    CHECK(out.at(2, 1) == 100.0);
    CHECK(out.at(2, 3) == 100.0);

    std::mt19937_64 rng(36);
    const GrayImage img = testsupport::random_gray(16, 16, rng);
    for (double v : laplacian_edge_map(img).data) {
        CHECK(v >= 0.0);
        CHECK(v <= 255.0);
    }
}
