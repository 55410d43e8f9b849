#include "qiedge/canny.hpp"
#include "qiedge/diffusion.hpp"
#include "qiedge/edge_filters.hpp"
#include "qiedge/pipeline.hpp"

#include <benchmark/benchmark.h>

#include <cmath>
#include <random>

namespace {

qiedge::GrayImage random_image(int w, int h, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dist(0.0, 255.0);
    qiedge::GrayImage img(w, h);
    for (double& v : img.data) v = dist(rng);
    return img;
}

void BM_Convolve3x3(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const qiedge::GrayImage img = random_image(n, n, 1);
    const qiedge::Kernel kern = qiedge::gaussian_kernel({1.0, 1});
    for (auto _ : state) {
        benchmark::DoNotOptimize(qiedge::convolve(img, kern));
    }
    state.SetItemsProcessed(state.iterations() * n * n);
}
BENCHMARK(BM_Convolve3x3)->Arg(128)->Arg(512);

void BM_DiffuseStep(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const qiedge::GrayImage img = random_image(n, n, 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            qiedge::diffuse_step(img, 0.1, qiedge::LaplacianStencil::FourNeighbor));
    }
    state.SetItemsProcessed(state.iterations() * n * n);
}
BENCHMARK(BM_DiffuseStep)->Arg(128)->Arg(512);

void BM_Canny(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const qiedge::GrayImage img = random_image(n, n, 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(qiedge::canny(img, {1.0, 1}, {50.0, 150.0}));
    }
}
BENCHMARK(BM_Canny)->Arg(128)->Arg(512);

void BM_FullPipeline(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const qiedge::GrayImage img = random_image(n, n, 4);
    const qiedge::PipelineConfig cfg;
    for (auto _ : state) {
        benchmark::DoNotOptimize(qiedge::run_pipeline(img, cfg));
    }
}
BENCHMARK(BM_FullPipeline)->Arg(128)->Arg(512);

}  // namespace

BENCHMARK_MAIN();
