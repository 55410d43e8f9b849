#include "qiedge/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

namespace qiedge {

namespace {

class StageClock {
public:
    explicit StageClock(StageTimes& out) : out_(out), start_(clock::now()), last_(start_) {}

    void mark(const std::string& stage) {
        const auto now = clock::now();
        out_.stages.emplace_back(stage, std::chrono::duration<double>(now - last_).count());
        last_ = now;
    }

    void finish() { out_.total = std::chrono::duration<double>(clock::now() - start_).count(); }

private:
    using clock = std::chrono::steady_clock;
    StageTimes& out_;
    clock::time_point start_;
    clock::time_point last_;
};

}  // namespace

const char* variant_name(Variant v) {
    switch (v) {
        case Variant::SobelOnly: return "sobel";
        case Variant::SchrodingerSobel: return "schrodinger-sobel";
        case Variant::HybridOnly: return "hybrid";
        case Variant::Full: return "full";
    }
    return "unknown";
}

Variant variant_from_name(const std::string& name) {
    if (name == "sobel") return Variant::SobelOnly;
    if (name == "schrodinger-sobel") return Variant::SchrodingerSobel;
    if (name == "hybrid") return Variant::HybridOnly;
    if (name == "full") return Variant::Full;
    throw std::invalid_argument("unknown variant: " + name);
}

GrayImage hybrid_fuse(const GrayImage& e_canny, const GrayImage& e_lap) {
    if (!e_canny.same_size(e_lap))
        throw std::invalid_argument("hybrid_fuse: dimension mismatch");
    GrayImage out = e_canny;
    for (std::size_t i = 0; i < out.data.size(); ++i)
        out.data[i] = std::max(out.data[i], e_lap.data[i]);
    return out;
}

EdgeResult run_pipeline(const GrayImage& img, const PipelineConfig& cfg) {
    EdgeResult res;
    StageClock clock(res.stage_times);

    const bool refine =
        cfg.variant == Variant::Full || cfg.variant == Variant::SchrodingerSobel;
    if (refine) {
        res.refined = evolve(img, cfg.diffusion);
    } else {
        res.refined = img;
    }
    clock.mark("diffusion");

    if (cfg.variant == Variant::SobelOnly || cfg.variant == Variant::SchrodingerSobel) {
        res.e_hybrid = sobel_edge_map(res.refined);
        clock.mark("sobel_edge_map");
        clock.finish();
        return res;
    }

    res.blurred = gaussian_blur(res.refined, cfg.blur);
    clock.mark("gaussian_blur");

    GradientField grads = sobel_gradients(res.blurred);
    clock.mark("sobel_gradients");

    GrayImage nms = non_max_suppression(grads);
    clock.mark("non_max_suppression");

    res.e_canny = hysteresis(nms, cfg.thresholds);
    clock.mark("hysteresis");

    res.e_lap = laplacian_edge_map(res.blurred);
    clock.mark("laplacian_edge_map");

    res.e_hybrid = hybrid_fuse(res.e_canny, res.e_lap);
    clock.mark("fusion");
    clock.finish();
    return res;
}

EdgeResult run_pipeline(const RgbImage& img, const PipelineConfig& cfg) {
    return run_pipeline(to_grayscale(img), cfg);
}

RgbImage overlay(const RgbImage& original, const GrayImage& edges, std::array<double, 3> color) {
    if (original.width != edges.width || original.height != edges.height)
        throw std::invalid_argument("overlay: dimension mismatch");
    RgbImage out = original;
    for (std::size_t i = 0; i < edges.data.size(); ++i) {
        if (edges.data[i] != 0.0) {
            out.data[i * 3 + 0] = color[0];
            out.data[i * 3 + 1] = color[1];
            out.data[i * 3 + 2] = color[2];
        }
    }
    return out;
}

}  // namespace qiedge
