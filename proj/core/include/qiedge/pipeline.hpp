#pragma once

#include "qiedge/canny.hpp"
#include "qiedge/diffusion.hpp"
#include "qiedge/edge_filters.hpp"
#include "qiedge/image.hpp"

#include <array>
#include <string>
#include <utility>
#include <vector>

namespace qiedge {

enum class Variant {
    SobelOnly,         // rescaled Sobel magnitude of the raw grayscale
    SchrodingerSobel,  // diffusion refinement, then rescaled Sobel magnitude
    HybridOnly,        // Canny + Laplacian fusion without refinement
    Full,              // refinement, then Canny + Laplacian fusion
};

const char* variant_name(Variant v);
Variant variant_from_name(const std::string& name);  // throws on unknown name

struct PipelineConfig {
    Variant variant = Variant::Full;
    DiffusionConfig diffusion;
    GaussianSpec blur;
    CannyThresholds thresholds;
    double binarize_at = 128.0;  // downstream threshold for metrics binarization
};

struct StageTimes {
    std::vector<std::pair<std::string, double>> stages;  // seconds, in execution order
    double total = 0.0;
};

struct EdgeResult {
    GrayImage refined;   // psi after diffusion (input copy when refinement is skipped)
    GrayImage blurred;   // Gaussian-smoothed refined image (hybrid variants only)
    GrayImage e_canny;   // binary {0, 255}
    GrayImage e_lap;     // [0, 255]
    GrayImage e_hybrid;  // [0, 255] soft map
    StageTimes stage_times;
};

/// Pointwise max of the two edge maps. Dimensions must agree.
GrayImage hybrid_fuse(const GrayImage& e_canny, const GrayImage& e_lap);

EdgeResult run_pipeline(const GrayImage& img, const PipelineConfig& cfg);
EdgeResult run_pipeline(const RgbImage& img, const PipelineConfig& cfg);

/// Copy of the original with binary edge pixels painted in the given color.
RgbImage overlay(const RgbImage& original, const GrayImage& edges, std::array<double, 3> color);

}  // namespace qiedge
