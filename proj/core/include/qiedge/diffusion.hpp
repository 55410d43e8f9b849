#pragma once

#include "qiedge/image.hpp"

namespace qiedge {

enum class LaplacianStencil {
    FourNeighbor,  // direct 4-neighbor second difference
    Weighted,      // 3x3 stencil {0,1,0; 1,-4,1; 0,1,0} applied via convolve
};

struct DiffusionConfig {
    double delta = 0.1;  // diffusion coefficient; explicit scheme is stable for delta <= 0.25
    int time_steps = 10;
    LaplacianStencil stencil = LaplacianStencil::FourNeighbor;
};

/// Discrete Laplacian with replicate padding. Output may be negative.
GrayImage laplacian(const GrayImage& img, LaplacianStencil stencil);

/// One explicit diffusion update: clip(img + delta * laplacian(img), 0, 255).
GrayImage diffuse_step(const GrayImage& img, double delta, LaplacianStencil stencil);

/// T-fold composition of diffuse_step; T = 0 returns the input unchanged.
GrayImage evolve(const GrayImage& img, const DiffusionConfig& cfg);

}  // namespace qiedge
