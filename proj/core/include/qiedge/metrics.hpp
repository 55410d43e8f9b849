#pragma once

#include "qiedge/image.hpp"

#include <cstdint>
#include <vector>

namespace qiedge {

struct MatchTally {
    std::int64_t tp = 0;   // matched predictions
    std::int64_t fp = 0;   // unmatched predictions
    std::int64_t fn_ = 0;  // unmatched ground-truth pixels
};

struct PRPoint {
    double threshold = 0.0;
    double precision = 0.0;
    double recall = 0.0;
    double f = 0.0;
    MatchTally tally;
};

using ImageCurve = std::vector<PRPoint>;

struct EvalReport {
    double ods = 0.0;            // best mean per-image F over a shared threshold
    double ois = 0.0;            // mean of per-image best F
    double ap = 0.0;             // area under the dataset PR curve
    double f_at_ods = 0.0;       // equals ods (F is the optimized quantity)
    double ods_threshold = 0.0;  // threshold achieving ods
    std::vector<ImageCurve> per_image_curves;
};

/// F1 with the zero-denominator convention f = 0.
double f_measure(double precision, double recall);

/// Greedy one-to-one correspondence: predicted edge pixels in row-major
/// order, each matched to the nearest unmatched ground-truth pixel within
/// Euclidean distance <= tol (row-major tie-break). Nonzero = edge.
MatchTally match_edges(const GrayImage& pred, const GrayImage& gt, double tol);

/// Binarize at value >= t, mapped to {0, 255}.
GrayImage binarize(const GrayImage& soft, double t);

/// Zhang-Suen thinning of a binary map. Off by default in pr_curve.
GrayImage morphological_thin(const GrayImage& binary);

/// Sweep thresholds (strictly increasing) over a soft map against binary
/// ground truth. precision = 1 when there are no predictions; recall = 1
/// when the ground truth is empty.
ImageCurve pr_curve(const GrayImage& soft, const GrayImage& gt,
                    const std::vector<double>& thresholds, double tol,
                    bool thin_predictions = false);

/// Aggregate per-image curves sharing one threshold grid into ODS/OIS/AP.
EvalReport dataset_scores(const std::vector<ImageCurve>& curves);

/// 99 evenly spaced levels over [1, 254].
std::vector<double> default_threshold_grid();

/// 0.0075 x image diagonal, the boundary-benchmark convention.
double default_tolerance(int width, int height);

}  // namespace qiedge
