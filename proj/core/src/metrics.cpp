#include "qiedge/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace qiedge {

namespace {

struct Pixel {
    int x;
    int y;
};

std::vector<Pixel> edge_pixels(const GrayImage& img) {
    std::vector<Pixel> out;
    for (int y = 0; y < img.height; ++y)
        for (int x = 0; x < img.width; ++x)
            if (img.at(x, y) != 0.0) out.push_back({x, y});
    return out;
}

}  // namespace

double f_measure(double precision, double recall) {
    const double s = precision + recall;
    return s == 0.0 ? 0.0 : 2.0 * precision * recall / s;
}

MatchTally match_edges(const GrayImage& pred, const GrayImage& gt, double tol) {
    if (!pred.same_size(gt)) throw std::invalid_argument("match_edges: dimension mismatch");
    if (tol < 0.0) throw std::invalid_argument("match_edges: tol must be >= 0");

    const std::vector<Pixel> preds = edge_pixels(pred);
    const std::vector<Pixel> gts = edge_pixels(gt);

    // Bucket ground-truth pixels so the nearest-neighbour search only touches
    // cells within tol of the query.
    const int cell = std::max(1, static_cast<int>(std::ceil(tol)));
    const int gw = (gt.width + cell - 1) / cell;
    const int gh = (gt.height + cell - 1) / cell;
    std::vector<std::vector<int>> buckets(static_cast<std::size_t>(gw) * gh);
    for (int i = 0; i < static_cast<int>(gts.size()); ++i) {
        buckets[static_cast<std::size_t>(gts[i].y / cell) * gw + gts[i].x / cell].push_back(i);
    }
    std::vector<bool> taken(gts.size(), false);

    const double tol_sq = tol * tol;
    MatchTally tally;
    for (const Pixel& p : preds) {
        int best = -1;
        double best_d = std::numeric_limits<double>::infinity();
        const int cx = p.x / cell, cy = p.y / cell;
        for (int by = std::max(0, cy - 1); by <= std::min(gh - 1, cy + 1); ++by) {
            for (int bx = std::max(0, cx - 1); bx <= std::min(gw - 1, cx + 1); ++bx) {
                for (int gi : buckets[static_cast<std::size_t>(by) * gw + bx]) {
                    if (taken[gi]) continue;
                    const double dx = p.x - gts[gi].x, dy = p.y - gts[gi].y;
                    const double d = dx * dx + dy * dy;
                    if (d > tol_sq) continue;
                    // Row-major tie-break: bucket iteration already visits
                    // candidates in row-major order within a cell, but not
                    // across cells, so compare indices on exact ties.
                    if (d < best_d || (d == best_d && (best < 0 || gi < best))) {
                        best_d = d;
                        best = gi;
                    }
                }
            }
        }
        if (best >= 0) {
            taken[best] = true;
            ++tally.tp;
        } else {
            ++tally.fp;
        }
    }
    tally.fn_ = static_cast<std::int64_t>(gts.size()) - tally.tp;
    return tally;
}

GrayImage binarize(const GrayImage& soft, double t) {
    GrayImage out(soft.width, soft.height);
    for (std::size_t i = 0; i < soft.data.size(); ++i)
        out.data[i] = soft.data[i] >= t ? 255.0 : 0.0;
    return out;
}

GrayImage morphological_thin(const GrayImage& binary) {
    const int w = binary.width, h = binary.height;
    std::vector<char> img(binary.data.size());
    for (std::size_t i = 0; i < img.size(); ++i) img[i] = binary.data[i] != 0.0 ? 1 : 0;

    auto px = [&](int x, int y) -> char {
        return (x < 0 || x >= w || y < 0 || y >= h) ? 0 : img[static_cast<std::size_t>(y) * w + x];
    };

    bool changed = true;
    while (changed) {
        changed = false;
        for (int pass = 0; pass < 2; ++pass) {
            std::vector<std::size_t> to_clear;
            for (int y = 0; y < h; ++y) {
                for (int x = 0; x < w; ++x) {
                    if (!px(x, y)) continue;
                    const char p2 = px(x, y - 1), p3 = px(x + 1, y - 1), p4 = px(x + 1, y);
                    const char p5 = px(x + 1, y + 1), p6 = px(x, y + 1), p7 = px(x - 1, y + 1);
                    const char p8 = px(x - 1, y), p9 = px(x - 1, y - 1);
                    const int b = p2 + p3 + p4 + p5 + p6 + p7 + p8 + p9;
                    if (b < 2 || b > 6) continue;
                    const char seq[9] = {p2, p3, p4, p5, p6, p7, p8, p9, p2};
                    int a = 0;
                    for (int i = 0; i < 8; ++i)
                        if (seq[i] == 0 && seq[i + 1] == 1) ++a;
                    if (a != 1) continue;
                    if (pass == 0) {
                        if (p2 * p4 * p6 != 0 || p4 * p6 * p8 != 0) continue;
                    } else {
                        if (p2 * p4 * p8 != 0 || p2 * p6 * p8 != 0) continue;
                    }
                    to_clear.push_back(static_cast<std::size_t>(y) * w + x);
                }
            }
            for (std::size_t i : to_clear) img[i] = 0;
            changed = changed || !to_clear.empty();
        }
    }

    GrayImage out(w, h);
    for (std::size_t i = 0; i < img.size(); ++i) out.data[i] = img[i] ? 255.0 : 0.0;
    return out;
}

ImageCurve pr_curve(const GrayImage& soft, const GrayImage& gt,
                    const std::vector<double>& thresholds, double tol, bool thin_predictions) {
    for (std::size_t i = 1; i < thresholds.size(); ++i)
        if (!(thresholds[i] > thresholds[i - 1]))
            throw std::invalid_argument("pr_curve: thresholds must be strictly increasing");

    ImageCurve curve;
    curve.reserve(thresholds.size());
    for (double t : thresholds) {
        GrayImage pred = binarize(soft, t);
        if (thin_predictions) pred = morphological_thin(pred);
        PRPoint pt;
        pt.threshold = t;
        pt.tally = match_edges(pred, gt, tol);
        const auto& m = pt.tally;
        pt.precision = (m.tp + m.fp) == 0 ? 1.0 : static_cast<double>(m.tp) / (m.tp + m.fp);
        pt.recall = (m.tp + m.fn_) == 0 ? 1.0 : static_cast<double>(m.tp) / (m.tp + m.fn_);
        pt.f = f_measure(pt.precision, pt.recall);
        curve.push_back(pt);
    }
    return curve;
}

EvalReport dataset_scores(const std::vector<ImageCurve>& curves) {
    if (curves.empty()) throw std::invalid_argument("dataset_scores: empty dataset");
    const std::size_t n_thresh = curves.front().size();
    if (n_thresh == 0) throw std::invalid_argument("dataset_scores: empty threshold grid");
    for (const ImageCurve& c : curves)
        if (c.size() != n_thresh)
            throw std::invalid_argument("dataset_scores: curves must share the threshold grid");

    EvalReport report;
    report.per_image_curves = curves;

    // ODS: best mean per-image F over a shared threshold. Mean aggregation
    // keeps OIS >= ODS an identity (the per-image max dominates the value at
    // any fixed threshold). Pooled tallies still drive the AP curve below.
    std::vector<double> pooled_p(n_thresh), pooled_r(n_thresh);
    report.ods_threshold = curves.front().front().threshold;
    for (std::size_t t = 0; t < n_thresh; ++t) {
        MatchTally sum;
        double f_sum = 0.0;
        for (const ImageCurve& c : curves) {
            sum.tp += c[t].tally.tp;
            sum.fp += c[t].tally.fp;
            sum.fn_ += c[t].tally.fn_;
            f_sum += c[t].f;
        }
        pooled_p[t] = (sum.tp + sum.fp) == 0 ? 1.0 : static_cast<double>(sum.tp) / (sum.tp + sum.fp);
        pooled_r[t] = (sum.tp + sum.fn_) == 0 ? 1.0 : static_cast<double>(sum.tp) / (sum.tp + sum.fn_);
        const double f = f_sum / static_cast<double>(curves.size());
        if (f > report.ods) {
            report.ods = f;
            report.ods_threshold = curves.front()[t].threshold;
        }
    }
    report.f_at_ods = report.ods;

    // OIS: mean of per-image best F.
    double ois_sum = 0.0;
    for (const ImageCurve& c : curves) {
        double best = 0.0;
        for (const PRPoint& pt : c) best = std::max(best, pt.f);
        ois_sum += best;
    }
    report.ois = ois_sum / static_cast<double>(curves.size());

    // AP: trapezoidal area under the pooled PR curve, precision made
    // non-increasing in recall, anchored at recall 0.
    std::vector<std::size_t> order(n_thresh);
    for (std::size_t i = 0; i < n_thresh; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return pooled_r[a] < pooled_r[b]; });
    std::vector<double> r(n_thresh), p(n_thresh);
    for (std::size_t i = 0; i < n_thresh; ++i) {
        r[i] = pooled_r[order[i]];
        p[i] = pooled_p[order[i]];
    }
    for (std::size_t i = n_thresh - 1; i-- > 0;) p[i] = std::max(p[i], p[i + 1]);
    double ap = r[0] * p[0];
    for (std::size_t i = 0; i + 1 < n_thresh; ++i)
        ap += (r[i + 1] - r[i]) * 0.5 * (p[i] + p[i + 1]);
    report.ap = std::clamp(ap, 0.0, 1.0);

    return report;
}

std::vector<double> default_threshold_grid() {
    std::vector<double> grid;
    grid.reserve(99);
    // 99 evenly spaced levels over [1, 254]
    for (int i = 0; i < 99; ++i) grid.push_back(1.0 + 253.0 * i / 98.0);
    return grid;
}

double default_tolerance(int width, int height) {
    return 0.0075 * std::hypot(static_cast<double>(width), static_cast<double>(height));
}

}  // namespace qiedge
