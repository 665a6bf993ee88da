#pragma once

#include "lltext/geom.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace lltext {

struct MatchCounts {
    std::size_t tp = 0;
    std::size_t fp = 0;
    std::size_t fn = 0;
    /// Accepted (pred index, gt index) pairs.
    std::vector<std::pair<std::size_t, std::size_t>> matches;
};

/// Greedy one-to-one matching in descending IoU order; ties go to the lower
/// (pred, gt) index pair. A pair is accepted when IoU >= iou_thresh.
/// Ground truths flagged in `gt_ignore` never count as misses, and a
/// prediction matched to one counts as neither hit nor false alarm.
MatchCounts match_image(std::span<const TextPolygon> preds, std::span<const TextPolygon> gts,
                        double iou_thresh = 0.5, std::span<const bool> gt_ignore = {});

struct ImageReport {
    std::string name;
    std::size_t tp = 0;
    std::size_t fp = 0;
    std::size_t fn = 0;
};

struct EvalReport {
    std::size_t tp = 0;
    std::size_t fp = 0;
    std::size_t fn = 0;
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
    std::vector<ImageReport> per_image;
};

double precision_of(std::size_t tp, std::size_t fp);
double recall_of(std::size_t tp, std::size_t fn);
/// Harmonic mean, 0 when both are 0. Works in fractions or percent.
double f1_score(double precision, double recall);

/// Sums counts over images and derives P/R/F1 from the totals. Per-image
/// rows are kept sorted by name so the result does not depend on input order.
EvalReport aggregate(std::span<const ImageReport> images);

/// Aligned table with percentages.
std::string format_table(const EvalReport& report);
/// `key=value` lines: tp, fp, fn, precision, recall, f1 (percent, 4 decimals).
std::string format_key_values(const EvalReport& report);

} // namespace lltext
