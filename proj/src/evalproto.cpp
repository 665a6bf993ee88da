#include "lltext/evalproto.hpp"

#include "lltext/error.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <tuple>

namespace lltext {

MatchCounts match_image(std::span<const TextPolygon> preds, std::span<const TextPolygon> gts, double iou_thresh,
                        std::span<const bool> gt_ignore) {
    if (!gt_ignore.empty() && gt_ignore.size() != gts.size()) {
        throw GeometryError("match_image: ignore flags must align with ground truths");
    }
    auto ignored = [&](std::size_t g) { return !gt_ignore.empty() && gt_ignore[g]; };

    struct Candidate {
        double iou;
        std::size_t pred;
        std::size_t gt;
    };
    std::vector<Candidate> cands;
    for (std::size_t p = 0; p < preds.size(); ++p)
        for (std::size_t g = 0; g < gts.size(); ++g) {
            const double iou = polygon_iou(preds[p], gts[g]);
            if (iou >= iou_thresh && iou > 0.0) cands.push_back({iou, p, g});
        }
    std::sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) {
        if (a.iou != b.iou) return a.iou > b.iou;
        return std::tie(a.pred, a.gt) < std::tie(b.pred, b.gt);
    });

    MatchCounts out;
    std::vector<char> pred_used(preds.size(), 0), gt_used(gts.size(), 0);
    std::size_t pred_on_ignored = 0;
    for (const auto& c : cands) {
        if (pred_used[c.pred] || gt_used[c.gt]) continue;
        pred_used[c.pred] = gt_used[c.gt] = 1;
        if (ignored(c.gt)) {
            ++pred_on_ignored;
        } else {
            out.matches.emplace_back(c.pred, c.gt);
        }
    }
    std::size_t cared_gts = 0;
    for (std::size_t g = 0; g < gts.size(); ++g) cared_gts += ignored(g) ? 0 : 1;
    out.tp = out.matches.size();
    out.fp = preds.size() - out.tp - pred_on_ignored;
    out.fn = cared_gts - out.tp;
    return out;
}

double precision_of(std::size_t tp, std::size_t fp) {
    return tp + fp == 0 ? 0.0 : static_cast<double>(tp) / static_cast<double>(tp + fp);
}

double recall_of(std::size_t tp, std::size_t fn) {
    return tp + fn == 0 ? 0.0 : static_cast<double>(tp) / static_cast<double>(tp + fn);
}

double f1_score(double precision, double recall) {
    const double s = precision + recall;
    return s > 0.0 ? 2.0 * precision * recall / s : 0.0;
}

EvalReport aggregate(std::span<const ImageReport> images) {
    EvalReport r;
    r.per_image.assign(images.begin(), images.end());
    std::stable_sort(r.per_image.begin(), r.per_image.end(),
                     [](const ImageReport& a, const ImageReport& b) { return a.name < b.name; });
    for (const auto& im : images) {
        r.tp += im.tp;
        r.fp += im.fp;
        r.fn += im.fn;
    }
    r.precision = precision_of(r.tp, r.fp);
    r.recall = recall_of(r.tp, r.fn);
    r.f1 = f1_score(r.precision, r.recall);
    return r;
}

std::string format_table(const EvalReport& report) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(1);
    os << std::left << std::setw(24) << "image" << std::right << std::setw(6) << "tp" << std::setw(6) << "fp"
       << std::setw(6) << "fn" << '\n';
    for (const auto& im : report.per_image) {
        os << std::left << std::setw(24) << im.name << std::right << std::setw(6) << im.tp << std::setw(6) << im.fp
           << std::setw(6) << im.fn << '\n';
    }
    os << std::left << std::setw(24) << "total" << std::right << std::setw(6) << report.tp << std::setw(6)
       << report.fp << std::setw(6) << report.fn << '\n';
    os << "P(%) " << report.precision * 100.0 << "  R(%) " << report.recall * 100.0 << "  F1(%) "
       << report.f1 * 100.0 << '\n';
    return os.str();
}

std::string format_key_values(const EvalReport& report) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(4);
    os << "tp=" << report.tp << '\n'
       << "fp=" << report.fp << '\n'
       << "fn=" << report.fn << '\n'
       << "precision=" << report.precision * 100.0 << '\n'
       << "recall=" << report.recall * 100.0 << '\n'
       << "f1=" << report.f1 * 100.0 << '\n';
    return os.str();
}

} // namespace lltext
