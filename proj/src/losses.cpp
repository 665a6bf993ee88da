#include "lltext/losses.hpp"

#include "lltext/error.hpp"

#include <algorithm>
#include <cmath>

namespace lltext {

namespace {

// Mean BCE of one map; writes d(loss)/d(pred) into grad.
double bce(const Grid& pred, const Grid& gt, Grid& grad) {
    grad = Grid(pred.shape());
    if (pred.size() == 0) return 0.0;
    const double n = static_cast<double>(pred.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < pred.size(); ++i) {
        const double p = std::clamp(pred[i], kBceEpsilon, 1.0 - kBceEpsilon);
        const double y = gt[i];
        acc -= y * std::log(p) + (1.0 - y) * std::log(1.0 - p);
        grad[i] = (-y / p + (1.0 - y) / (1.0 - p)) / n;
    }
    return acc / n;
}

Grid scaled(Grid g, double w) {
    if (w != 1.0) {
        for (auto& v : g.data()) v *= w;
    }
    return g;
}

} // namespace

SegLoss loss_seg(const Grid& pred_text, const Grid& pred_center, const Grid& gt_text, const Grid& gt_center) {
    require_same_shape(pred_text, gt_text, "loss_seg text");
    require_same_shape(pred_center, gt_center, "loss_seg center");
    SegLoss out;
    out.loss = bce(pred_text, gt_text, out.grad_text);
    out.loss += bce(pred_center, gt_center, out.grad_center);
    return out;
}

LossGrad smooth_l1(const Grid& pred, const Grid& gt, double beta, const Grid& region) {
    require_same_shape(pred, gt, "smooth_l1");
    require_same_shape(pred, region, "smooth_l1 region");
    if (!(beta > 0.0)) throw ShapeError("smooth_l1", "beta", "must be positive");
    LossGrad out{0.0, Grid(pred.shape())};
    std::size_t count = 0;
    for (std::size_t i = 0; i < region.size(); ++i) count += region[i] > 0.5 ? 1 : 0;
    if (count == 0) return out;
    const double n = static_cast<double>(count);
    for (std::size_t i = 0; i < pred.size(); ++i) {
        if (region[i] <= 0.5) continue;
        const double e = pred[i] - gt[i];
        const double a = std::abs(e);
        if (a < beta) {
            out.loss += 0.5 * e * e / beta;
            out.grad[i] = e / beta / n;
        } else {
            out.loss += a - 0.5 * beta;
            out.grad[i] = (e > 0.0 ? 1.0 : -1.0) / n;
        }
    }
    out.loss /= n;
    return out;
}

TotalLoss total_loss(const Predictions& pred, const Targets& gt, const LossWeights& weights) {
    pred.maps.validate();
    const auto seg = loss_seg(pred.maps.text, pred.maps.center, gt.text, gt.center);
    const auto lh = smooth_l1(pred.maps.h, gt.h, 1.0, gt.text);
    const auto lt = smooth_l1(pred.maps.theta, gt.theta, 1.0, gt.text);
    const auto ss = loss_ss(pred.aux_feat, pred.main_feat);
    const auto sr = loss_sr(pred.reconstruction, gt.position);

    TotalLoss out;
    auto& b = out.bundle;
    b.l_seg = seg.loss;
    b.l_h = lh.loss;
    b.l_theta = lt.loss;
    b.l_ss = ss.loss;
    b.l_sr = sr.loss;
    b.total = weights.seg * b.l_seg + weights.h * b.l_h + weights.theta * b.l_theta + weights.ss * b.l_ss +
              weights.sr * b.l_sr;

    auto& g = out.grads;
    g.text = scaled(seg.grad_text, weights.seg);
    g.center = scaled(seg.grad_center, weights.seg);
    g.h = scaled(lh.grad, weights.h);
    g.theta = scaled(lt.grad, weights.theta);
    g.aux_feat = scaled(ss.grad_a, weights.ss);
    g.main_feat = scaled(ss.grad_b, weights.ss);
    g.reconstruction = scaled(sr.grad, weights.sr);
    return out;
}

} // namespace lltext
