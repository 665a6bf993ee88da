#pragma once

#include "lltext/grid.hpp"
#include "lltext/maps.hpp"
#include "lltext/scm.hpp"

namespace lltext {

inline constexpr double kBceEpsilon = 1e-7;

struct SegLoss {
    double loss = 0.0;
    Grid grad_text;
    Grid grad_center;
};

/// Mean binary cross-entropy of the text map plus that of the centre map.
/// Predictions are clamped to [eps, 1-eps]; gradients are taken at the
/// clamped value.
SegLoss loss_seg(const Grid& pred_text, const Grid& pred_center, const Grid& gt_text, const Grid& gt_center);

/// Smooth-L1 averaged over pixels where `region` is set. An empty region
/// gives zero loss and zero gradient.
LossGrad smooth_l1(const Grid& pred, const Grid& gt, double beta, const Grid& region);

struct Predictions {
    GeometryMaps maps;
    Grid reconstruction;  // SCM decoder output [H,W]
    Grid aux_feat;        // SCM semantic features
    Grid main_feat;       // main-branch features they are aligned to
};

struct Targets {
    Grid text;    // binary
    Grid center;  // binary
    Grid h;
    Grid theta;
    PositionMask position;
};

struct LossWeights {
    double seg = 1.0;
    double h = 1.0;
    double theta = 1.0;
    double ss = 1.0;
    double sr = 1.0;
};

struct LossBundle {
    double l_seg = 0.0;
    double l_h = 0.0;
    double l_theta = 0.0;
    double l_ss = 0.0;
    double l_sr = 0.0;
    double total = 0.0;
};

/// Gradients of the weighted total w.r.t. each predicted tensor.
struct LossGradients {
    Grid text;
    Grid center;
    Grid h;
    Grid theta;
    Grid reconstruction;
    Grid aux_feat;
    Grid main_feat;
};

struct TotalLoss {
    LossBundle bundle;
    LossGradients grads;
};

/// total = seg + h + theta + ss + sr, each term weighted (default 1).
/// Height and angle are supervised inside the ground-truth text region only.
TotalLoss total_loss(const Predictions& pred, const Targets& gt, const LossWeights& weights = {});

} // namespace lltext
