#pragma once

#include "lltext/geom.hpp"
#include "lltext/grid.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace lltext {

/// Binary text-position target rasterised from ground-truth polygons.
struct PositionMask {
    Grid mask;  // [H,W], 1 where a pixel centre is inside any polygon
    std::vector<TextPolygon> polygons;
};

PositionMask build_position_mask(std::span<const TextPolygon> polygons, std::size_t height, std::size_t width);

/// Fixed [C,H,W] embedding: even channels hold the normalised row
/// coordinate (i+0.5)/H, odd channels the column coordinate (j+0.5)/W.
Grid positional_embedding(std::size_t channels, std::size_t height, std::size_t width);

/// features [B,C,H,W] + embedding [C,H,W], broadcast over the batch.
Grid merge_positional(const Grid& features, const Grid& embedding);

/// Two 3x3 convolutions C -> C/2 (ReLU) -> 1 (logistic).
struct ScmDecoder {
    Grid w1;
    std::vector<double> b1;
    Grid w2;
    std::vector<double> b2;

    static ScmDecoder seeded(std::size_t channels, std::uint64_t seed, double init_range = 0.05);

    /// [B,C,H,W] -> [B,1,H,W] in (0,1).
    Grid forward(const Grid& features) const;
};

/// Merges the positional embedding into `features` and decodes a position
/// reconstruction [H,W] for batch item 0.
Grid scm_reconstruct(const Grid& features, const ScmDecoder& decoder);

struct LossGrad {
    double loss = 0.0;
    Grid grad;
};

struct PairLossGrad {
    double loss = 0.0;
    Grid grad_a;
    Grid grad_b;
};

/// Mean absolute error against the binary mask; subgradient 0 at zero error.
LossGrad loss_sr(const Grid& reconstruction, const PositionMask& target);

/// Mean squared error between auxiliary and main-branch features.
PairLossGrad loss_ss(const Grid& aux_feat, const Grid& main_feat);

} // namespace lltext
