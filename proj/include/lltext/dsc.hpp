#pragma once

#include "lltext/grid.hpp"
#include "lltext/numgrid.hpp"

#include <cstddef>
#include <vector>

namespace lltext {

enum class SnakeAxis { Horizontal, Vertical };

/// A 1-D kernel whose taps wander off the straight line by accumulated,
/// clamped per-step offsets.
///
/// `offsets` is [2*length, H, W]: channel k carries tap k's perpendicular
/// step, channel length+k its along-axis step. The centre tap never moves.
/// Offsets are shared by all input channels. An empty offset grid means a
/// straight kernel.
struct SnakeKernel {
    SnakeAxis axis = SnakeAxis::Horizontal;
    std::size_t length = 9;
    Grid weights;  // [Cout, Cin, length]
    Grid offsets;  // [2*length, H, W]
    double offset_bound = 1.0;

    /// Kernel with an all-zero offset field sized for an H x W input.
    static SnakeKernel straight(SnakeAxis axis, Grid weights, std::size_t height, std::size_t width,
                                double offset_bound = 1.0);

    std::size_t out_channels() const { return weights.dim(0); }
    std::size_t in_channels() const { return weights.dim(1); }
};

/// Sample positions of every tap for the output pixel (y, x), ordered from
/// the most negative tap to the most positive one.
std::vector<SamplePoint> snake_tap_positions(const SnakeKernel& kernel, std::size_t y, std::size_t x);

/// [B,Cin,H,W] -> [B,Cout,H,W]
Grid dsc_forward(const Grid& input, const SnakeKernel& kernel);

/// Horizontal and vertical snake kernels evaluated on the same input and summed.
struct SnakePair {
    SnakeKernel horizontal;
    SnakeKernel vertical;
};

Grid dsc_pair_forward(const Grid& input, const SnakePair& pair);

namespace reference {
Grid dsc_forward(const Grid& input, const SnakeKernel& kernel);
}

} // namespace lltext
