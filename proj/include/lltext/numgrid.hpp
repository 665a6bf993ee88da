#pragma once

#include "lltext/grid.hpp"

#include <span>
#include <vector>

namespace lltext {

struct SamplePoint {
    double y = 0.0;
    double x = 0.0;
};

struct Conv2dOptions {
    int stride = 1;
    int pad_h = 0;
    int pad_w = 0;
};

/// Cross-correlation of [B,Cin,H,W] with [Cout,Cin,kh,kw] plus per-channel
/// bias. Out-of-frame taps read zero. kh and kw must be odd.
Grid conv2d(const Grid& input, const Grid& kernel, std::span<const double> bias, int stride, int padding);
Grid conv2d(const Grid& input, const Grid& kernel, std::span<const double> bias, const Conv2dOptions& opts);

/// Bilinear interpolation of [C,H,W] at fractional (y,x) points -> [C,N].
/// Cells outside the frame contribute zero.
Grid bilinear_sample(const Grid& input, std::span<const SamplePoint> points);

/// Single-channel bilinear read of a plane with zero padding.
double bilinear_at(std::span<const double> plane, std::size_t height, std::size_t width, double y, double x);

/// Numerically stable softmax over each row of [N,M].
Grid row_softmax(const Grid& input);

/// Bilinear 2x upsampling of [B,C,H,W] (half-pixel centres, edge clamp).
Grid upsample2x(const Grid& input);

Grid sigmoid(const Grid& input);
double sigmoid(double v);

/// Concatenates two [B,*,H,W] tensors along the channel axis.
Grid concat_channels(const Grid& a, const Grid& b);

Grid add(const Grid& a, const Grid& b);

namespace reference {

/// Serial direct-summation convolution, kept as the correctness baseline for
/// the parallel kernel.
Grid conv2d(const Grid& input, const Grid& kernel, std::span<const double> bias, const Conv2dOptions& opts);

} // namespace reference

} // namespace lltext
