#include "lltext/numgrid.hpp"

#include "lltext/error.hpp"
#include "lltext/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace lltext {

namespace {

struct ConvGeometry {
    std::size_t batch, cin, height, width;
    std::size_t cout, kh, kw;
    std::size_t out_h, out_w;
};

ConvGeometry check_conv(const Grid& input, const Grid& kernel, std::span<const double> bias,
                        const Conv2dOptions& opts) {
    require_rank(input, 4, "conv2d input");
    require_rank(kernel, 4, "conv2d kernel");
    if (opts.stride < 1) throw ShapeError("conv2d", "stride", "must be >= 1");
    if (opts.pad_h < 0 || opts.pad_w < 0) throw ShapeError("conv2d", "padding", "must be >= 0");
    ConvGeometry g{input.dim(0), input.dim(1), input.dim(2), input.dim(3),
                   kernel.dim(0), kernel.dim(2), kernel.dim(3), 0, 0};
    if (kernel.dim(1) != g.cin) {
        throw ShapeError("conv2d", "Cin", "input has " + std::to_string(g.cin) + " channels, kernel expects " +
                                              std::to_string(kernel.dim(1)));
    }
    if (g.kh % 2 == 0) throw ShapeError("conv2d", "kh", "kernel height must be odd");
    if (g.kw % 2 == 0) throw ShapeError("conv2d", "kw", "kernel width must be odd");
    if (!bias.empty() && bias.size() != g.cout) {
        throw ShapeError("conv2d", "Cout", "bias has " + std::to_string(bias.size()) + " entries, kernel has " +
                                               std::to_string(g.cout) + " outputs");
    }
    const auto padded_h = static_cast<std::int64_t>(g.height) + 2 * opts.pad_h;
    const auto padded_w = static_cast<std::int64_t>(g.width) + 2 * opts.pad_w;
    if (padded_h < static_cast<std::int64_t>(g.kh)) throw ShapeError("conv2d", "H", "kernel taller than padded input");
    if (padded_w < static_cast<std::int64_t>(g.kw)) throw ShapeError("conv2d", "W", "kernel wider than padded input");
    g.out_h = static_cast<std::size_t>((padded_h - static_cast<std::int64_t>(g.kh)) / opts.stride + 1);
    g.out_w = static_cast<std::size_t>((padded_w - static_cast<std::int64_t>(g.kw)) / opts.stride + 1);
    return g;
}

// One output row for one (batch, out-channel) pair. Summation order is fixed
// (cin, ky, kx) so the parallel and serial paths agree bit for bit.
void conv_row(const Grid& input, const Grid& kernel, std::span<const double> bias, const Conv2dOptions& opts,
              const ConvGeometry& g, std::size_t b, std::size_t co, std::size_t oy, Grid& out) {
    for (std::size_t ox = 0; ox < g.out_w; ++ox) {
        double acc = bias.empty() ? 0.0 : bias[co];
        for (std::size_t ci = 0; ci < g.cin; ++ci) {
            for (std::size_t ky = 0; ky < g.kh; ++ky) {
                const auto iy = static_cast<std::int64_t>(oy) * opts.stride + static_cast<std::int64_t>(ky) - opts.pad_h;
                if (iy < 0 || iy >= static_cast<std::int64_t>(g.height)) continue;
                for (std::size_t kx = 0; kx < g.kw; ++kx) {
                    const auto ix =
                        static_cast<std::int64_t>(ox) * opts.stride + static_cast<std::int64_t>(kx) - opts.pad_w;
                    if (ix < 0 || ix >= static_cast<std::int64_t>(g.width)) continue;
                    acc += kernel.at(co, ci, ky, kx) *
                           input.at(b, ci, static_cast<std::size_t>(iy), static_cast<std::size_t>(ix));
                }
            }
        }
        out.at(b, co, oy, ox) = acc;
    }
}

} // namespace

Grid conv2d(const Grid& input, const Grid& kernel, std::span<const double> bias, int stride, int padding) {
    return conv2d(input, kernel, bias, Conv2dOptions{stride, padding, padding});
}

Grid conv2d(const Grid& input, const Grid& kernel, std::span<const double> bias, const Conv2dOptions& opts) {
    const auto g = check_conv(input, kernel, bias, opts);
    Grid out({g.batch, g.cout, g.out_h, g.out_w});
    const auto rows = static_cast<std::int64_t>(g.batch * g.cout * g.out_h);
    par::parallel_for(0, rows, [&](std::int64_t r) {
        const auto idx = static_cast<std::size_t>(r);
        const std::size_t oy = idx % g.out_h;
        const std::size_t co = (idx / g.out_h) % g.cout;
        const std::size_t b = idx / (g.out_h * g.cout);
        conv_row(input, kernel, bias, opts, g, b, co, oy, out);
    });
    return out;
}

namespace reference {

Grid conv2d(const Grid& input, const Grid& kernel, std::span<const double> bias, const Conv2dOptions& opts) {
    const auto g = check_conv(input, kernel, bias, opts);
    Grid out({g.batch, g.cout, g.out_h, g.out_w});
    for (std::size_t b = 0; b < g.batch; ++b)
        for (std::size_t co = 0; co < g.cout; ++co)
            for (std::size_t oy = 0; oy < g.out_h; ++oy) conv_row(input, kernel, bias, opts, g, b, co, oy, out);
    return out;
}

} // namespace reference

double bilinear_at(std::span<const double> plane, std::size_t height, std::size_t width, double y, double x) {
    const double fy = std::floor(y);
    const double fx = std::floor(x);
    // Far outside: every neighbour is padding.
    if (!(fy >= -1.0 && fy < static_cast<double>(height) && fx >= -1.0 && fx < static_cast<double>(width))) {
        return 0.0;
    }
    const auto y0 = static_cast<std::int64_t>(fy);
    const auto x0 = static_cast<std::int64_t>(fx);
    const double wy = y - fy;
    const double wx = x - fx;
    auto read = [&](std::int64_t yy, std::int64_t xx) {
        if (yy < 0 || xx < 0 || yy >= static_cast<std::int64_t>(height) || xx >= static_cast<std::int64_t>(width)) {
            return 0.0;
        }
        return plane[static_cast<std::size_t>(yy) * width + static_cast<std::size_t>(xx)];
    };
    double v = (1.0 - wy) * (1.0 - wx) * read(y0, x0);
    if (wx != 0.0) v += (1.0 - wy) * wx * read(y0, x0 + 1);
    if (wy != 0.0) {
        v += wy * (1.0 - wx) * read(y0 + 1, x0);
        if (wx != 0.0) v += wy * wx * read(y0 + 1, x0 + 1);
    }
    return v;
}

Grid bilinear_sample(const Grid& input, std::span<const SamplePoint> points) {
    require_rank(input, 3, "bilinear_sample input");
    const std::size_t channels = input.dim(0), height = input.dim(1), width = input.dim(2);
    Grid out({channels, points.size()});
    const std::size_t plane = height * width;
    for (std::size_t c = 0; c < channels; ++c) {
        auto src = input.data().subspan(c * plane, plane);
        for (std::size_t n = 0; n < points.size(); ++n) {
            out.at(c, n) = bilinear_at(src, height, width, points[n].y, points[n].x);
        }
    }
    return out;
}

Grid row_softmax(const Grid& input) {
    require_rank(input, 2, "row_softmax");
    const std::size_t rows = input.dim(0), cols = input.dim(1);
    Grid out(input.shape());
    for (std::size_t r = 0; r < rows; ++r) {
        double peak = -std::numeric_limits<double>::infinity();
        for (std::size_t c = 0; c < cols; ++c) peak = std::max(peak, input.at(r, c));
        double total = 0.0;
        for (std::size_t c = 0; c < cols; ++c) {
            const double e = std::exp(input.at(r, c) - peak);
            out.at(r, c) = e;
            total += e;
        }
        for (std::size_t c = 0; c < cols; ++c) out.at(r, c) /= total;
    }
    return out;
}

Grid upsample2x(const Grid& input) {
    require_rank(input, 4, "upsample2x");
    const std::size_t batch = input.dim(0), channels = input.dim(1), height = input.dim(2), width = input.dim(3);
    Grid out({batch, channels, 2 * height, 2 * width});
    auto source = [](std::size_t dst, std::size_t extent, std::size_t& lo, std::size_t& hi, double& frac) {
        double s = (static_cast<double>(dst) + 0.5) / 2.0 - 0.5;
        s = std::clamp(s, 0.0, static_cast<double>(extent - 1));
        lo = static_cast<std::size_t>(std::floor(s));
        hi = std::min(lo + 1, extent - 1);
        frac = s - static_cast<double>(lo);
    };
    for (std::size_t b = 0; b < batch; ++b)
        for (std::size_t c = 0; c < channels; ++c)
            for (std::size_t oy = 0; oy < 2 * height; ++oy) {
                std::size_t y0, y1;
                double fy;
                source(oy, height, y0, y1, fy);
                for (std::size_t ox = 0; ox < 2 * width; ++ox) {
                    std::size_t x0, x1;
                    double fx;
                    source(ox, width, x0, x1, fx);
                    const double top = (1.0 - fx) * input.at(b, c, y0, x0) + fx * input.at(b, c, y0, x1);
                    const double bottom = (1.0 - fx) * input.at(b, c, y1, x0) + fx * input.at(b, c, y1, x1);
                    out.at(b, c, oy, ox) = (1.0 - fy) * top + fy * bottom;
                }
            }
    return out;
}

double sigmoid(double v) {
    if (v >= 0.0) return 1.0 / (1.0 + std::exp(-v));
    const double e = std::exp(v);
    return e / (1.0 + e);
}

Grid sigmoid(const Grid& input) {
    Grid out(input.shape());
    for (std::size_t i = 0; i < input.size(); ++i) out[i] = sigmoid(input[i]);
    return out;
}

Grid concat_channels(const Grid& a, const Grid& b) {
    require_rank(a, 4, "concat_channels lhs");
    require_rank(b, 4, "concat_channels rhs");
    if (a.dim(0) != b.dim(0)) throw ShapeError("concat_channels", "B", "batch sizes differ");
    if (a.dim(2) != b.dim(2)) throw ShapeError("concat_channels", "H", "heights differ");
    if (a.dim(3) != b.dim(3)) throw ShapeError("concat_channels", "W", "widths differ");
    const std::size_t batch = a.dim(0), ca = a.dim(1), cb = b.dim(1), plane = a.dim(2) * a.dim(3);
    Grid out({batch, ca + cb, a.dim(2), a.dim(3)});
    auto dst = out.data();
    for (std::size_t n = 0; n < batch; ++n) {
        auto sa = a.data().subspan(n * ca * plane, ca * plane);
        auto sb = b.data().subspan(n * cb * plane, cb * plane);
        std::copy(sa.begin(), sa.end(), dst.begin() + static_cast<std::ptrdiff_t>(n * (ca + cb) * plane));
        std::copy(sb.begin(), sb.end(), dst.begin() + static_cast<std::ptrdiff_t>((n * (ca + cb) + ca) * plane));
    }
    return out;
}

Grid add(const Grid& a, const Grid& b) {
    require_same_shape(a, b, "add");
    Grid out(a.shape());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

} // namespace lltext
