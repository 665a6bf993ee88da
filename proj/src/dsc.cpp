#include "lltext/dsc.hpp"

#include "lltext/error.hpp"
#include "lltext/parallel.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace lltext {

namespace {

void validate(const Grid& input, const SnakeKernel& k) {
    require_rank(input, 4, "dsc_forward input");
    require_rank(k.weights, 3, "dsc_forward weights");
    if (k.length % 2 == 0) throw ShapeError("dsc_forward", "length", "tap count must be odd");
    if (!(k.offset_bound >= 0.0)) throw ShapeError("dsc_forward", "offset_bound", "must be >= 0");
    if (k.weights.dim(2) != k.length) throw ShapeError("dsc_forward", "weights L", "must equal kernel length");
    if (k.weights.dim(1) != input.dim(1)) {
        throw ShapeError("dsc_forward", "Cin", "input has " + std::to_string(input.dim(1)) +
                                                   " channels, weights expect " + std::to_string(k.weights.dim(1)));
    }
    if (k.offsets.empty()) return;
    require_rank(k.offsets, 3, "dsc_forward offsets");
    if (k.offsets.dim(0) != 2 * k.length) throw ShapeError("dsc_forward", "offset channels", "must be 2*length");
    if (k.offsets.dim(1) != input.dim(2)) throw ShapeError("dsc_forward", "offsets H", "must match input height");
    if (k.offsets.dim(2) != input.dim(3)) throw ShapeError("dsc_forward", "offsets W", "must match input width");
}

// Precomputed bilinear footprint of one tap.
struct Footprint {
    std::array<std::ptrdiff_t, 4> index{-1, -1, -1, -1};
    std::array<double, 4> weight{};
};

Footprint footprint(double y, double x, std::size_t height, std::size_t width) {
    Footprint f;
    const double fy = std::floor(y), fx = std::floor(x);
    const double wy = y - fy, wx = x - fx;
    const std::array<double, 4> wts{(1 - wy) * (1 - wx), (1 - wy) * wx, wy * (1 - wx), wy * wx};
    const std::array<std::int64_t, 4> dys{0, 0, 1, 1}, dxs{0, 1, 0, 1};
    for (int i = 0; i < 4; ++i) {
        if (wts[i] == 0.0) continue;
        const double yy = fy + static_cast<double>(dys[i]);
        const double xx = fx + static_cast<double>(dxs[i]);
        if (yy < 0 || xx < 0 || yy >= static_cast<double>(height) || xx >= static_cast<double>(width)) continue;
        f.index[i] = static_cast<std::ptrdiff_t>(static_cast<std::size_t>(yy) * width + static_cast<std::size_t>(xx));
        f.weight[i] = wts[i];
    }
    return f;
}

void dsc_pixel(const Grid& input, const SnakeKernel& k, std::size_t b, std::size_t y, std::size_t x, Grid& out,
               std::vector<double>& samples) {
    const std::size_t cin = input.dim(1), height = input.dim(2), width = input.dim(3);
    const std::size_t cout = k.weights.dim(0), taps = k.length, plane = height * width;
    const auto positions = snake_tap_positions(k, y, x);
    samples.assign(cin * taps, 0.0);
    for (std::size_t t = 0; t < taps; ++t) {
        const auto f = footprint(positions[t].y, positions[t].x, height, width);
        for (std::size_t ci = 0; ci < cin; ++ci) {
            const double* src = input.data().data() + (b * cin + ci) * plane;
            double v = 0.0;
            for (int i = 0; i < 4; ++i) {
                if (f.index[i] >= 0) v += f.weight[i] * src[f.index[i]];
            }
            samples[ci * taps + t] = v;
        }
    }
    for (std::size_t co = 0; co < cout; ++co) {
        const double* w = k.weights.data().data() + co * cin * taps;
        double acc = 0.0;
        for (std::size_t i = 0; i < cin * taps; ++i) acc += w[i] * samples[i];
        out.at(b, co, y, x) = acc;
    }
}

} // namespace

SnakeKernel SnakeKernel::straight(SnakeAxis axis, Grid weights, std::size_t height, std::size_t width,
                                  double offset_bound) {
    require_rank(weights, 3, "SnakeKernel weights");
    SnakeKernel k;
    k.axis = axis;
    k.length = weights.dim(2);
    k.weights = std::move(weights);
    k.offsets = Grid({2 * k.length, height, width});
    k.offset_bound = offset_bound;
    return k;
}

std::vector<SamplePoint> snake_tap_positions(const SnakeKernel& k, std::size_t y, std::size_t x) {
    const std::size_t taps = k.length;
    const std::size_t centre = (taps - 1) / 2;
    auto step = [&](std::size_t ch) {
        if (k.offsets.empty()) return 0.0;
        return std::clamp(k.offsets.at(ch, y, x), -k.offset_bound, k.offset_bound);
    };
    // along[t], perp[t] relative to the pixel, accumulated outward from the centre.
    std::vector<double> along(taps, 0.0), perp(taps, 0.0);
    for (std::size_t t = centre + 1; t < taps; ++t) {
        along[t] = along[t - 1] + 1.0 + step(taps + t);
        perp[t] = perp[t - 1] + step(t);
    }
    for (std::size_t t = centre; t-- > 0;) {
        along[t] = along[t + 1] - (1.0 + step(taps + t));
        perp[t] = perp[t + 1] + step(t);
    }
    std::vector<SamplePoint> pts(taps);
    const auto py = static_cast<double>(y), px = static_cast<double>(x);
    for (std::size_t t = 0; t < taps; ++t) {
        if (k.axis == SnakeAxis::Horizontal) {
            pts[t] = {py + perp[t], px + along[t]};
        } else {
            pts[t] = {py + along[t], px + perp[t]};
        }
    }
    return pts;
}

Grid dsc_forward(const Grid& input, const SnakeKernel& kernel) {
    validate(input, kernel);
    const std::size_t batch = input.dim(0), height = input.dim(2), width = input.dim(3);
    Grid out({batch, kernel.weights.dim(0), height, width});
    par::parallel_for(0, static_cast<std::int64_t>(batch * height), [&](std::int64_t r) {
        const auto b = static_cast<std::size_t>(r) / height;
        const auto y = static_cast<std::size_t>(r) % height;
        std::vector<double> samples;
        for (std::size_t x = 0; x < width; ++x) dsc_pixel(input, kernel, b, y, x, out, samples);
    });
    return out;
}

Grid dsc_pair_forward(const Grid& input, const SnakePair& pair) {
    return add(dsc_forward(input, pair.horizontal), dsc_forward(input, pair.vertical));
}

namespace reference {

Grid dsc_forward(const Grid& input, const SnakeKernel& kernel) {
    validate(input, kernel);
    const std::size_t batch = input.dim(0), height = input.dim(2), width = input.dim(3);
    Grid out({batch, kernel.weights.dim(0), height, width});
    std::vector<double> samples;
    for (std::size_t b = 0; b < batch; ++b)
        for (std::size_t y = 0; y < height; ++y)
            for (std::size_t x = 0; x < width; ++x) dsc_pixel(input, kernel, b, y, x, out, samples);
    return out;
}

} // namespace reference

} // namespace lltext
