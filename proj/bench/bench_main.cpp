// Parallel kernels against their serial references, and FPS against NMS.
#include "lltext/dataio.hpp"
#include "lltext/dsc.hpp"
#include "lltext/dsf.hpp"
#include "lltext/geom.hpp"
#include "lltext/numgrid.hpp"
#include "lltext/random.hpp"
#include "lltext/tsr.hpp"

#include <benchmark/benchmark.h>

using namespace lltext;

namespace {

Grid random_grid(Grid::Shape shape, std::uint64_t seed, double lo = -1.0, double hi = 1.0) {
    Grid g(std::move(shape));
    SeededUniform u(seed);
    for (auto& v : g.data()) v = u.next(lo, hi);
    return g;
}

Grid random_mask(std::size_t side, std::uint64_t seed) {
    Grid g = random_grid({side, side}, seed, 0, 1);
    for (auto& v : g.data()) v = v > 0.7 ? 1.0 : 0.0;
    return g;
}

template <bool Reference>
void BM_Conv2d(benchmark::State& state) {
    const auto c = static_cast<std::size_t>(state.range(0));
    const Grid in = random_grid({1, c, 64, 64}, 1);
    const Grid k = random_grid({c, c, 3, 3}, 2);
    const std::vector<double> bias(c, 0.1);
    const Conv2dOptions opts{1, 1, 1};
    for (auto _ : state) {
        if constexpr (Reference) {
            benchmark::DoNotOptimize(reference::conv2d(in, k, bias, opts));
        } else {
            benchmark::DoNotOptimize(conv2d(in, k, bias, opts));
        }
    }
}

SnakeKernel snake(std::size_t c, std::size_t side) {
    auto k = SnakeKernel::straight(SnakeAxis::Horizontal, random_grid({c, c, 9}, 3), side, side);
    k.offsets = random_grid({18, side, side}, 4, -0.8, 0.8);
    return k;
}

template <bool Reference>
void BM_Dsc(benchmark::State& state) {
    const auto c = static_cast<std::size_t>(state.range(0));
    const Grid in = random_grid({1, c, 48, 48}, 5);
    const auto k = snake(c, 48);
    for (auto _ : state) {
        if constexpr (Reference) {
            benchmark::DoNotOptimize(reference::dsc_forward(in, k));
        } else {
            benchmark::DoNotOptimize(dsc_forward(in, k));
        }
    }
}

template <bool Reference>
void BM_Attention(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const std::size_t d = 32;
    const AttentionParams p{random_grid({d, d}, 6, -0.1, 0.1), random_grid({d, d}, 7, -0.1, 0.1),
                            std::vector<double>(d, 0.0), std::vector<double>(d, 0.0), d, Activation::Logistic};
    const Grid tokens = random_grid({n, d}, 8);
    for (auto _ : state) {
        if constexpr (Reference) {
            benchmark::DoNotOptimize(reference::gated_attention(tokens, p));
        } else {
            benchmark::DoNotOptimize(gated_attention(tokens, p));
        }
    }
}

template <bool Reference>
void BM_Rasterize(benchmark::State& state) {
    const auto side = static_cast<std::size_t>(state.range(0));
    const double s = double(side);
    const TextPolygon poly{{{0.1 * s, 0.2 * s}, {0.9 * s, 0.1 * s}, {0.6 * s, 0.5 * s}, {0.95 * s, 0.9 * s}, {0.2 * s, 0.8 * s}}};
    for (auto _ : state) {
        if constexpr (Reference) {
            benchmark::DoNotOptimize(reference::rasterize(poly, side, side));
        } else {
            benchmark::DoNotOptimize(rasterize(poly, side, side));
        }
    }
}

template <bool Reference>
void BM_Fps(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    SeededUniform u(9);
    std::vector<Point> pts(n);
    for (auto& p : pts) p = {u.next(0, 500), u.next(0, 500)};
    for (auto _ : state) {
        if constexpr (Reference) {
            benchmark::DoNotOptimize(reference::farthest_point_sample(pts, 64, 0.0));
        } else {
            benchmark::DoNotOptimize(farthest_point_sample(pts, 64, 0.0));
        }
    }
}

template <bool Reference>
void BM_Dilate(benchmark::State& state) {
    const auto side = static_cast<std::size_t>(state.range(0));
    const Grid m = random_mask(side, 10);
    for (auto _ : state) {
        if constexpr (Reference) {
            benchmark::DoNotOptimize(reference::dilate(m, 5));
        } else {
            benchmark::DoNotOptimize(dilate(m, 5));
        }
    }
}

template <bool Reference>
void BM_Erode(benchmark::State& state) {
    const auto side = static_cast<std::size_t>(state.range(0));
    const Grid m = random_mask(side, 11);
    for (auto _ : state) {
        if constexpr (Reference) {
            benchmark::DoNotOptimize(reference::erode(m, 5));
        } else {
            benchmark::DoNotOptimize(erode(m, 5));
        }
    }
}

void BM_ShapeMaskFps(benchmark::State& state) {
    const auto c = synth_candidates(static_cast<std::size_t>(state.range(0)), 12);
    const ShapingConfig cfg;
    for (auto _ : state) benchmark::DoNotOptimize(shape_mask_fps(c.candidates, c.maps, cfg));
    reset_overlap_count();
    shape_mask_fps(c.candidates, c.maps, cfg);
    state.counters["overlaps"] = double(overlap_count());
}

void BM_ShapeMaskNms(benchmark::State& state) {
    const auto c = synth_candidates(static_cast<std::size_t>(state.range(0)), 12);
    const ShapingConfig cfg;
    for (auto _ : state) benchmark::DoNotOptimize(shape_mask_nms(c.candidates, c.maps, cfg));
    reset_overlap_count();
    shape_mask_nms(c.candidates, c.maps, cfg);
    state.counters["overlaps"] = double(overlap_count());
}

} // namespace

BENCHMARK(BM_Conv2d<false>)->Name("conv2d/parallel")->Arg(8)->Arg(32)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Conv2d<true>)->Name("conv2d/reference")->Arg(8)->Arg(32)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Dsc<false>)->Name("dsc/parallel")->Arg(4)->Arg(16)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Dsc<true>)->Name("dsc/reference")->Arg(4)->Arg(16)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Attention<false>)->Name("attention/parallel")->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Attention<true>)->Name("attention/reference")->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Rasterize<false>)->Name("rasterize/parallel")->Arg(256)->Arg(1024)->Unit(benchmark::kMicrosecond)->UseRealTime();
BENCHMARK(BM_Rasterize<true>)->Name("rasterize/reference")->Arg(256)->Arg(1024)->Unit(benchmark::kMicrosecond)->UseRealTime();
BENCHMARK(BM_Fps<false>)->Name("fps/parallel")->Arg(2000)->Arg(20000)->Unit(benchmark::kMicrosecond)->UseRealTime();
BENCHMARK(BM_Fps<true>)->Name("fps/reference")->Arg(2000)->Arg(20000)->Unit(benchmark::kMicrosecond)->UseRealTime();
BENCHMARK(BM_Dilate<false>)->Name("dilate/parallel")->Arg(256)->Arg(1024)->Unit(benchmark::kMicrosecond)->UseRealTime();
BENCHMARK(BM_Dilate<true>)->Name("dilate/reference")->Arg(256)->Arg(1024)->Unit(benchmark::kMicrosecond)->UseRealTime();
BENCHMARK(BM_Erode<false>)->Name("erode/parallel")->Arg(256)->Arg(1024)->Unit(benchmark::kMicrosecond)->UseRealTime();
BENCHMARK(BM_Erode<true>)->Name("erode/reference")->Arg(256)->Arg(1024)->Unit(benchmark::kMicrosecond)->UseRealTime();
BENCHMARK(BM_ShapeMaskFps)->Name("shape_mask/fps")->Arg(200)->Arg(2000)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_ShapeMaskNms)->Name("shape_mask/nms")->Arg(200)->Arg(2000)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
