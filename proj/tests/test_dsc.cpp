#include "doctest.h"

#include "lltext/dsc.hpp"
#include "lltext/error.hpp"
#include "test_support.hpp"

using namespace lltext;

namespace {

// 1xL (or Lx1) zero-padded correlation written out directly.
Grid line_conv(const Grid& in, const Grid& w, SnakeAxis axis) {
    const int B = in.dim(0), Ci = in.dim(1), H = in.dim(2), W = in.dim(3);
    const int Co = w.dim(0), L = w.dim(2), r = (L - 1) / 2;
    Grid out({std::size_t(B), std::size_t(Co), std::size_t(H), std::size_t(W)});
    for (int b = 0; b < B; ++b)
        for (int o = 0; o < Co; ++o)
            for (int y = 0; y < H; ++y)
                for (int x = 0; x < W; ++x) {
                    double s = 0;
                    for (int c = 0; c < Ci; ++c)
                        for (int t = 0; t < L; ++t) {
                            const int yy = axis == SnakeAxis::Vertical ? y + t - r : y;
                            const int xx = axis == SnakeAxis::Horizontal ? x + t - r : x;
                            if (yy < 0 || yy >= H || xx < 0 || xx >= W) continue;
                            s += in.at(b, c, yy, xx) * w.at(o, c, t);
                        }
                    out.at(b, o, y, x) = s;
                }
    return out;
}

} // namespace

TEST_CASE("zero offsets reduce to a straight line convolution") {
    std::mt19937_64 rng(10);
    for (int trial = 0; trial < 20; ++trial) {
        const auto axis = trial % 2 ? SnakeAxis::Vertical : SnakeAxis::Horizontal;
        const std::size_t L = 2 * (trial % 5) + 1;
        const Grid in = testing::random_grid({2, 3, 7, 9}, rng);
        const Grid w = testing::random_grid({2, 3, L}, rng);
        const auto k = SnakeKernel::straight(axis, w, 7, 9);
        CHECK(testing::max_abs_diff(dsc_forward(in, k), line_conv(in, w, axis)) < 1e-12);
        SnakeKernel bare = k;
        bare.offsets = Grid();
        CHECK(dsc_forward(in, bare) == dsc_forward(in, k));
    }
}

TEST_CASE("constant field gives c times weight sum in the interior") {
    const Grid in({1, 2, 15, 15}, 1.5);
    std::mt19937_64 rng(11);
    const Grid w = testing::random_grid({3, 2, 9}, rng);
    for (auto axis : {SnakeAxis::Horizontal, SnakeAxis::Vertical}) {
        const Grid out = dsc_forward(in, SnakeKernel::straight(axis, w, 15, 15));
        for (std::size_t o = 0; o < 3; ++o) {
            double s = 0;
            for (std::size_t c = 0; c < 2; ++c)
                for (std::size_t t = 0; t < 9; ++t) s += w.at(o, c, t);
            CHECK(out.at(0, o, 7, 7) == doctest::Approx(1.5 * s).epsilon(1e-12));
        }
    }
}

TEST_CASE("impulse splits across perpendicular neighbours") {
    Grid in({1, 1, 9, 9});
    in.at(0, 0, 4, 4) = 1.0;
    Grid w({1, 1, 3});
    w.at(0, 0, 2) = 1.0;
    auto k = SnakeKernel::straight(SnakeAxis::Horizontal, w, 9, 9);
    for (std::size_t y = 0; y < 9; ++y)
        for (std::size_t x = 0; x < 9; ++x) k.offsets.at(2, y, x) = 0.5;
    const Grid out = dsc_forward(in, k);
    CHECK(out.at(0, 0, 3, 3) == doctest::Approx(0.5));
    CHECK(out.at(0, 0, 4, 3) == doctest::Approx(0.5));
    double total = 0;
    for (double v : out.data()) total += v;
    CHECK(total == doctest::Approx(1.0));
}

TEST_CASE("tap positions accumulate and stay monotone") {
    std::mt19937_64 rng(12);
    for (auto axis : {SnakeAxis::Horizontal, SnakeAxis::Vertical}) {
        auto k = SnakeKernel::straight(axis, Grid({1, 1, 9}), 5, 5, 0.9);
        k.offsets = testing::random_grid({18, 5, 5}, rng, -3, 3);
        for (std::size_t y = 0; y < 5; ++y)
            for (std::size_t x = 0; x < 5; ++x) {
                const auto p = snake_tap_positions(k, y, x);
                REQUIRE(p.size() == 9);
                CHECK(p[4].y == double(y));
                CHECK(p[4].x == double(x));
                for (std::size_t t = 1; t < 9; ++t) {
                    const double a0 = axis == SnakeAxis::Horizontal ? p[t - 1].x : p[t - 1].y;
                    const double a1 = axis == SnakeAxis::Horizontal ? p[t].x : p[t].y;
                    CHECK(a1 > a0);
                    const double q0 = axis == SnakeAxis::Horizontal ? p[t - 1].y : p[t - 1].x;
                    const double q1 = axis == SnakeAxis::Horizontal ? p[t].y : p[t].x;
                    CHECK(std::abs(q1 - q0) <= 0.9 + 1e-12);
                    CHECK(a1 - a0 <= 1.9 + 1e-12);
                }
            }
    }
    // explicit cumulative case
    auto k = SnakeKernel::straight(SnakeAxis::Horizontal, Grid({1, 1, 5}), 1, 1, 1.0);
    k.offsets.at(3, 0, 0) = 0.25;  // perpendicular, tap +1
    k.offsets.at(4, 0, 0) = 5.0;   // perpendicular, tap +2, clamped to 1
    k.offsets.at(1, 0, 0) = -0.5;  // perpendicular, tap -1
    k.offsets.at(5 + 4, 0, 0) = 0.5;  // along, tap +2
    const auto p = snake_tap_positions(k, 0, 0);
    CHECK(p[3].y == 0.25);
    CHECK(p[4].y == 1.25);
    CHECK(p[1].y == -0.5);
    CHECK(p[0].y == -0.5);
    CHECK(p[4].x == 2.5);
    CHECK(p[0].x == -2.0);
}

TEST_CASE("linear in the input for fixed offsets") {
    std::mt19937_64 rng(13);
    auto k = SnakeKernel::straight(SnakeAxis::Vertical, testing::random_grid({2, 2, 9}, rng), 8, 8);
    k.offsets = testing::random_grid({18, 8, 8}, rng);
    const Grid a = testing::random_grid({1, 2, 8, 8}, rng), b = testing::random_grid({1, 2, 8, 8}, rng);
    Grid mix(a.shape());
    for (std::size_t i = 0; i < a.size(); ++i) mix[i] = 2.0 * a[i] - 0.75 * b[i];
    const Grid fa = dsc_forward(a, k), fb = dsc_forward(b, k), fm = dsc_forward(mix, k);
    for (std::size_t i = 0; i < fm.size(); ++i) CHECK(std::abs(fm[i] - (2.0 * fa[i] - 0.75 * fb[i])) < 1e-10);
}

TEST_CASE("parallel kernel matches serial reference bit for bit") {
    std::mt19937_64 rng(14);
    auto k = SnakeKernel::straight(SnakeAxis::Horizontal, testing::random_grid({3, 4, 9}, rng), 16, 12);
    k.offsets = testing::random_grid({18, 16, 12}, rng, -1.5, 1.5);
    const Grid in = testing::random_grid({2, 4, 16, 12}, rng);
    CHECK(dsc_forward(in, k) == reference::dsc_forward(in, k));
}

TEST_CASE("pair sums both axes") {
    std::mt19937_64 rng(15);
    const Grid in = testing::random_grid({1, 2, 6, 6}, rng);
    SnakePair pair{SnakeKernel::straight(SnakeAxis::Horizontal, testing::random_grid({2, 2, 9}, rng), 6, 6),
                   SnakeKernel::straight(SnakeAxis::Vertical, testing::random_grid({2, 2, 9}, rng), 6, 6)};
    const Grid h = dsc_forward(in, pair.horizontal), v = dsc_forward(in, pair.vertical);
    const Grid s = dsc_pair_forward(in, pair);
    for (std::size_t i = 0; i < s.size(); ++i) CHECK(s[i] == h[i] + v[i]);
}

TEST_CASE("shape errors") {
    const Grid in({1, 2, 5, 5});
    CHECK_THROWS_AS(dsc_forward(in, SnakeKernel::straight(SnakeAxis::Horizontal, Grid({1, 3, 9}), 5, 5)), ShapeError);
    CHECK_THROWS_AS(dsc_forward(in, SnakeKernel::straight(SnakeAxis::Horizontal, Grid({1, 2, 4}), 5, 5)), ShapeError);
    CHECK_THROWS_AS(dsc_forward(in, SnakeKernel::straight(SnakeAxis::Horizontal, Grid({1, 2, 9}), 6, 5)), ShapeError);
}
