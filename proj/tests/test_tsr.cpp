#include "doctest.h"

#include "lltext/dataio.hpp"
#include "lltext/error.hpp"
#include "lltext/tsr.hpp"
#include "test_support.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <numbers>
#include <set>

using namespace lltext;

namespace {

double d2(Point a, Point b) { return std::sqrt((a.x - b.x) * (a.x - b.x) + (a.y - b.y) * (a.y - b.y)); }

// BFS flood fill, 8-connected; returns component sizes in raster order of
// their first pixel.
std::vector<std::size_t> flood_sizes(const Grid& m) {
    const int h = m.dim(0), w = m.dim(1);
    std::vector<int> seen(h * w, 0);
    std::vector<std::size_t> sizes;
    for (int i = 0; i < h; ++i)
        for (int j = 0; j < w; ++j) {
            if (m.at(i, j) == 0.0 || seen[i * w + j]) continue;
            std::deque<std::pair<int, int>> q{{i, j}};
            seen[i * w + j] = 1;
            std::size_t n = 0;
            while (!q.empty()) {
                auto [y, x] = q.front();
                q.pop_front();
                ++n;
                for (int dy = -1; dy <= 1; ++dy)
                    for (int dx = -1; dx <= 1; ++dx) {
                        const int yy = y + dy, xx = x + dx;
                        if (yy < 0 || yy >= h || xx < 0 || xx >= w || seen[yy * w + xx] || m.at(yy, xx) == 0.0) continue;
                        seen[yy * w + xx] = 1;
                        q.push_back({yy, xx});
                    }
            }
            sizes.push_back(n);
        }
    return sizes;
}

// Exhaustive greedy: recompute every min-distance from scratch each round.
std::vector<std::size_t> greedy_oracle(const std::vector<Point>& t, std::size_t budget, double stop, std::optional<std::size_t> seed) {
    std::vector<std::size_t> p;
    if (budget == 0) return p;
    if (seed) {
        p.push_back(*seed);
    } else {
        double cx = 0, cy = 0;
        for (auto q : t) {
            cx += q.x;
            cy += q.y;
        }
        const Point c{cx / t.size(), cy / t.size()};
        std::size_t best = 0;
        for (std::size_t i = 1; i < t.size(); ++i)
            if (d2(t[i], c) < d2(t[best], c)) best = i;
        p.push_back(best);
    }
    while (p.size() < budget) {
        double far = -1;
        std::size_t arg = 0;
        for (std::size_t i = 0; i < t.size(); ++i) {
            double m = std::numeric_limits<double>::infinity();
            for (auto s : p) m = std::min(m, d2(t[i], t[s]));
            if (m > far) {
                far = m;
                arg = i;
            }
        }
        if (far <= 0 || far < stop) break;
        p.push_back(arg);
    }
    return p;
}

double cover_radius(const std::vector<Point>& t, const std::vector<std::size_t>& centres) {
    double r = 0;
    for (auto q : t) {
        double m = std::numeric_limits<double>::infinity();
        for (auto c : centres) m = std::min(m, d2(q, t[c]));
        r = std::max(r, m);
    }
    return r;
}

double optimal_k_center(const std::vector<Point>& t, std::size_t k) {
    double best = std::numeric_limits<double>::infinity();
    std::vector<std::size_t> idx(k);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t depth, std::size_t from) {
        if (depth == k) {
            best = std::min(best, cover_radius(t, idx));
            return;
        }
        for (std::size_t i = from; i < t.size(); ++i) {
            idx[depth] = i;
            rec(depth + 1, i + 1);
        }
    };
    rec(0, 0);
    return best;
}

// Closing of the mask as a plane set: pad, windowed max then min, crop.
Grid closing_oracle(const Grid& m, int k) {
    const int h = m.dim(0), w = m.dim(1), r = k / 2, H = h + 2 * r, W = w + 2 * r;
    std::vector<int> pad(H * W, 0), dil(H * W, 0);
    for (int i = 0; i < h; ++i)
        for (int j = 0; j < w; ++j) pad[(i + r) * W + j + r] = m.at(i, j) != 0.0;
    auto window = [&](const std::vector<int>& src, std::vector<int>& dst, bool any) {
        for (int i = 0; i < H; ++i)
            for (int j = 0; j < W; ++j) {
                bool acc = !any;
                for (int a = -r; a <= r; ++a)
                    for (int b = -r; b <= r; ++b) {
                        const int y = i + a, x = j + b;
                        const int v = (y < 0 || y >= H || x < 0 || x >= W) ? 0 : src[y * W + x];
                        acc = any ? (acc || v) : (acc && v);
                    }
                dst[i * W + j] = acc;
            }
    };
    window(pad, dil, true);
    std::vector<int> ero(H * W, 0);
    window(dil, ero, false);
    Grid out({std::size_t(h), std::size_t(w)});
    for (int i = 0; i < h; ++i)
        for (int j = 0; j < w; ++j) out.at(i, j) = ero[(i + r) * W + j + r];
    return out;
}

std::vector<std::size_t> nms_oracle(const std::vector<RotatedRect>& r, const std::vector<double>& s, double thr) {
    std::vector<std::size_t> order(r.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    // insertion sort: descending score, earlier index first on ties
    for (std::size_t i = 1; i < order.size(); ++i)
        for (std::size_t j = i; j > 0 && s[order[j]] > s[order[j - 1]]; --j) std::swap(order[j], order[j - 1]);
    std::vector<std::size_t> kept;
    for (auto i : order) {
        bool keep = true;
        for (auto k : kept) keep = keep && polygon_iou(to_polygon(r[k]), to_polygon(r[i])) <= thr;
        if (keep) kept.push_back(i);
    }
    return kept;
}

double mask_iou(const Grid& a, const Grid& b) {
    double i = 0, u = 0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        i += a[k] * b[k];
        u += std::max(a[k], b[k]);
    }
    return u == 0 ? 1.0 : i / u;
}

Grid fill_box(std::size_t h, std::size_t w, int y0, int x0, int y1, int x1, Grid g = Grid()) {
    if (g.empty()) g = Grid({h, w});
    for (int i = y0; i < y1; ++i)
        for (int j = x0; j < x1; ++j) g.at(i, j) = 1.0;
    return g;
}

Grid random_blobs(std::size_t h, std::size_t w, std::mt19937_64& rng, double p) {
    Grid g({h, w});
    std::bernoulli_distribution b(p);
    for (auto& v : g.data()) v = b(rng) ? 1.0 : 0.0;
    return g;
}

} // namespace

TEST_CASE("extract_centers") {
    CHECK(extract_centers(Grid({8, 8}), 0.5).empty());
    Grid one({8, 8});
    one.at(3, 4) = 0.9;
    const auto c1 = extract_centers(one, 0.5);
    REQUIRE(c1.size() == 1);
    CHECK(c1[0] == std::vector<Point>{{4, 3}});

    Grid two = fill_box(12, 12, 1, 1, 4, 5);
    two = fill_box(12, 12, 7, 6, 11, 9, two);
    for (auto& v : two.data()) v *= 0.8;
    const auto c2 = extract_centers(two, 0.5);
    REQUIRE(c2.size() == 2);
    CHECK(c2[0].size() == 12);
    CHECK(c2[1].size() == 12);
    CHECK(extract_centers(two, 0.8).empty());
}

TEST_CASE("labelling matches flood fill") {
    std::mt19937_64 rng(60);
    for (int trial = 0; trial < 100; ++trial) {
        const Grid m = random_blobs(17, 23, rng, 0.2 + 0.05 * (trial % 8));
        const auto lab = label_components(m);
        const auto comps = component_pixels(lab);
        const auto sizes = flood_sizes(m);
        REQUIRE(lab.count == sizes.size());
        for (std::size_t k = 0; k < sizes.size(); ++k) CHECK(comps[k].size() == sizes[k]);
        for (std::size_t k = 0; k < comps.size(); ++k)
            for (auto p : comps[k]) CHECK(lab.label[std::size_t(p.y) * 23 + std::size_t(p.x)] == int(k + 1));
    }
}

TEST_CASE("farthest point sampling examples") {
    const std::vector<Point> single{{3, 4}};
    CHECK(farthest_point_sample(single, 5, 0.0) == std::vector<std::size_t>{0});
    const std::vector<Point> t{{0, 0}, {10, 0}, {5, 1}};
    CHECK(farthest_point_sample(t, 2, 0.0, 0) == std::vector<std::size_t>{0, 1});
    CHECK(greedy_oracle(t, 2, 0.0, 0) == std::vector<std::size_t>{0, 1});
    CHECK_THROWS_AS(farthest_point_sample(std::vector<Point>{}, 2, 0.0), GeometryError);
    CHECK_THROWS_AS(farthest_point_sample(t, 2, 0.0, 7), GeometryError);

    std::vector<Point> line;
    for (int i = 0; i < 21; ++i) line.push_back({double(i) * 2, 5});
    // the centroid seed sits mid-line; the endpoints tie for the second pick
    CHECK(farthest_point_sample(line, 2, 0.0) == std::vector<std::size_t>{10, 0});
    for (std::size_t k = 3; k < 8; ++k) {
        const auto p = farthest_point_sample(line, k, 0.0);
        CHECK(std::find(p.begin(), p.end(), 0) != p.end());
        CHECK(std::find(p.begin(), p.end(), 20) != p.end());
    }
    const auto stopped = farthest_point_sample(line, 100, 4.5);
    CHECK(stopped.size() < 21);
    CHECK(cover_radius(line, stopped) < 4.5);

    const std::vector<Point> dup{{1, 1}, {1, 1}, {1, 1}};
    CHECK(farthest_point_sample(dup, 3, 0.0).size() == 1);
}

TEST_CASE("farthest point sampling equals the exhaustive oracle") {
    std::mt19937_64 rng(61);
    std::uniform_int_distribution<int> n(1, 200), b(1, 40), coord(0, 40);
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<Point> t(n(rng));
        for (auto& p : t) p = {double(coord(rng)), double(coord(rng))};
        const std::size_t budget = b(rng);
        const double stop = trial % 3 == 0 ? 0.0 : 2.0;
        const std::optional<std::size_t> seed = trial % 4 == 0 ? std::optional<std::size_t>(t.size() / 2) : std::nullopt;
        const auto got = farthest_point_sample(t, budget, stop, seed);
        REQUIRE(got == greedy_oracle(t, budget, stop, seed));
        CHECK(got == reference::farthest_point_sample(t, budget, stop, seed));
        CHECK(got == farthest_point_sample(t, budget, stop, seed));
    }
}

TEST_CASE("farthest point sampling is within twice the optimal k-center radius") {
    std::mt19937_64 rng(62);
    std::uniform_real_distribution<double> u(0, 30);
    for (int trial = 0; trial < 60; ++trial) {
        std::vector<Point> t(5 + trial % 26);
        for (auto& p : t) p = {u(rng), u(rng)};
        for (std::size_t k = 1; k <= 4; ++k) {
            const auto p = farthest_point_sample(t, k, 0.0);
            CHECK(cover_radius(t, p) <= 2 * optimal_k_center(t, k) + 1e-12);
        }
    }
}

TEST_CASE("build_components") {
    GeometryMaps g = GeometryMaps::zeros(10, 12);
    for (std::size_t i = 0; i < 10; ++i)
        for (std::size_t j = 0; j < 12; ++j) {
            g.x.at(i, j) = j + 0.5;
            g.y.at(i, j) = i + 0.5;
            g.h.at(i, j) = 6.0;
        }
    ShapingConfig cfg;
    const std::vector<Point> centres{{2, 3}, {7, 5}};
    const auto rects = build_components(centres, g, cfg);
    REQUIRE(rects.size() == 2);
    for (std::size_t k = 0; k < 2; ++k) {
        const auto c = rect_corners(rects[k]);
        double xmin = 1e9, xmax = -1e9, ymin = 1e9, ymax = -1e9;
        for (auto p : c) {
            xmin = std::min(xmin, p.x);
            xmax = std::max(xmax, p.x);
            ymin = std::min(ymin, p.y);
            ymax = std::max(ymax, p.y);
        }
        CHECK(xmax - xmin == doctest::Approx(cfg.rect_width));
        CHECK(ymax - ymin == doctest::Approx(6.0));
        CHECK((xmax + xmin) / 2 == doctest::Approx(centres[k].x + 0.5));
        CHECK((ymax + ymin) / 2 == doctest::Approx(centres[k].y + 0.5));
    }
    for (auto& v : g.theta.data()) v = std::numbers::pi / 4;
    const auto rot = build_components(centres, g, cfg);
    const auto want = rect_corners({2.5, 3.5, 6.0, cfg.rect_width, std::numbers::pi / 4});
    const auto got = rect_corners(rot[0]);
    for (int i = 0; i < 4; ++i) {
        CHECK(got[i].x == doctest::Approx(want[i].x));
        CHECK(got[i].y == doctest::Approx(want[i].y));
    }
    // an edge of the rotated box runs at 45 degrees
    CHECK(std::abs(std::abs(got[1].y - got[0].y) - std::abs(got[1].x - got[0].x)) < 1e-12);
    CHECK(build_components({}, g, cfg).empty());

    cfg.offset_mode = true;
    for (auto& v : g.x.data()) v = 1.0;
    for (auto& v : g.y.data()) v = 0.0;
    const auto off = build_components(std::vector<Point>{{2, 3}}, g, cfg);
    CHECK(off[0].cx == 3.5);
    CHECK(off[0].cy == 3.5);

    g.h.at(3, 2) = 0.0;
    CHECK(build_components(std::vector<Point>{{2, 3}}, g, cfg).empty());
    CHECK_THROWS_AS(build_components(std::vector<Point>{{20, 3}}, g, cfg), GeometryError);
}

TEST_CASE("morphology matches the windowed oracle") {
    std::mt19937_64 rng(63);
    for (int trial = 0; trial < 60; ++trial) {
        const Grid m = random_blobs(16, 16, rng, 0.1 + 0.1 * (trial % 6));
        for (int k : {1, 3, 5, 7}) {
            CHECK(dilate(m, k) == reference::dilate(m, k));
            CHECK(erode(m, k) == reference::erode(m, k));
            CHECK(close_mask(m, k) == closing_oracle(m, k));
        }
    }
    const Grid solid = fill_box(16, 16, 3, 2, 11, 13);
    CHECK(close_mask(solid, 5) == solid);
    Grid gap = fill_box(16, 16, 4, 2, 10, 7);
    gap = fill_box(16, 16, 4, 8, 10, 14, gap);
    CHECK(flood_sizes(gap).size() == 2);
    CHECK(flood_sizes(close_mask(gap, 3)).size() == 1);
    CHECK(close_mask(gap, 3) == closing_oracle(gap, 3));
    // a mask touching the border is not eaten from outside
    const Grid edge = fill_box(8, 8, 0, 0, 8, 3);
    CHECK(close_mask(edge, 5) == edge);
}

TEST_CASE("accumulate_and_close") {
    ShapingConfig cfg;
    CHECK(accumulate_and_close({}, 12, 12, cfg) == Grid({12, 12}));
    cfg.close_kernel = 3;
    const std::vector<RotatedRect> rects{{4.5, 8, 6, 5, 0}, {10.5, 8, 6, 5, 0}};
    const Grid m = accumulate_and_close(rects, 16, 16, cfg);
    CHECK(flood_sizes(m).size() == 1);
    Grid raw({16, 16});
    for (const auto& r : rects) rasterize_into(to_polygon(r), raw);
    CHECK(flood_sizes(raw).size() == 2);
    CHECK(m == closing_oracle(raw, 3));
}

TEST_CASE("trace_contours") {
    const Grid solid = fill_box(20, 20, 4, 3, 12, 15);
    const auto p = trace_contours(solid, 1);
    REQUIRE(p.size() == 1);
    CHECK(p[0].vertices.size() == 4);
    CHECK(rasterize(p[0], 20, 20) == solid);
    CHECK(signed_area(p[0].vertices) > 0);

    CHECK(trace_contours(fill_box(10, 10, 2, 2, 4, 4), 10).empty());
    CHECK(trace_contours(fill_box(10, 10, 2, 2, 4, 7), 10).size() == 1);

    Grid ell = fill_box(24, 24, 3, 3, 20, 8);
    ell = fill_box(24, 24, 15, 3, 20, 19, ell);
    const auto l = trace_contours(ell, 1);
    REQUIRE(l.size() == 1);
    CHECK(mask_iou(rasterize(l[0], 24, 24), ell) >= 0.98);

    Grid one({5, 5});
    one.at(2, 2) = 1;
    const auto dot = trace_contours(one, 1);
    REQUIRE(dot.size() == 1);
    CHECK(rasterize(dot[0], 5, 5) == one);

    std::mt19937_64 rng(64);
    for (int trial = 0; trial < 40; ++trial) {
        const Grid blob = close_mask(random_blobs(24, 24, rng, 0.45), 5);
        const auto lab = label_components(blob);
        const auto polys = trace_contours(blob, 20);
        Grid redraw({24, 24});
        for (const auto& q : polys) rasterize_into(q, redraw);
        // only outer boundaries are traced, so holes may be filled
        double inside = 0, total = 0;
        for (std::size_t i = 0; i < blob.size(); ++i) {
            total += blob[i];
            inside += blob[i] * redraw[i];
        }
        if (lab.count == 1 && total > 0) CHECK(inside / total > 0.9);
    }
}

TEST_CASE("outer outline reproduces each component with holes filled") {
    std::mt19937_64 rng(66);
    for (int trial = 0; trial < 150; ++trial) {
        const std::size_t h = 6 + trial % 15, w = 5 + trial % 17;
        const Grid m = random_blobs(h, w, rng, 0.3 + 0.04 * (trial % 10));
        const auto lab = label_components(m);
        const auto comps = component_pixels(lab);
        for (std::size_t c = 0; c < comps.size(); ++c) {
            const auto ring = outer_outline(lab, std::size_t(comps[c][0].y), std::size_t(comps[c][0].x));
            // oracle: pixels of the component plus everything the outside
            // background cannot reach through 4-connected steps
            const int H = h + 2, W = w + 2;
            std::vector<int> reach(H * W, 0);
            auto wall = [&](int y, int x) {
                return y >= 1 && y <= int(h) && x >= 1 && x <= int(w) && lab.label[(y - 1) * w + (x - 1)] == int(c + 1);
            };
            std::deque<std::pair<int, int>> q{{0, 0}};
            reach[0] = 1;
            while (!q.empty()) {
                auto [y, x] = q.front();
                q.pop_front();
                const int dy[] = {1, -1, 0, 0}, dx[] = {0, 0, 1, -1};
                for (int k = 0; k < 4; ++k) {
                    const int yy = y + dy[k], xx = x + dx[k];
                    if (yy < 0 || yy >= H || xx < 0 || xx >= W || reach[yy * W + xx] || wall(yy, xx)) continue;
                    reach[yy * W + xx] = 1;
                    q.push_back({yy, xx});
                }
            }
            Grid want({h, w});
            for (std::size_t i = 0; i < h; ++i)
                for (std::size_t j = 0; j < w; ++j) want.at(i, j) = reach[(i + 1) * W + j + 1] ? 0.0 : 1.0;
            // pinch points let the outline touch itself, so fill by the
            // component-aware oracle only where no other component sits
            const Grid got = rasterize(TextPolygon{ring}, h, w);
            for (std::size_t i = 0; i < h * w; ++i) {
                if (lab.label[i] == int(c + 1)) REQUIRE(got[i] == 1.0);
            }
            CHECK(mask_iou(got, want) == 1.0);
        }
    }
}

TEST_CASE("moore trace visits boundary pixels in order") {
    const Grid solid = fill_box(6, 7, 1, 1, 4, 5);
    const auto lab = label_components(solid);
    const auto b = moore_trace(lab, 1, 1);
    REQUIRE(b.size() == 10);
    CHECK(b[0] == Point{1, 1});
    CHECK(b[1] == Point{2, 1});
    CHECK(b[4] == Point{4, 2});
    for (std::size_t i = 0; i < b.size(); ++i) {
        const auto n = b[(i + 1) % b.size()];
        CHECK(std::max(std::abs(n.x - b[i].x), std::abs(n.y - b[i].y)) == 1.0);
    }
}

TEST_CASE("simplify_ring") {
    std::vector<Point> ring;
    for (int x = 0; x <= 10; ++x) ring.push_back({double(x), 0});
    for (int y = 1; y <= 5; ++y) ring.push_back({10, double(y)});
    for (int x = 9; x >= 0; --x) ring.push_back({double(x), 5});
    for (int y = 4; y >= 1; --y) ring.push_back({0, double(y)});
    CHECK(simplify_ring(ring, 1.0).size() == 4);
    ring[3].y = -3;
    CHECK(simplify_ring(ring, 1.0).size() > 4);
}

TEST_CASE("nms matches the brute-force oracle") {
    CHECK(nms_baseline(std::vector<RotatedRect>{{5, 5, 2, 3, 0}}, std::vector<double>{0.3}) == std::vector<std::size_t>{0});
    const std::vector<RotatedRect> same{{5, 5, 2, 3, 0.2}, {5, 5, 2, 3, 0.2}};
    CHECK(nms_baseline(same, std::vector<double>{0.8, 0.9}) == std::vector<std::size_t>{1});
    CHECK_THROWS_AS(nms_baseline(same, std::vector<double>{0.8}), GeometryError);

    std::mt19937_64 rng(65);
    std::uniform_real_distribution<double> c(0, 20), e(1, 8), t(-1.5, 1.57), s(0, 1);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<RotatedRect> r(10 + trial);
        std::vector<double> sc(r.size());
        for (std::size_t i = 0; i < r.size(); ++i) {
            r[i] = {c(rng), c(rng), e(rng), e(rng), t(rng)};
            sc[i] = trial % 5 == 0 ? std::round(s(rng) * 4) / 4 : s(rng);
        }
        CHECK(nms_baseline(r, sc, 0.3) == nms_oracle(r, sc, 0.3));
    }
}

TEST_CASE("fps path does no overlap computations, nms path does") {
    SynthSpec spec;
    const auto syn = synth_maps(spec, 1);
    ShapingConfig cfg;
    Grid seeds(syn.maps.center.shape());
    for (std::size_t i = 0; i < seeds.size(); ++i) seeds[i] = syn.maps.center[i] > 0.5 ? 1.0 : 0.0;
    const auto comps = component_pixels(label_components(seeds));
    REQUIRE(comps.size() == 1);
    reset_overlap_count();
    shape_mask_fps(comps[0], syn.maps, cfg);
    shape_text(syn.maps, cfg);
    CHECK(overlap_count() == 0);
    shape_mask_nms(comps[0], syn.maps, cfg);
    CHECK(overlap_count() > 0);
}

TEST_CASE("shape_text on synthetic bands") {
    ShapingConfig cfg;
    CHECK(shape_text(GeometryMaps::zeros(32, 32), cfg).empty());

    SynthSpec spec;
    spec.bands[0].amplitude = 10;
    spec.bands[0].period = 120;
    const auto one = synth_maps(spec, 3);
    const auto p1 = shape_text(one.maps, cfg);
    REQUIRE(p1.size() == 1);
    CHECK(polygon_iou(p1[0], one.truth[0]) >= 0.90);
    CHECK(shape_text(one.maps, cfg) == p1);

    spec.height = 128;
    spec.bands.push_back(BandSpec{});
    spec.bands[1].baseline = 96;
    spec.bands[1].height_start = 12;
    spec.bands[1].height_end = 20;
    const auto two = synth_maps(spec, 4);
    const auto p2 = shape_text(two.maps, cfg);
    REQUIRE(p2.size() == 2);
    for (const auto& p : p2) {
        double best = 0;
        for (const auto& t : two.truth) best = std::max(best, polygon_iou(p, t));
        CHECK(best >= 0.90);
    }
    // each polygon touches exactly one thresholded text component
    Grid text(two.maps.text.shape());
    for (std::size_t i = 0; i < text.size(); ++i) text[i] = two.maps.text[i] > cfg.text_thresh;
    const auto lab = label_components(text);
    for (const auto& p : p2) {
        const Grid m = rasterize(p, 128, 192);
        std::set<int> hit;
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m[i] > 0 && lab.label[i] > 0) hit.insert(lab.label[i]);
        CHECK(hit.size() == 1);
    }

    cfg.output_scale = 4.0;
    const auto scaled = shape_text(one.maps, cfg);
    REQUIRE(scaled.size() == 1);
    CHECK(polygon_area(scaled[0]) == doctest::Approx(16 * polygon_area(p1[0])));
}

TEST_CASE("config validation") {
    ShapingConfig c;
    CHECK_NOTHROW(c.validate());
    c.text_thresh = 1.0;
    CHECK_THROWS_AS(c.validate(), GeometryError);
    c = {};
    c.close_kernel = 4;
    CHECK_THROWS_AS(c.validate(), GeometryError);
    c = {};
    c.rect_width = 0;
    CHECK_THROWS_AS(c.validate(), GeometryError);
}
