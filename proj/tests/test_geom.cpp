#include "doctest.h"

#include "lltext/error.hpp"
#include "lltext/geom.hpp"
#include "test_support.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

using namespace lltext;

namespace {

double dist(Point a, Point b) { return std::hypot(a.x - b.x, a.y - b.y); }

TextPolygon box(double x0, double y0, double x1, double y1) { return {{{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}}}; }

bool inside_oracle(const std::vector<Point>& v, double x, double y) {
    bool in = false;
    for (std::size_t i = 0, j = v.size() - 1; i < v.size(); j = i++) {
        if ((v[i].y > y) != (v[j].y > y) && x < (v[j].x - v[i].x) * (y - v[i].y) / (v[j].y - v[i].y) + v[i].x) in = !in;
    }
    return in;
}

double cross(Point o, Point a, Point b) { return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x); }

// Area of the convex hull (monotone chain) of a point cloud.
double hull_area(std::vector<Point> p) {
    if (p.size() < 3) return 0.0;
    std::sort(p.begin(), p.end(), [](Point a, Point b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
    std::vector<Point> h(2 * p.size());
    std::size_t k = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        while (k >= 2 && cross(h[k - 2], h[k - 1], p[i]) <= 0) --k;
        h[k++] = p[i];
    }
    for (std::size_t i = p.size() - 1, t = k + 1; i-- > 0;) {
        while (k >= t && cross(h[k - 2], h[k - 1], p[i]) <= 0) --k;
        h[k++] = p[i];
    }
    h.resize(k - 1);
    double a = 0;
    for (std::size_t i = 0; i < h.size(); ++i) {
        const auto& u = h[i];
        const auto& w = h[(i + 1) % h.size()];
        a += u.x * w.y - w.x * u.y;
    }
    return std::abs(a) / 2;
}

double shoelace(const std::vector<Point>& v) {
    double a = 0;
    for (std::size_t i = 0; i < v.size(); ++i) a += v[i].x * v[(i + 1) % v.size()].y - v[(i + 1) % v.size()].x * v[i].y;
    return std::abs(a) / 2;
}

// Intersection of two convex polygons: hull of mutually contained vertices
// and all edge crossings.
double convex_overlap_oracle(const std::vector<Point>& a, const std::vector<Point>& b) {
    std::vector<Point> pts;
    for (auto p : a)
        if (inside_oracle(b, p.x, p.y)) pts.push_back(p);
    for (auto p : b)
        if (inside_oracle(a, p.x, p.y)) pts.push_back(p);
    for (std::size_t i = 0; i < a.size(); ++i) {
        const Point p = a[i], r{a[(i + 1) % a.size()].x - p.x, a[(i + 1) % a.size()].y - p.y};
        for (std::size_t j = 0; j < b.size(); ++j) {
            const Point q = b[j], s{b[(j + 1) % b.size()].x - q.x, b[(j + 1) % b.size()].y - q.y};
            const double den = r.x * s.y - r.y * s.x;
            if (std::abs(den) < 1e-15) continue;
            const double t = ((q.x - p.x) * s.y - (q.y - p.y) * s.x) / den;
            const double u = ((q.x - p.x) * r.y - (q.y - p.y) * r.x) / den;
            if (t >= 0 && t <= 1 && u >= 0 && u <= 1) pts.push_back({p.x + t * r.x, p.y + t * r.y});
        }
    }
    return hull_area(pts);
}

RotatedRect random_rect(std::mt19937_64& rng, double lo = 2, double hi = 28) {
    std::uniform_real_distribution<double> c(lo, hi), e(1.0, 12.0), t(-1.5, 1.57);
    return {c(rng), c(rng), e(rng), e(rng), t(rng)};
}

TextPolygon transform(const TextPolygon& p, double angle, double dx, double dy) {
    TextPolygon out;
    const double c = std::cos(angle), s = std::sin(angle);
    for (auto v : p.vertices) out.vertices.push_back({c * v.x - s * v.y + dx, s * v.x + c * v.y + dy});
    return out;
}

// A concave "U".
TextPolygon u_shape(double x, double y) {
    return {{{x, y}, {x + 9, y}, {x + 9, y + 8}, {x + 6, y + 8}, {x + 6, y + 3}, {x + 3, y + 3}, {x + 3, y + 8}, {x, y + 8}}};
}

} // namespace

TEST_CASE("rect corners") {
    const auto c = rect_corners({0, 0, 2, 4, 0});
    std::vector<Point> got(c.begin(), c.end());
    for (Point want : {Point{-2, -1}, Point{2, -1}, Point{2, 1}, Point{-2, 1}}) {
        CHECK(std::any_of(got.begin(), got.end(), [&](Point p) { return dist(p, want) < 1e-12; }));
    }
    CHECK(signed_area(got) > 0);

    const auto r = rect_corners({0, 0, 2, 4, std::numbers::pi / 2});
    double xmax = 0, ymax = 0;
    for (auto p : r) {
        xmax = std::max(xmax, std::abs(p.x));
        ymax = std::max(ymax, std::abs(p.y));
    }
    CHECK(xmax == doctest::Approx(1.0));
    CHECK(ymax == doctest::Approx(2.0));

    std::mt19937_64 rng(50);
    for (int i = 0; i < 200; ++i) {
        const auto rr = random_rect(rng);
        const auto k = rect_corners(rr);
        std::vector<double> d;
        for (int a = 0; a < 4; ++a)
            for (int b = a + 1; b < 4; ++b) d.push_back(dist(k[a], k[b]));
        std::sort(d.begin(), d.end());
        std::vector<double> want{rr.w, rr.w, rr.h, rr.h, std::hypot(rr.w, rr.h), std::hypot(rr.w, rr.h)};
        std::sort(want.begin(), want.end());
        for (int j = 0; j < 6; ++j) CHECK(d[j] == doctest::Approx(want[j]).epsilon(1e-12));
        CHECK(signed_area(std::vector<Point>(k.begin(), k.end())) == doctest::Approx(rr.h * rr.w));
    }
}

TEST_CASE("validation and angles") {
    CHECK_THROWS_AS((RotatedRect{0, 0, 0, 1, 0}.validate()), GeometryError);
    CHECK_THROWS_AS((RotatedRect{0, 0, 1, -1, 0}.validate()), GeometryError);
    CHECK_THROWS_AS((RotatedRect{0, 0, 1, 1, 2.0}.validate()), GeometryError);
    CHECK_NOTHROW((RotatedRect{0, 0, 1, 1, std::numbers::pi / 2}.validate()));
    CHECK_THROWS_AS((TextPolygon{{{0, 0}, {1, 1}}}.validate()), GeometryError);
    CHECK_THROWS_AS((TextPolygon{{{0, 0}, {1, 1}, {2, 2}}}.validate()), GeometryError);
    for (double t : {-7.0, -1.5707963, 0.0, 1.0, 3.0, 12.0}) {
        const double n = normalize_angle(t);
        CHECK(n > -std::numbers::pi / 2);
        CHECK(n <= std::numbers::pi / 2);
        CHECK(std::abs(std::sin(2 * (n - t))) < 1e-9);
    }
    CHECK(normalize_angle(-std::numbers::pi / 2) == doctest::Approx(std::numbers::pi / 2));
}

TEST_CASE("convexity") {
    CHECK(is_convex(box(0, 0, 3, 2)));
    CHECK(is_convex(to_polygon({5, 5, 2, 3, 0.4})));
    CHECK_FALSE(is_convex(u_shape(0, 0)));
    CHECK(is_convex(TextPolygon{{{0, 0}, {2, 0}, {2, 0}, {2, 2}, {0, 2}, {0, 0}}}));
}

TEST_CASE("rasterize agrees with the per-pixel oracle") {
    std::mt19937_64 rng(51);
    for (int i = 0; i < 300; ++i) {
        const auto rr = random_rect(rng, -4, 36);
        const Grid g = rasterize(rr, 32, 40);
        const auto corners = rect_corners(rr);
        const std::vector<Point> v(corners.begin(), corners.end());
        for (std::size_t y = 0; y < 32; ++y)
            for (std::size_t x = 0; x < 40; ++x) REQUIRE(g.at(y, x) == (inside_oracle(v, x + 0.5, y + 0.5) ? 1.0 : 0.0));
    }
    std::uniform_real_distribution<double> u(-3, 30);
    for (int i = 0; i < 100; ++i) {
        TextPolygon p;
        for (int k = 0; k < 3 + i % 9; ++k) p.vertices.push_back({u(rng), u(rng)});
        CHECK(rasterize(p, 28, 28) == reference::rasterize(p, 28, 28));
    }
}

TEST_CASE("rasterize area bounds") {
    const Grid g = rasterize(RotatedRect{10, 8, 6, 10, 0}, 20, 20);
    double pop = 0;
    for (double v : g.data()) pop += v;
    CHECK(std::abs(pop - 60) <= 2 * (6 + 10));
    CHECK(rasterize(box(-20, -20, -5, -5), 10, 10) == Grid({10, 10}));
    CHECK(rasterize(box(50, 0, 60, 10), 10, 10) == Grid({10, 10}));

    std::mt19937_64 rng(52);
    for (int i = 0; i < 50; ++i) {
        auto rr = random_rect(rng, 15, 17);
        rr.h += 3;
        rr.w += 3;
        const Grid m = rasterize(rr, 32, 32);
        double n = 0;
        for (double v : m.data()) n += v;
        const double area = rr.h * rr.w;
        CHECK(std::abs(n - area) / area < 2 * (2 * (rr.h + rr.w)) / area);
    }
}

TEST_CASE("polygon iou examples") {
    const auto a = box(0, 0, 1, 1);
    CHECK(polygon_iou(a, a) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(polygon_iou(a, box(3, 3, 4, 4)) == 0.0);
    CHECK(polygon_iou(a, box(0.5, 0, 1.5, 1)) == doctest::Approx(1.0 / 3).epsilon(1e-14));
    CHECK(polygon_iou(a, TextPolygon{{{0, 0}, {1, 1}, {2, 2}}}) == 0.0);
    CHECK(polygon_iou(u_shape(0, 0), u_shape(0, 0)) == doctest::Approx(1.0));
}

TEST_CASE("convex iou matches the hull oracle, symmetric and rigid-invariant") {
    std::mt19937_64 rng(53);
    std::uniform_real_distribution<double> ang(-3.1, 3.1), sh(-50, 50);
    for (int i = 0; i < 500; ++i) {
        const auto ra = random_rect(rng, 8, 16), rb = random_rect(rng, 8, 16);
        const auto pa = to_polygon(ra), pb = to_polygon(rb);
        const double inter = convex_overlap_oracle(pa.vertices, pb.vertices);
        const double want = inter / (ra.h * ra.w + rb.h * rb.w - inter);
        const double got = polygon_iou(pa, pb);
        CHECK(got == doctest::Approx(want).epsilon(1e-9));
        CHECK(std::abs(got - polygon_iou(pb, pa)) < 1e-12);
        CHECK(std::abs(got - rect_iou(ra, rb)) < 1e-12);
        const double t = ang(rng), dx = sh(rng), dy = sh(rng);
        CHECK(std::abs(got - polygon_iou(transform(pa, t, dx, dy), transform(pb, t, dx, dy))) < 1e-9);
    }
}

TEST_CASE("concave against convex is exact") {
    std::mt19937_64 rng(54);
    std::uniform_real_distribution<double> ang(-3.1, 3.1), sh(-20, 20);
    const auto u = u_shape(0, 0);
    // window covering the notch: overlap is two 3x2 legs
    const auto w = box(0, 6, 9, 8);
    const double inter = 12.0;
    CHECK(polygon_iou(u, w) == doctest::Approx(inter / (polygon_area(u) + 18 - inter)).epsilon(1e-12));
    for (int i = 0; i < 100; ++i) {
        const auto r = to_polygon(random_rect(rng, 0, 9));
        const double a = polygon_iou(u, r);
        CHECK(std::abs(a - polygon_iou(r, u)) < 1e-12);
        const double t = ang(rng), dx = sh(rng), dy = sh(rng);
        CHECK(std::abs(a - polygon_iou(transform(u, t, dx, dy), transform(r, t, dx, dy))) < 1e-9);
    }
}

TEST_CASE("concave pairs fall back to supersampling") {
    const auto a = u_shape(0, 0), b = u_shape(3, 0);
    const double got = polygon_iou(a, b);
    CHECK(got == doctest::Approx(supersampled_iou(a, b, 4)));
    CHECK(std::abs(got - polygon_iou(b, a)) < 1e-12);
    // exact: only the bottom bars overlap (6x3); the legs interleave
    const double inter = 6 * 3;
    const double exact = inter / (2 * polygon_area(a) - inter);
    CHECK(std::abs(got - exact) < 0.02);
}

TEST_CASE("overlap counter") {
    reset_overlap_count();
    CHECK(overlap_count() == 0);
    for (int i = 0; i < 5; ++i) rect_iou({5, 5, 2, 2, 0}, {6, 5, 2, 2, 0});
    polygon_iou(box(0, 0, 1, 1), box(0, 0, 1, 1));
    CHECK(overlap_count() == 5);
    reset_overlap_count();
    CHECK(overlap_count() == 0);
}

TEST_CASE("clip_convex keeps the subject part inside") {
    const auto u = u_shape(0, 0);
    const auto clipped = clip_convex(u, box(-1, -1, 20, 2));
    CHECK(polygon_area(clipped) == doctest::Approx(18.0));
    CHECK(polygon_area(clip_convex(box(0, 0, 1, 1), box(5, 5, 6, 6))) == 0.0);
}
