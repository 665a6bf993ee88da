#include "lltext/geom.hpp"

#include "lltext/error.hpp"
#include "lltext/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>

namespace lltext {

namespace {

std::atomic<std::uint64_t> g_overlaps{0};

double cross(Point o, Point a, Point b) { return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x); }

// x where edge a-b crosses the horizontal line at y. Shared by the scanline
// and per-pixel paths so both classify pixels identically.
inline double crossing_x(Point a, Point b, double y) { return (b.x - a.x) * (y - a.y) / (b.y - a.y) + a.x; }

inline bool spans(Point a, Point b, double y) { return (a.y > y) != (b.y > y); }

void require_ring(const TextPolygon& p, const char* where) {
    if (p.vertices.size() < 3) {
        throw GeometryError(std::string(where) + ": polygon needs at least 3 vertices, got " +
                            std::to_string(p.vertices.size()));
    }
}

void sorted_crossings(std::span<const Point> ring, double y, std::vector<double>& xs) {
    xs.clear();
    const std::size_t n = ring.size();
    for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
        if (spans(ring[i], ring[j], y)) xs.push_back(crossing_x(ring[i], ring[j], y));
    }
    std::sort(xs.begin(), xs.end());
}

// First integer j with j + 0.5 >= c.
std::int64_t first_pixel_at_or_after(double c) {
    auto j = static_cast<std::int64_t>(std::ceil(c - 0.5));
    while (static_cast<double>(j - 1) + 0.5 >= c) --j;
    while (static_cast<double>(j) + 0.5 < c) ++j;
    return j;
}

void scan_row(std::span<const Point> ring, std::size_t row, std::size_t width, double* out,
              std::vector<double>& xs) {
    sorted_crossings(ring, static_cast<double>(row) + 0.5, xs);
    const auto w = static_cast<std::int64_t>(width);
    for (std::size_t k = 0; k + 1 < xs.size(); k += 2) {
        const std::int64_t lo = std::max<std::int64_t>(0, first_pixel_at_or_after(xs[k]));
        const std::int64_t hi = std::min<std::int64_t>(w, first_pixel_at_or_after(xs[k + 1]));
        for (std::int64_t j = lo; j < hi; ++j) out[j] = 1.0;
    }
}

struct RowRange {
    std::size_t begin = 0;
    std::size_t end = 0;
};

RowRange rows_touched(std::span<const Point> ring, std::size_t height) {
    double lo = ring[0].y, hi = ring[0].y;
    for (const auto& p : ring) {
        lo = std::min(lo, p.y);
        hi = std::max(hi, p.y);
    }
    if (!(hi > 0.0) || !(lo < static_cast<double>(height))) return {};
    const double b = std::max(0.0, std::floor(lo - 0.5));
    const double e = std::min(static_cast<double>(height), std::ceil(hi + 0.5));
    return {static_cast<std::size_t>(b), static_cast<std::size_t>(e)};
}

// Number of lattice samples origin + (c + 0.5)/f inside [lo, hi).
std::int64_t samples_in(double lo, double hi, double origin, int f) {
    if (!(hi > lo)) return 0;
    const double a = std::ceil((lo - origin) * f - 0.5);
    const double b = std::ceil((hi - origin) * f - 0.5);
    return b > a ? static_cast<std::int64_t>(b - a) : 0;
}

} // namespace

void RotatedRect::validate() const {
    if (!(h > 0.0) || !(w > 0.0)) throw GeometryError("RotatedRect: h and w must be positive");
    if (!(theta > -std::numbers::pi / 2) || !(theta <= std::numbers::pi / 2)) {
        throw GeometryError("RotatedRect: theta must lie in (-pi/2, pi/2]");
    }
    if (!std::isfinite(cx) || !std::isfinite(cy)) throw GeometryError("RotatedRect: centre must be finite");
}

void TextPolygon::validate() const {
    require_ring(*this, "TextPolygon");
    if (!(std::abs(signed_area(vertices)) > 0.0)) throw GeometryError("TextPolygon: zero area");
}

double normalize_angle(double theta) {
    constexpr double pi = std::numbers::pi;
    double t = std::fmod(theta, pi);
    if (t > pi / 2) t -= pi;
    if (t <= -pi / 2) t += pi;
    return t;
}

std::array<Point, 4> rect_corners(const RotatedRect& r) {
    const double c = std::cos(r.theta), s = std::sin(r.theta);
    const double hw = r.w / 2, hh = r.h / 2;
    const std::array<Point, 4> local{Point{-hw, -hh}, Point{hw, -hh}, Point{hw, hh}, Point{-hw, hh}};
    std::array<Point, 4> out;
    for (std::size_t i = 0; i < 4; ++i) {
        out[i] = {r.cx + local[i].x * c - local[i].y * s, r.cy + local[i].x * s + local[i].y * c};
    }
    return out;
}

TextPolygon to_polygon(const RotatedRect& r) {
    const auto c = rect_corners(r);
    return {{c.begin(), c.end()}};
}

double signed_area(std::span<const Point> ring) {
    const std::size_t n = ring.size();
    if (n < 3) return 0.0;
    double acc = 0.0;
    for (std::size_t i = 0, j = n - 1; i < n; j = i++) acc += ring[j].x * ring[i].y - ring[i].x * ring[j].y;
    return acc / 2.0;
}

double polygon_area(const TextPolygon& p) { return std::abs(signed_area(p.vertices)); }

bool is_convex(const TextPolygon& p) {
    std::vector<Point> v;
    for (const auto& q : p.vertices) {
        if (v.empty() || !(v.back() == q)) v.push_back(q);
    }
    while (v.size() > 1 && v.back() == v.front()) v.pop_back();
    const std::size_t n = v.size();
    if (n < 3) return false;
    int sign = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double c = cross(v[i], v[(i + 1) % n], v[(i + 2) % n]);
        if (c == 0.0) continue;
        const int s = c > 0 ? 1 : -1;
        if (sign == 0) sign = s;
        else if (s != sign) return false;
    }
    // Reject rings that wind more than once.
    double turning = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const Point a = v[i], b = v[(i + 1) % n], c = v[(i + 2) % n];
        const double a1 = std::atan2(b.y - a.y, b.x - a.x);
        const double a2 = std::atan2(c.y - b.y, c.x - b.x);
        double d = a2 - a1;
        while (d > std::numbers::pi) d -= 2 * std::numbers::pi;
        while (d <= -std::numbers::pi) d += 2 * std::numbers::pi;
        turning += d;
    }
    return sign != 0 && std::abs(std::abs(turning) - 2 * std::numbers::pi) < 1e-6;
}

bool point_in_polygon(std::span<const Point> ring, Point p) {
    bool inside = false;
    const std::size_t n = ring.size();
    for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
        if (spans(ring[i], ring[j], p.y) && p.x < crossing_x(ring[i], ring[j], p.y)) inside = !inside;
    }
    return inside;
}

TextPolygon clip_convex(const TextPolygon& subject, const TextPolygon& clip) {
    require_ring(subject, "clip_convex subject");
    require_ring(clip, "clip_convex clip");
    const double orient = signed_area(clip.vertices) >= 0.0 ? 1.0 : -1.0;
    std::vector<Point> output = subject.vertices;
    const auto& cv = clip.vertices;
    for (std::size_t e = 0; e < cv.size() && !output.empty(); ++e) {
        const Point a = cv[e], b = cv[(e + 1) % cv.size()];
        auto side = [&](Point p) { return orient * cross(a, b, p); };
        std::vector<Point> input;
        input.swap(output);
        for (std::size_t i = 0; i < input.size(); ++i) {
            const Point cur = input[i], prev = input[(i + input.size() - 1) % input.size()];
            const double sc = side(cur), sp = side(prev);
            if (sc >= 0.0) {
                if (sp < 0.0) {
                    const double t = sp / (sp - sc);
                    output.push_back({prev.x + t * (cur.x - prev.x), prev.y + t * (cur.y - prev.y)});
                }
                output.push_back(cur);
            } else if (sp >= 0.0) {
                const double t = sp / (sp - sc);
                output.push_back({prev.x + t * (cur.x - prev.x), prev.y + t * (cur.y - prev.y)});
            }
        }
    }
    return {std::move(output)};
}

Grid rasterize(const TextPolygon& poly, std::size_t height, std::size_t width) {
    Grid mask({height, width});
    rasterize_into(poly, mask);
    return mask;
}

Grid rasterize(const RotatedRect& rect, std::size_t height, std::size_t width) {
    return rasterize(to_polygon(rect), height, width);
}

void rasterize_into(const TextPolygon& poly, Grid& mask) {
    require_ring(poly, "rasterize");
    require_rank(mask, 2, "rasterize mask");
    const std::size_t height = mask.dim(0), width = mask.dim(1);
    if (height == 0 || width == 0) return;
    const auto rows = rows_touched(poly.vertices, height);
    par::parallel_for(static_cast<std::int64_t>(rows.begin), static_cast<std::int64_t>(rows.end), [&](std::int64_t r) {
        std::vector<double> xs;
        const auto row = static_cast<std::size_t>(r);
        scan_row(poly.vertices, row, width, mask.data().data() + row * width, xs);
    });
}

namespace reference {

Grid rasterize(const TextPolygon& poly, std::size_t height, std::size_t width) {
    require_ring(poly, "rasterize");
    Grid mask({height, width});
    for (std::size_t i = 0; i < height; ++i)
        for (std::size_t j = 0; j < width; ++j) {
            const Point c{static_cast<double>(j) + 0.5, static_cast<double>(i) + 0.5};
            if (point_in_polygon(poly.vertices, c)) mask.at(i, j) = 1.0;
        }
    return mask;
}

} // namespace reference

double supersampled_iou(const TextPolygon& a, const TextPolygon& b, int factor) {
    if (a.vertices.size() < 3 || b.vertices.size() < 3 || factor < 1) return 0.0;
    double x0 = a.vertices[0].x, x1 = x0, y0 = a.vertices[0].y, y1 = y0;
    for (const auto* poly : {&a, &b}) {
        for (const auto& p : poly->vertices) {
            x0 = std::min(x0, p.x);
            x1 = std::max(x1, p.x);
            y0 = std::min(y0, p.y);
            y1 = std::max(y1, p.y);
        }
    }
    const auto rows = static_cast<std::int64_t>(std::ceil((y1 - y0) * factor));
    std::int64_t in_a = 0, in_b = 0, in_both = 0;
    std::vector<double> xa, xb;
    for (std::int64_t r = 0; r < rows; ++r) {
        const double y = y0 + (static_cast<double>(r) + 0.5) / factor;
        sorted_crossings(a.vertices, y, xa);
        sorted_crossings(b.vertices, y, xb);
        for (std::size_t k = 0; k + 1 < xa.size(); k += 2) in_a += samples_in(xa[k], xa[k + 1], x0, factor);
        for (std::size_t k = 0; k + 1 < xb.size(); k += 2) in_b += samples_in(xb[k], xb[k + 1], x0, factor);
        std::size_t i = 0, j = 0;
        while (i + 1 < xa.size() && j + 1 < xb.size()) {
            const double lo = std::max(xa[i], xb[j]);
            const double hi = std::min(xa[i + 1], xb[j + 1]);
            in_both += samples_in(lo, hi, x0, factor);
            if (xa[i + 1] < xb[j + 1]) i += 2;
            else j += 2;
        }
    }
    const std::int64_t uni = in_a + in_b - in_both;
    return uni > 0 ? static_cast<double>(in_both) / static_cast<double>(uni) : 0.0;
}

double polygon_iou(const TextPolygon& a, const TextPolygon& b) {
    if (a.vertices.size() < 3 || b.vertices.size() < 3) return 0.0;
    const double area_a = polygon_area(a), area_b = polygon_area(b);
    if (!(area_a > 0.0) || !(area_b > 0.0)) return 0.0;
    double inter = 0.0;
    if (is_convex(b)) {
        inter = polygon_area(clip_convex(a, b));
    } else if (is_convex(a)) {
        inter = polygon_area(clip_convex(b, a));
    } else {
        return supersampled_iou(a, b);
    }
    const double uni = area_a + area_b - inter;
    return uni > 0.0 ? std::clamp(inter / uni, 0.0, 1.0) : 0.0;
}

double rect_iou(const RotatedRect& a, const RotatedRect& b) {
    g_overlaps.fetch_add(1, std::memory_order_relaxed);
    const auto pa = to_polygon(a), pb = to_polygon(b);
    const double inter = polygon_area(clip_convex(pa, pb));
    const double uni = a.w * a.h + b.w * b.h - inter;
    return uni > 0.0 ? std::clamp(inter / uni, 0.0, 1.0) : 0.0;
}

std::uint64_t overlap_count() { return g_overlaps.load(std::memory_order_relaxed); }
void reset_overlap_count() { g_overlaps.store(0, std::memory_order_relaxed); }

} // namespace lltext
