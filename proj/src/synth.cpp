#include "lltext/dataio.hpp"

#include "lltext/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

namespace lltext {

namespace {

constexpr double kSampleStep = 0.25;  // px of arc length between centreline samples
constexpr double kVertexStep = 2.0;   // px of arc length between polygon vertices

struct Centerline {
    std::vector<Point> pts;
    std::vector<double> angle;   // tangent direction
    std::vector<double> arc;     // cumulative length
    std::vector<double> height;  // band height at the sample

    double length() const { return arc.back(); }
};

std::vector<Point> raw_polyline(const BandSpec& band) {
    if (!band.polyline.empty()) return band.polyline;
    std::vector<Point> pts;
    const double span = band.x_end - band.x_start;
    const auto steps = static_cast<std::size_t>(std::max(1.0, std::ceil(span / kSampleStep)));
    for (std::size_t i = 0; i <= steps; ++i) {
        const double x = band.x_start + span * static_cast<double>(i) / static_cast<double>(steps);
        const double y = band.baseline +
                         band.amplitude * std::sin(2.0 * std::numbers::pi * (x - band.x_start) / band.period + band.phase);
        pts.push_back({x, y});
    }
    return pts;
}

// Resamples the raw polyline at a uniform arc-length step.
Centerline build_centerline(const BandSpec& band) {
    const auto raw = raw_polyline(band);
    if (raw.size() < 2) throw GeometryError("band centreline needs at least two points");
    std::vector<double> cum{0.0};
    for (std::size_t i = 1; i < raw.size(); ++i) {
        cum.push_back(cum.back() + std::hypot(raw[i].x - raw[i - 1].x, raw[i].y - raw[i - 1].y));
    }
    const double total = cum.back();
    if (!(total > 0.0)) throw GeometryError("band centreline has zero length");
    Centerline c;
    const auto n = static_cast<std::size_t>(std::ceil(total / kSampleStep));
    std::size_t seg = 0;
    for (std::size_t i = 0; i <= n; ++i) {
        const double s = total * static_cast<double>(i) / static_cast<double>(n);
        while (seg + 2 < raw.size() && cum[seg + 1] < s) ++seg;
        const double seg_len = cum[seg + 1] - cum[seg];
        const double t = seg_len > 0.0 ? std::clamp((s - cum[seg]) / seg_len, 0.0, 1.0) : 0.0;
        c.pts.push_back({raw[seg].x + t * (raw[seg + 1].x - raw[seg].x), raw[seg].y + t * (raw[seg + 1].y - raw[seg].y)});
        c.arc.push_back(s);
        c.height.push_back(band.height_start + (band.height_end - band.height_start) * s / total);
    }
    const std::size_t m = c.pts.size();
    c.angle.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
        const Point a = c.pts[i == 0 ? 0 : i - 1];
        const Point b = c.pts[i + 1 == m ? m - 1 : i + 1];
        c.angle[i] = std::atan2(b.y - a.y, b.x - a.x);
    }
    return c;
}

// Band polygon between arc lengths [s0, s1] with half-height scale * h/2.
TextPolygon band_polygon(const Centerline& c, double s0, double s1, double scale) {
    std::vector<std::size_t> idx;
    double next = s0;
    for (std::size_t i = 0; i < c.pts.size(); ++i) {
        if (c.arc[i] < s0 - 1e-9 || c.arc[i] > s1 + 1e-9) continue;
        if (c.arc[i] + 1e-9 >= next) {
            idx.push_back(i);
            next = c.arc[i] + kVertexStep;
        }
    }
    std::size_t last = 0;
    for (std::size_t i = 0; i < c.pts.size(); ++i) {
        if (c.arc[i] <= s1 + 1e-9) last = i;
    }
    if (idx.empty() || idx.back() != last) idx.push_back(last);
    std::vector<Point> upper, lower;
    for (auto i : idx) {
        const double half = scale * c.height[i] / 2.0;
        const double nx = -std::sin(c.angle[i]), ny = std::cos(c.angle[i]);
        upper.push_back({c.pts[i].x + half * nx, c.pts[i].y + half * ny});
        lower.push_back({c.pts[i].x - half * nx, c.pts[i].y - half * ny});
    }
    TextPolygon poly;
    poly.vertices = upper;
    poly.vertices.insert(poly.vertices.end(), lower.rbegin(), lower.rend());
    return poly;
}

void check_band(const BandSpec& band, std::size_t height, std::size_t width) {
    if (!(band.height_start > 0.0) || !(band.height_end > 0.0)) throw GeometryError("band height must be positive");
    if (band.polyline.empty()) {
        if (!(band.x_end > band.x_start)) throw GeometryError("band x_end must exceed x_start");
        if (!(band.period > 0.0)) throw GeometryError("band period must be positive");
        // Curvature radius must exceed the half-height or the band folds.
        const double k = 2.0 * std::numbers::pi / band.period;
        const double curvature = std::abs(band.amplitude) * k * k;
        const double half = std::max(band.height_start, band.height_end) / 2.0;
        if (curvature * half >= 1.0) throw GeometryError("band too curved for its height");
    }
    const auto c = build_centerline(band);
    const auto poly = band_polygon(c, 0.0, c.length(), 1.0);
    for (const auto& v : poly.vertices) {
        if (v.x < 0.0 || v.y < 0.0 || v.x > static_cast<double>(width) || v.y > static_cast<double>(height)) {
            throw GeometryError("band leaves the " + std::to_string(height) + "x" + std::to_string(width) + " frame");
        }
    }
}

} // namespace

void SynthSpec::validate() const {
    if (height == 0 || width == 0) throw GeometryError("synthetic frame must be non-empty");
    if (!(gamma > 0.0 && gamma <= 1.0)) throw GeometryError("gamma must lie in (0, 1]");
    if (!(noise >= 0.0)) throw GeometryError("noise must be non-negative");
    if (!(core_end_trim >= 0.0)) throw GeometryError("core_end_trim must be non-negative");
    if (!(component_width > 0.0)) throw GeometryError("component_width must be positive");
    for (const auto& b : bands) check_band(b, height, width);
}

SynthResult synth_maps(const SynthSpec& spec, std::uint64_t seed) {
    spec.validate();
    SynthResult out;
    out.maps = GeometryMaps::zeros(spec.height, spec.width);
    auto& m = out.maps;
    for (const auto& band : spec.bands) {
        const auto c = build_centerline(band);
        const auto truth = band_polygon(c, 0.0, c.length(), 1.0);
        const Grid text = rasterize(truth, spec.height, spec.width);
        Grid core({spec.height, spec.width});
        const double s0 = spec.core_end_trim, s1 = c.length() - spec.core_end_trim;
        if (s1 > s0) core = rasterize(band_polygon(c, s0, s1, 0.5), spec.height, spec.width);

        for (std::size_t i = 0; i < spec.height; ++i)
            for (std::size_t j = 0; j < spec.width; ++j) {
                if (text.at(i, j) == 0.0) continue;
                const Point p{static_cast<double>(j) + 0.5, static_cast<double>(i) + 0.5};
                std::size_t best = 0;
                double best_d = std::numeric_limits<double>::infinity();
                for (std::size_t k = 0; k < c.pts.size(); ++k) {
                    const double d = std::hypot(c.pts[k].x - p.x, c.pts[k].y - p.y);
                    if (d < best_d) {
                        best_d = d;
                        best = k;
                    }
                }
                m.text.at(i, j) = 1.0;
                if (core.at(i, j) > 0.0) m.center.at(i, j) = 1.0;
                m.x.at(i, j) = c.pts[best].x;
                m.y.at(i, j) = c.pts[best].y;
                m.h.at(i, j) = c.height[best];
                m.w.at(i, j) = spec.component_width;
                m.theta.at(i, j) = normalize_angle(c.angle[best]);
            }
        out.truth.push_back(truth);
    }

    if (spec.gamma != 1.0 || spec.noise > 0.0) {
        std::mt19937_64 rng(seed);
        std::normal_distribution<double> gauss(0.0, spec.noise > 0.0 ? spec.noise : 1.0);
        for (Grid* g : {&m.text, &m.center}) {
            for (auto& v : g->data()) {
                v = 0.5 + spec.gamma * (v - 0.5);
                if (spec.noise > 0.0) v += gauss(rng);
                v = std::clamp(v, 0.0, 1.0);
            }
        }
    }
    return out;
}

CandidateSet synth_candidates(std::size_t k, std::uint64_t seed) {
    SynthSpec spec;
    spec.height = 64;
    spec.width = 64 + k / 6;
    spec.bands[0].baseline = 32;
    spec.bands[0].x_end = double(spec.width) - 24.0;
    auto syn = synth_maps(spec, seed);
    std::vector<Point> pool;
    for (std::size_t i = 0; i < spec.height; ++i)
        for (std::size_t j = 0; j < spec.width; ++j)
            if (syn.maps.center.at(i, j) > 0.5) pool.push_back({double(j), double(i)});
    if (pool.size() < k) throw GeometryError("candidate band too short");
    std::mt19937_64 rng(seed);
    std::shuffle(pool.begin(), pool.end(), rng);
    pool.resize(k);
    std::sort(pool.begin(), pool.end(), [](Point a, Point b) { return a.y < b.y || (a.y == b.y && a.x < b.x); });
    return {std::move(syn.maps), std::move(pool)};
}

} // namespace lltext
