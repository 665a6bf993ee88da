#include "lltext/tsr.hpp"

#include "lltext/error.hpp"
#include "lltext/parallel.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numeric>
#include <unordered_set>

namespace lltext {

namespace {

double dist(Point a, Point b) {
    const double dx = a.x - b.x, dy = a.y - b.y;
    return std::sqrt(dx * dx + dy * dy);
}

std::size_t centroid_seed(std::span<const Point> pts) {
    double sx = 0.0, sy = 0.0;
    for (const auto& p : pts) {
        sx += p.x;
        sy += p.y;
    }
    const Point c{sx / static_cast<double>(pts.size()), sy / static_cast<double>(pts.size())};
    std::size_t best = 0;
    double best_d = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const double d = dist(pts[i], c);
        if (d < best_d) {
            best_d = d;
            best = i;
        }
    }
    return best;
}

void check_fps_input(std::span<const Point> pts, std::optional<std::size_t> seed) {
    if (pts.empty()) throw GeometryError("farthest_point_sample: empty point set");
    if (seed && *seed >= pts.size()) throw GeometryError("farthest_point_sample: seed index out of range");
}

struct Best {
    double d = -1.0;
    std::size_t index = 0;
};

// 8-neighbourhood, clockwise on screen (y down) starting east.
constexpr std::array<int, 8> kDx{1, 1, 0, -1, -1, -1, 0, 1};
constexpr std::array<int, 8> kDy{0, 1, 1, 1, 0, -1, -1, -1};

int direction_of(int dx, int dy) {
    for (int i = 0; i < 8; ++i) {
        if (kDx[i] == dx && kDy[i] == dy) return i;
    }
    return -1;
}

std::vector<Point> drop_redundant(std::vector<Point> ring) {
    bool changed = true;
    while (changed && ring.size() >= 3) {
        changed = false;
        for (std::size_t i = 0; i < ring.size(); ++i) {
            const Point a = ring[(i + ring.size() - 1) % ring.size()], b = ring[i], c = ring[(i + 1) % ring.size()];
            const double cr = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
            if (b == a || cr == 0.0) {
                ring.erase(ring.begin() + static_cast<std::ptrdiff_t>(i));
                changed = true;
                break;
            }
        }
    }
    return ring;
}

void dp_chain(std::span<const Point> pts, std::size_t lo, std::size_t hi, double eps, std::vector<char>& keep) {
    if (hi <= lo + 1) return;
    const Point a = pts[lo], b = pts[hi];
    const double len = dist(a, b);
    double worst = -1.0;
    std::size_t at = lo;
    for (std::size_t i = lo + 1; i < hi; ++i) {
        const double d = len > 0.0
                             ? std::abs((b.x - a.x) * (a.y - pts[i].y) - (a.x - pts[i].x) * (b.y - a.y)) / len
                             : dist(a, pts[i]);
        if (d > worst) {
            worst = d;
            at = i;
        }
    }
    if (worst > eps) {
        keep[at] = 1;
        dp_chain(pts, lo, at, eps, keep);
        dp_chain(pts, at, hi, eps, keep);
    }
}

Grid window_filter(const Grid& mask, int kernel, bool take_max) {
    require_rank(mask, 2, take_max ? "dilate" : "erode");
    if (kernel < 1 || kernel % 2 == 0) throw GeometryError("morphology kernel must be a positive odd size");
    const auto h = static_cast<std::int64_t>(mask.dim(0)), w = static_cast<std::int64_t>(mask.dim(1));
    const std::int64_t r = kernel / 2;
    // Outside the frame counts as background for both operations.
    auto combine = [&](double acc, double v) { return take_max ? std::max(acc, v) : std::min(acc, v); };
    const double start = take_max ? 0.0 : 1.0;
    Grid rows(mask.shape()), out(mask.shape());
    par::parallel_for(0, h, [&](std::int64_t i) {
        for (std::int64_t j = 0; j < w; ++j) {
            double acc = start;
            for (std::int64_t k = j - r; k <= j + r; ++k) {
                acc = combine(acc, (k < 0 || k >= w) ? 0.0 : mask.at(static_cast<std::size_t>(i), static_cast<std::size_t>(k)));
            }
            rows.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = acc;
        }
    });
    par::parallel_for(0, h, [&](std::int64_t i) {
        for (std::int64_t j = 0; j < w; ++j) {
            double acc = start;
            for (std::int64_t k = i - r; k <= i + r; ++k) {
                acc = combine(acc, (k < 0 || k >= h) ? 0.0 : rows.at(static_cast<std::size_t>(k), static_cast<std::size_t>(j)));
            }
            out.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = acc;
        }
    });
    return out;
}

std::vector<Point> bbox_ring(std::span<const Point> pixels) {
    double x0 = pixels[0].x, x1 = x0, y0 = pixels[0].y, y1 = y0;
    for (const auto& p : pixels) {
        x0 = std::min(x0, p.x);
        x1 = std::max(x1, p.x);
        y0 = std::min(y0, p.y);
        y1 = std::max(y1, p.y);
    }
    return {{x0, y0}, {x1 + 1, y0}, {x1 + 1, y1 + 1}, {x0, y1 + 1}};
}

// Moore-neighbour walk around the outer boundary, clockwise on screen. For
// every visit of a boundary pixel, `visit(x, y, -1, true)` is called once, then
// `visit(x, y, d, false)` for each background 4-neighbour d met while sweeping.
// Stops when the start pixel is about to repeat its first move.
template <class Visit>
void moore_walk(const Labels& labels, std::size_t start_row, std::size_t start_col, Visit&& visit) {
    const auto h = static_cast<int>(labels.height), w = static_cast<int>(labels.width);
    const int id = labels.label[start_row * labels.width + start_col];
    auto inside = [&](int x, int y) {
        return x >= 0 && y >= 0 && x < w && y < h &&
               labels.label[static_cast<std::size_t>(y) * labels.width + static_cast<std::size_t>(x)] == id;
    };
    const int sx = static_cast<int>(start_col), sy = static_cast<int>(start_row);
    int px = sx, py = sy, bx = sx - 1, by = sy;
    int first_move = -2;
    const std::size_t limit = 4 * labels.label.size() + 16;
    for (std::size_t step = 0; step < limit; ++step) {
        const int k = direction_of(bx - px, by - py);
        int found = -1;
        for (int i = 1; i < 8; ++i) {
            const int d = (k + i) % 8;
            if (inside(px + kDx[d], py + kDy[d])) {
                found = d;
                break;
            }
        }
        const bool back_at_start = px == sx && py == sy && step > 0;
        if (back_at_start && found == first_move) {
            // finish the sweep up to the first move so the outline closes
            for (int i = 0; i < 8; ++i) {
                const int d = (k + i) % 8;
                if (d == found) break;
                if (d % 2 == 0) visit(px, py, d, false);
            }
            return;
        }
        visit(px, py, -1, true);
        for (int i = 0; i < 8; ++i) {
            const int d = (k + i) % 8;
            if (d == found) break;
            if (d % 2 == 0) visit(px, py, d, false);
        }
        if (found < 0) return;  // isolated pixel
        if (step == 0) first_move = found;
        const int prev = (found + 7) % 8;
        bx = px + kDx[prev];
        by = py + kDy[prev];
        px += kDx[found];
        py += kDy[found];
    }
}

} // namespace

void ShapingConfig::validate() const {
    if (!(text_thresh > 0.0 && text_thresh < 1.0)) throw GeometryError("text_thresh must lie in (0,1)");
    if (!(center_thresh > 0.0 && center_thresh < 1.0)) throw GeometryError("center_thresh must lie in (0,1)");
    if (!(rect_width > 0.0)) throw GeometryError("rect_width must be positive");
    if (fps_budget == 0) throw GeometryError("fps_budget must be positive");
    if (!(fps_stop_dist >= 0.0)) throw GeometryError("fps_stop_dist must be non-negative");
    if (close_kernel < 1 || close_kernel % 2 == 0) throw GeometryError("close_kernel must be a positive odd size");
    if (!(min_area >= 0.0)) throw GeometryError("min_area must be non-negative");
    if (!(output_scale > 0.0)) throw GeometryError("output_scale must be positive");
}

Labels label_components(const Grid& mask) {
    require_rank(mask, 2, "label_components");
    Labels out;
    out.height = mask.dim(0);
    out.width = mask.dim(1);
    out.label.assign(mask.size(), 0);
    const auto h = static_cast<std::int64_t>(out.height), w = static_cast<std::int64_t>(out.width);
    std::vector<std::size_t> stack;
    for (std::size_t start = 0; start < mask.size(); ++start) {
        if (mask[start] <= 0.5 || out.label[start] != 0) continue;
        const int id = static_cast<int>(++out.count);
        out.label[start] = id;
        stack.push_back(start);
        while (!stack.empty()) {
            const std::size_t cur = stack.back();
            stack.pop_back();
            const auto y = static_cast<std::int64_t>(cur / out.width), x = static_cast<std::int64_t>(cur % out.width);
            for (int d = 0; d < 8; ++d) {
                const std::int64_t ny = y + kDy[d], nx = x + kDx[d];
                if (ny < 0 || nx < 0 || ny >= h || nx >= w) continue;
                const auto ni = static_cast<std::size_t>(ny * w + nx);
                if (mask[ni] > 0.5 && out.label[ni] == 0) {
                    out.label[ni] = id;
                    stack.push_back(ni);
                }
            }
        }
    }
    return out;
}

std::vector<std::vector<Point>> component_pixels(const Labels& labels) {
    std::vector<std::vector<Point>> comps(labels.count);
    for (std::size_t i = 0; i < labels.label.size(); ++i) {
        if (labels.label[i] == 0) continue;
        comps[static_cast<std::size_t>(labels.label[i] - 1)].push_back(
            {static_cast<double>(i % labels.width), static_cast<double>(i / labels.width)});
    }
    return comps;
}

std::vector<std::vector<Point>> extract_centers(const Grid& center_map, double thresh) {
    require_rank(center_map, 2, "extract_centers");
    Grid bin(center_map.shape());
    for (std::size_t i = 0; i < bin.size(); ++i) bin[i] = center_map[i] > thresh ? 1.0 : 0.0;
    return component_pixels(label_components(bin));
}

std::vector<std::size_t> farthest_point_sample(std::span<const Point> pts, std::size_t budget, double stop_dist,
                                               std::optional<std::size_t> seed) {
    check_fps_input(pts, seed);
    std::vector<std::size_t> picked;
    if (budget == 0) return picked;
    const std::size_t n = pts.size();
    picked.push_back(seed ? *seed : centroid_seed(pts));
    std::vector<double> nearest(n, std::numeric_limits<double>::infinity());
    const std::size_t chunks = static_cast<std::size_t>(std::max(1, par::max_threads()));
    const std::size_t chunk_len = (n + chunks - 1) / chunks;
    std::vector<Best> partial(chunks);
    while (picked.size() < budget) {
        const Point last = pts[picked.back()];
        par::parallel_for(0, static_cast<std::int64_t>(chunks), [&](std::int64_t c) {
            const std::size_t lo = static_cast<std::size_t>(c) * chunk_len, hi = std::min(n, lo + chunk_len);
            Best best;
            for (std::size_t i = lo; i < hi; ++i) {
                nearest[i] = std::min(nearest[i], dist(pts[i], last));
                if (nearest[i] > best.d) best = {nearest[i], i};
            }
            partial[static_cast<std::size_t>(c)] = best;
        });
        Best best;
        for (const auto& b : partial) {
            if (b.d > best.d) best = b;
        }
        if (best.d <= 0.0 || best.d < stop_dist) break;
        picked.push_back(best.index);
    }
    return picked;
}

namespace reference {

std::vector<std::size_t> farthest_point_sample(std::span<const Point> pts, std::size_t budget, double stop_dist,
                                               std::optional<std::size_t> seed) {
    check_fps_input(pts, seed);
    std::vector<std::size_t> picked;
    if (budget == 0) return picked;
    picked.push_back(seed ? *seed : centroid_seed(pts));
    std::vector<double> nearest(pts.size(), std::numeric_limits<double>::infinity());
    while (picked.size() < budget) {
        Best best;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            nearest[i] = std::min(nearest[i], dist(pts[i], pts[picked.back()]));
            if (nearest[i] > best.d) best = {nearest[i], i};
        }
        if (best.d <= 0.0 || best.d < stop_dist) break;
        picked.push_back(best.index);
    }
    return picked;
}

Grid dilate(const Grid& mask, int kernel) {
    const auto h = static_cast<std::int64_t>(mask.dim(0)), w = static_cast<std::int64_t>(mask.dim(1));
    const int r = kernel / 2;
    Grid out(mask.shape());
    for (std::int64_t i = 0; i < h; ++i)
        for (std::int64_t j = 0; j < w; ++j) {
            double v = 0.0;
            for (std::int64_t di = -r; di <= r; ++di)
                for (std::int64_t dj = -r; dj <= r; ++dj) {
                    const std::int64_t y = i + di, x = j + dj;
                    if (y >= 0 && x >= 0 && y < h && x < w) v = std::max(v, mask.at(static_cast<std::size_t>(y), static_cast<std::size_t>(x)));
                }
            out.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = v;
        }
    return out;
}

Grid erode(const Grid& mask, int kernel) {
    const auto h = static_cast<std::int64_t>(mask.dim(0)), w = static_cast<std::int64_t>(mask.dim(1));
    const int r = kernel / 2;
    Grid out(mask.shape());
    for (std::int64_t i = 0; i < h; ++i)
        for (std::int64_t j = 0; j < w; ++j) {
            double v = 1.0;
            for (std::int64_t di = -r; di <= r; ++di)
                for (std::int64_t dj = -r; dj <= r; ++dj) {
                    const std::int64_t y = i + di, x = j + dj;
                    v = std::min(v, (y >= 0 && x >= 0 && y < h && x < w) ? mask.at(static_cast<std::size_t>(y), static_cast<std::size_t>(x)) : 0.0);
                }
            out.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = v;
        }
    return out;
}

} // namespace reference

std::vector<RotatedRect> build_components(std::span<const Point> centers, const GeometryMaps& geo,
                                          const ShapingConfig& cfg) {
    geo.validate();
    std::vector<RotatedRect> rects;
    rects.reserve(centers.size());
    for (const auto& p : centers) {
        if (p.x < 0 || p.y < 0 || p.x >= static_cast<double>(geo.width()) || p.y >= static_cast<double>(geo.height())) {
            throw GeometryError("build_components: centre outside the map");
        }
        const auto row = static_cast<std::size_t>(p.y), col = static_cast<std::size_t>(p.x);
        const double h = geo.h.at(row, col);
        if (!(h > 0.0) || !std::isfinite(h)) continue;
        RotatedRect r;
        r.cx = geo.x.at(row, col);
        r.cy = geo.y.at(row, col);
        if (cfg.offset_mode) {
            r.cx += p.x + 0.5;
            r.cy += p.y + 0.5;
        }
        r.h = h;
        r.w = cfg.rect_width;
        r.theta = normalize_angle(geo.theta.at(row, col));
        if (!std::isfinite(r.cx) || !std::isfinite(r.cy) || !std::isfinite(r.theta)) continue;
        rects.push_back(r);
    }
    return rects;
}

Grid dilate(const Grid& mask, int kernel) { return window_filter(mask, kernel, true); }
Grid erode(const Grid& mask, int kernel) { return window_filter(mask, kernel, false); }

Grid close_mask(const Grid& mask, int kernel) {
    require_rank(mask, 2, "close_mask");
    if (kernel < 1 || kernel % 2 == 0) throw GeometryError("morphology kernel must be a positive odd size");
    const std::size_t r = static_cast<std::size_t>(kernel / 2), h = mask.dim(0), w = mask.dim(1);
    Grid padded({h + 2 * r, w + 2 * r});
    for (std::size_t i = 0; i < h; ++i)
        for (std::size_t j = 0; j < w; ++j) padded.at(i + r, j + r) = mask.at(i, j);
    const Grid closed = erode(dilate(padded, kernel), kernel);
    Grid out(mask.shape());
    for (std::size_t i = 0; i < h; ++i)
        for (std::size_t j = 0; j < w; ++j) out.at(i, j) = closed.at(i + r, j + r);
    return out;
}

Grid accumulate_and_close(std::span<const RotatedRect> rects, std::size_t height, std::size_t width,
                          const ShapingConfig& cfg) {
    Grid mask({height, width});
    for (const auto& r : rects) rasterize_into(to_polygon(r), mask);
    if (rects.empty()) return mask;
    return close_mask(mask, cfg.close_kernel);
}

std::vector<Point> moore_trace(const Labels& labels, std::size_t start_row, std::size_t start_col) {
    std::vector<Point> boundary;
    moore_walk(labels, start_row, start_col, [&](int x, int y, int, bool first) {
        if (first) boundary.push_back({static_cast<double>(x), static_cast<double>(y)});
    });
    return boundary;
}

std::vector<Point> outer_outline(const Labels& labels, std::size_t start_row, std::size_t start_col) {
    // Start corner of the edge of pixel (x,y) facing an even direction, so that
    // edges run clockwise on screen around the pixel.
    auto edge_start = [](int x, int y, int d) {
        switch (d) {
        case 0: return Point{static_cast<double>(x + 1), static_cast<double>(y)};
        case 2: return Point{static_cast<double>(x + 1), static_cast<double>(y + 1)};
        case 4: return Point{static_cast<double>(x), static_cast<double>(y + 1)};
        default: return Point{static_cast<double>(x), static_cast<double>(y)};
        }
    };
    std::vector<Point> corners;
    std::unordered_set<std::uint64_t> seen;
    const auto width = static_cast<std::uint64_t>(labels.width);
    moore_walk(labels, start_row, start_col, [&](int x, int y, int d, bool) {
        if (d < 0) return;
        const std::uint64_t key = ((static_cast<std::uint64_t>(y) * width + static_cast<std::uint64_t>(x)) << 2) |
                                  static_cast<std::uint64_t>(d / 2);
        if (seen.insert(key).second) corners.push_back(edge_start(x, y, d));
    });
    // keep only the corners where the outline turns
    std::vector<Point> ring;
    const std::size_t n = corners.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point a = corners[(i + n - 1) % n], b = corners[i], c = corners[(i + 1) % n];
        if ((b.x - a.x) * (c.y - b.y) - (b.y - a.y) * (c.x - b.x) != 0.0) ring.push_back(b);
    }
    return ring;
}

std::vector<Point> simplify_ring(std::span<const Point> ring, double epsilon) {
    const std::size_t n = ring.size();
    if (n < 4) return {ring.begin(), ring.end()};
    std::size_t far = 0;
    double far_d = -1.0;
    for (std::size_t i = 1; i < n; ++i) {
        const double d = dist(ring[0], ring[i]);
        if (d > far_d) {
            far_d = d;
            far = i;
        }
    }
    // Close the ring so the second chain ends back at vertex 0.
    std::vector<Point> closed(ring.begin(), ring.end());
    closed.push_back(ring[0]);
    std::vector<char> keep(closed.size(), 0);
    keep[0] = keep[far] = keep[n] = 1;
    dp_chain(closed, 0, far, epsilon, keep);
    dp_chain(closed, far, n, epsilon, keep);
    std::vector<Point> out;
    for (std::size_t i = 0; i < n; ++i) {
        if (keep[i]) out.push_back(closed[i]);
    }
    return out;
}

std::vector<TextPolygon> trace_contours(const Grid& mask, double min_area) {
    const Labels labels = label_components(mask);
    const auto comps = component_pixels(labels);
    std::vector<TextPolygon> out;
    for (const auto& pixels : comps) {
        if (static_cast<double>(pixels.size()) < min_area) continue;
        const auto start = pixels.front();
        const auto outline = outer_outline(labels, static_cast<std::size_t>(start.y), static_cast<std::size_t>(start.x));
        auto ring = drop_redundant(simplify_ring(outline, 1.0));
        if (ring.size() < 3 || std::abs(signed_area(ring)) == 0.0) ring = bbox_ring(pixels);
        if (signed_area(ring) < 0.0) std::reverse(ring.begin(), ring.end());
        out.push_back({std::move(ring)});
    }
    return out;
}

static std::vector<RotatedRect> fps_components(std::span<const Point> candidates, const GeometryMaps& geo,
                                               const ShapingConfig& cfg) {
    if (candidates.empty()) return {};
    const auto picked = farthest_point_sample(candidates, cfg.fps_budget, cfg.fps_stop_dist);
    std::vector<Point> centers;
    centers.reserve(picked.size());
    for (auto i : picked) centers.push_back(candidates[i]);
    return build_components(centers, geo, cfg);
}

std::vector<TextPolygon> shape_text(const GeometryMaps& maps, const ShapingConfig& cfg) {
    maps.validate();
    cfg.validate();
    const std::size_t h = maps.height(), w = maps.width();
    Grid text({h, w}), seeds({h, w});
    for (std::size_t i = 0; i < seeds.size(); ++i) {
        text[i] = maps.text[i] > cfg.text_thresh ? 1.0 : 0.0;
        seeds[i] = (maps.center[i] > cfg.center_thresh && text[i] > 0.0) ? 1.0 : 0.0;
    }
    const auto regions = label_components(text);
    const auto comps = component_pixels(label_components(seeds));

    // Rectangles from every centre component inside one text region are
    // accumulated together, so fragments of a line close into one contour.
    std::vector<std::vector<RotatedRect>> by_region(regions.count);
    for (const auto& candidates : comps) {
        const auto& first = candidates.front();
        const auto r = regions.label[static_cast<std::size_t>(first.y) * w + static_cast<std::size_t>(first.x)];
        auto rects = fps_components(candidates, maps, cfg);
        auto& dst = by_region[static_cast<std::size_t>(r - 1)];
        dst.insert(dst.end(), rects.begin(), rects.end());
    }

    std::vector<TextPolygon> out;
    for (const auto& rects : by_region) {
        if (rects.empty()) continue;
        for (auto& poly : trace_contours(accumulate_and_close(rects, h, w, cfg), cfg.min_area)) {
            if (cfg.output_scale != 1.0) {
                for (auto& v : poly.vertices) {
                    v.x *= cfg.output_scale;
                    v.y *= cfg.output_scale;
                }
            }
            out.push_back(std::move(poly));
        }
    }
    return out;
}

std::vector<std::size_t> nms_baseline(std::span<const RotatedRect> rects, std::span<const double> scores,
                                      double iou_thresh) {
    if (rects.size() != scores.size()) throw GeometryError("nms_baseline: scores must align with rects");
    std::vector<std::size_t> order(rects.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return scores[a] > scores[b]; });
    std::vector<char> suppressed(rects.size(), 0);
    std::vector<std::size_t> kept;
    for (std::size_t oi = 0; oi < order.size(); ++oi) {
        const std::size_t i = order[oi];
        if (suppressed[i]) continue;
        kept.push_back(i);
        for (std::size_t oj = oi + 1; oj < order.size(); ++oj) {
            const std::size_t j = order[oj];
            if (!suppressed[j] && rect_iou(rects[i], rects[j]) > iou_thresh) suppressed[j] = 1;
        }
    }
    return kept;
}

Grid shape_mask_fps(std::span<const Point> candidates, const GeometryMaps& geo, const ShapingConfig& cfg) {
    return accumulate_and_close(fps_components(candidates, geo, cfg), geo.height(), geo.width(), cfg);
}

Grid shape_mask_nms(std::span<const Point> candidates, const GeometryMaps& geo, const ShapingConfig& cfg,
                    double iou_thresh) {
    std::vector<RotatedRect> rects;
    std::vector<double> scores;
    for (const auto& p : candidates) {
        const auto one = build_components(std::span<const Point>(&p, 1), geo, cfg);
        if (one.empty()) continue;
        rects.push_back(one.front());
        scores.push_back(geo.center.at(static_cast<std::size_t>(p.y), static_cast<std::size_t>(p.x)));
    }
    const auto kept = nms_baseline(rects, scores, iou_thresh);
    std::vector<RotatedRect> survivors;
    for (auto i : kept) survivors.push_back(rects[i]);
    return accumulate_and_close(survivors, geo.height(), geo.width(), cfg);
}

} // namespace lltext
