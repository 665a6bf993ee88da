#pragma once

#include "lltext/grid.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace lltext {

struct Point {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point&, const Point&) = default;
};

/// Text component box: centre, height across the text line, width along it,
/// and orientation in radians within (-pi/2, pi/2].
struct RotatedRect {
    double cx = 0.0;
    double cy = 0.0;
    double h = 1.0;
    double w = 1.0;
    double theta = 0.0;

    /// Throws GeometryError for non-positive extents or an out-of-range angle.
    void validate() const;
    friend bool operator==(const RotatedRect&, const RotatedRect&) = default;
};

/// Closed polygon; the last vertex connects back to the first.
struct TextPolygon {
    std::vector<Point> vertices;

    /// Throws GeometryError for < 3 vertices or zero area.
    void validate() const;
    friend bool operator==(const TextPolygon&, const TextPolygon&) = default;
};

/// Wraps any angle into (-pi/2, pi/2]; a rectangle is symmetric under pi.
double normalize_angle(double theta);

/// Corners in counter-clockwise order (positive shoelace area in x/y).
std::array<Point, 4> rect_corners(const RotatedRect& r);
TextPolygon to_polygon(const RotatedRect& r);

double signed_area(std::span<const Point> ring);
double polygon_area(const TextPolygon& p);
bool is_convex(const TextPolygon& p);

/// Even-odd point-in-polygon.
bool point_in_polygon(std::span<const Point> ring, Point p);

/// Sutherland-Hodgman: the part of `subject` inside the convex `clip`.
/// The subject may be concave; its area is exact.
TextPolygon clip_convex(const TextPolygon& subject, const TextPolygon& clip);

/// Pixel (i,j) is set when its centre (j+0.5, i+0.5) lies inside, even-odd.
Grid rasterize(const TextPolygon& poly, std::size_t height, std::size_t width);
Grid rasterize(const RotatedRect& rect, std::size_t height, std::size_t width);
/// ORs the polygon into an existing [H,W] mask.
void rasterize_into(const TextPolygon& poly, Grid& mask);

/// Intersection over union. Exact (clipping) when either operand is convex,
/// otherwise estimated on a 4x supersampled lattice. Degenerate input -> 0.
double polygon_iou(const TextPolygon& a, const TextPolygon& b);
double supersampled_iou(const TextPolygon& a, const TextPolygon& b, int factor = 4);

/// Rotated-rectangle IoU; every call bumps the overlap counter.
double rect_iou(const RotatedRect& a, const RotatedRect& b);

/// Process-wide count of rect_iou evaluations.
std::uint64_t overlap_count();
void reset_overlap_count();

namespace reference {
/// Per-pixel point-in-polygon test, serial.
Grid rasterize(const TextPolygon& poly, std::size_t height, std::size_t width);
} // namespace reference

} // namespace lltext
