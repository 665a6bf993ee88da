#pragma once

#include "lltext/geom.hpp"
#include "lltext/grid.hpp"
#include "lltext/maps.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace lltext {

struct ShapingConfig {
    double text_thresh = 0.5;
    double center_thresh = 0.5;
    double rect_width = 4.0;      // px at map scale
    std::size_t fps_budget = 64;  // per centre-region component
    double fps_stop_dist = 2.0;   // px; rect_width / 2
    int close_kernel = 5;         // odd, square structuring element
    double min_area = 10.0;       // px^2
    /// Regressed x/y are offsets from the pixel centre instead of absolute.
    bool offset_mode = false;
    /// Output coordinates are multiplied by this (map scale -> image scale).
    double output_scale = 1.0;

    /// Throws GeometryError on out-of-range settings.
    void validate() const;
};

/// 8-connected labelling. Labels are 1-based, 0 is background, numbered in
/// raster order of each component's first pixel.
struct Labels {
    std::vector<int> label;
    std::size_t height = 0;
    std::size_t width = 0;
    std::size_t count = 0;
};

Labels label_components(const Grid& mask);

/// Pixels of each component in raster order, as (col, row) coordinates.
std::vector<std::vector<Point>> component_pixels(const Labels& labels);

/// Binarises with value > thresh and returns one candidate set per component.
std::vector<std::vector<Point>> extract_centers(const Grid& center_map, double thresh);

/// Greedy farthest point sampling. Starts from `seed` (default: the point
/// nearest the centroid) and repeatedly adds the point whose distance to the
/// selected set is largest, lowest index on ties. Stops at `budget` points or
/// when that distance falls below `stop_dist`. Returns indices in selection
/// order.
std::vector<std::size_t> farthest_point_sample(std::span<const Point> points, std::size_t budget, double stop_dist,
                                               std::optional<std::size_t> seed = std::nullopt);

/// One rectangle per selected pixel from the regression maps. Pixels whose
/// regressed height is not positive are skipped.
std::vector<RotatedRect> build_components(std::span<const Point> centers, const GeometryMaps& geo,
                                          const ShapingConfig& cfg);

Grid dilate(const Grid& mask, int kernel);
Grid erode(const Grid& mask, int kernel);
/// Closing of the mask as a set in the plane, cropped to the frame.
Grid close_mask(const Grid& mask, int kernel);

Grid accumulate_and_close(std::span<const RotatedRect> rects, std::size_t height, std::size_t width,
                          const ShapingConfig& cfg);

/// Outer contour of each 8-connected component with at least `min_area`
/// pixels: Moore-neighbour trace of the pixel-edge outline, then
/// Douglas-Peucker at 1 px.
std::vector<TextPolygon> trace_contours(const Grid& mask, double min_area);

/// Ordered Moore-neighbour boundary pixels (col,row) of the component that
/// contains `start`, which must be its first pixel in raster order.
std::vector<Point> moore_trace(const Labels& labels, std::size_t start_row, std::size_t start_col);

/// Outline of the component's outer boundary along pixel edges (vertices on
/// integer corners, turning points only), clockwise on screen. Walks the same
/// Moore neighbourhood sweep as moore_trace; holes are not included.
std::vector<Point> outer_outline(const Labels& labels, std::size_t start_row, std::size_t start_col);
/// Douglas-Peucker on a closed ring.
std::vector<Point> simplify_ring(std::span<const Point> ring, double epsilon);

/// Full shaping pipeline, run independently per centre-region component.
std::vector<TextPolygon> shape_text(const GeometryMaps& maps, const ShapingConfig& cfg);

/// Greedy NMS over rotated rectangles, the baseline selection rule.
/// Returns indices of kept rects in descending score order.
std::vector<std::size_t> nms_baseline(std::span<const RotatedRect> rects, std::span<const double> scores,
                                      double iou_thresh = 0.5);

/// Mask produced from one candidate set via FPS selection.
Grid shape_mask_fps(std::span<const Point> candidates, const GeometryMaps& geo, const ShapingConfig& cfg);
/// Mask produced from the same candidates via NMS, scored by the centre map.
Grid shape_mask_nms(std::span<const Point> candidates, const GeometryMaps& geo, const ShapingConfig& cfg,
                    double iou_thresh = 0.5);

namespace reference {
std::vector<std::size_t> farthest_point_sample(std::span<const Point> points, std::size_t budget, double stop_dist,
                                               std::optional<std::size_t> seed = std::nullopt);
/// Direct k x k window morphology.
Grid dilate(const Grid& mask, int kernel);
Grid erode(const Grid& mask, int kernel);
} // namespace reference

} // namespace lltext
