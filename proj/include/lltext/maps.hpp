#pragma once

#include "lltext/grid.hpp"

#include <cstddef>

namespace lltext {

/// Per-pixel detector outputs at map scale, each [H,W]: the text and
/// centre-region probabilities plus the rotated-rectangle regression
/// channels (x, y, h, w, theta).
struct GeometryMaps {
    Grid text;
    Grid center;
    Grid x;
    Grid y;
    Grid h;
    Grid w;
    Grid theta;

    static GeometryMaps zeros(std::size_t height, std::size_t width);

    std::size_t height() const { return text.dim(0); }
    std::size_t width() const { return text.dim(1); }

    /// Throws ShapeError unless all seven channels are [H,W] of equal size.
    void validate() const;

    NamedGrids to_sections() const;
    static GeometryMaps from_sections(const NamedGrids& sections);
};

} // namespace lltext
