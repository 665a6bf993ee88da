#include "lltext/maps.hpp"

#include "lltext/error.hpp"

#include <array>
#include <string_view>

namespace lltext {

namespace {

constexpr std::array<std::string_view, 7> kNames{"text", "center", "x", "y", "h", "w", "theta"};

} // namespace

GeometryMaps GeometryMaps::zeros(std::size_t height, std::size_t width) {
    const Grid z({height, width});
    return {z, z, z, z, z, z, z};
}

void GeometryMaps::validate() const {
    const std::array<const Grid*, 7> all{&text, &center, &x, &y, &h, &w, &theta};
    require_rank(text, 2, "GeometryMaps text");
    for (std::size_t i = 1; i < all.size(); ++i) {
        require_rank(*all[i], 2, "GeometryMaps " + std::string(kNames[i]));
        if (all[i]->shape() != text.shape()) {
            throw ShapeError("GeometryMaps", std::string(kNames[i]),
                             shape_string(all[i]->shape()) + " differs from text " + shape_string(text.shape()));
        }
    }
}

NamedGrids GeometryMaps::to_sections() const {
    validate();
    return {{"text", text}, {"center", center}, {"x", x}, {"y", y}, {"h", h}, {"w", w}, {"theta", theta}};
}

GeometryMaps GeometryMaps::from_sections(const NamedGrids& sections) {
    GeometryMaps m;
    const std::array<Grid*, 7> slots{&m.text, &m.center, &m.x, &m.y, &m.h, &m.w, &m.theta};
    std::array<bool, 7> seen{};
    for (const auto& [name, grid] : sections) {
        for (std::size_t i = 0; i < kNames.size(); ++i) {
            if (name == kNames[i]) {
                *slots[i] = grid;
                seen[i] = true;
            }
        }
    }
    for (std::size_t i = 0; i < kNames.size(); ++i) {
        if (!seen[i]) throw ShapeError("GeometryMaps", std::string(kNames[i]), "section missing");
    }
    m.validate();
    return m;
}

} // namespace lltext
