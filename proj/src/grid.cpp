#include "lltext/grid.hpp"

#include "lltext/error.hpp"

#include <cmath>

namespace lltext {

namespace {

void check_shape(const Grid::Shape& shape) {
    if (shape.empty() || shape.size() > 4) {
        throw ShapeError("Grid", "rank", "expected 1 to 4 dims, got " + std::to_string(shape.size()));
    }
}

} // namespace

std::size_t element_count(const Grid::Shape& shape) {
    std::size_t n = 1;
    for (auto d : shape) n *= d;
    return n;
}

std::string shape_string(const Grid::Shape& shape) {
    std::string s = "[";
    for (std::size_t i = 0; i < shape.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(shape[i]);
    }
    return s + "]";
}

Grid::Grid(Shape shape, double fill) : shape_(std::move(shape)) {
    check_shape(shape_);
    data_.assign(element_count(shape_), fill);
}

Grid::Grid(Shape shape, std::vector<double> data) : shape_(std::move(shape)), data_(std::move(data)) {
    check_shape(shape_);
    if (element_count(shape_) != data_.size()) {
        throw ShapeError("Grid", "data", "shape " + shape_string(shape_) + " needs " +
                                             std::to_string(element_count(shape_)) + " values, got " +
                                             std::to_string(data_.size()));
    }
}

std::size_t Grid::dim(std::size_t axis) const {
    if (axis >= shape_.size()) {
        throw ShapeError("Grid::dim", "axis " + std::to_string(axis), "rank is " + std::to_string(shape_.size()));
    }
    return shape_[axis];
}

Grid Grid::reshaped(Shape shape) const {
    return Grid(std::move(shape), data_);
}

bool Grid::all_finite() const noexcept {
    for (double v : data_) {
        if (!std::isfinite(v)) return false;
    }
    return true;
}

void require_rank(const Grid& g, std::size_t rank, const std::string& where) {
    if (g.rank() != rank) {
        throw ShapeError(where, "rank", "expected " + std::to_string(rank) + " dims, got " + shape_string(g.shape()));
    }
}

void require_same_shape(const Grid& a, const Grid& b, const std::string& where) {
    if (a.shape() != b.shape()) {
        throw ShapeError(where, "shape", shape_string(a.shape()) + " vs " + shape_string(b.shape()));
    }
}

} // namespace lltext
