#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace lltext {

/// Dense row-major array of doubles with 1 to 4 dimensions.
class Grid {
public:
    using Shape = std::vector<std::size_t>;

    Grid() = default;
    explicit Grid(Shape shape, double fill = 0.0);
    Grid(Shape shape, std::vector<double> data);

    static Grid zeros_like(const Grid& other) { return Grid(other.shape_); }

    const Shape& shape() const noexcept { return shape_; }
    std::size_t rank() const noexcept { return shape_.size(); }
    std::size_t dim(std::size_t axis) const;
    std::size_t size() const noexcept { return data_.size(); }
    bool empty() const noexcept { return data_.empty(); }

    std::span<double> data() noexcept { return data_; }
    std::span<const double> data() const noexcept { return data_; }
    const std::vector<double>& values() const noexcept { return data_; }

    double& operator[](std::size_t flat) noexcept { return data_[flat]; }
    double operator[](std::size_t flat) const noexcept { return data_[flat]; }

    double& at(std::size_t i, std::size_t j) noexcept { return data_[i * shape_[1] + j]; }
    double at(std::size_t i, std::size_t j) const noexcept { return data_[i * shape_[1] + j]; }

    double& at(std::size_t i, std::size_t j, std::size_t k) noexcept {
        return data_[(i * shape_[1] + j) * shape_[2] + k];
    }
    double at(std::size_t i, std::size_t j, std::size_t k) const noexcept {
        return data_[(i * shape_[1] + j) * shape_[2] + k];
    }

    double& at(std::size_t i, std::size_t j, std::size_t k, std::size_t l) noexcept {
        return data_[((i * shape_[1] + j) * shape_[2] + k) * shape_[3] + l];
    }
    double at(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const noexcept {
        return data_[((i * shape_[1] + j) * shape_[2] + k) * shape_[3] + l];
    }

    /// Same data under a new shape with equal element count.
    Grid reshaped(Shape shape) const;

    bool all_finite() const noexcept;

    friend bool operator==(const Grid& a, const Grid& b) = default;

private:
    Shape shape_;
    std::vector<double> data_;
};

/// Ordered named tensors, the unit of map/parameter files.
using NamedGrids = std::vector<std::pair<std::string, Grid>>;

std::size_t element_count(const Grid::Shape& shape);
std::string shape_string(const Grid::Shape& shape);

/// Throws ShapeError naming `where` unless `g` has exactly `rank` dims.
void require_rank(const Grid& g, std::size_t rank, const std::string& where);
void require_same_shape(const Grid& a, const Grid& b, const std::string& where);

} // namespace lltext
