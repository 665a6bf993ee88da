#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lltext {

/// Tensor or map dimensions that do not fit together.
class ShapeError : public std::invalid_argument {
public:
    ShapeError(std::string where, std::string dimension, std::string detail)
        : std::invalid_argument(where + ": " + dimension + ": " + detail),
          where_(std::move(where)), dimension_(std::move(dimension)) {}

    const std::string& where() const noexcept { return where_; }
    const std::string& dimension() const noexcept { return dimension_; }

private:
    std::string where_;
    std::string dimension_;
};

/// Malformed geometry (too few vertices, non-positive extents, ...).
class GeometryError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Text annotation parse failure with 1-based line/column.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ": " + msg),
          line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// Binary container (MapFile, PGM) failure.
class FormatError : public std::runtime_error {
public:
    enum class Kind { BadMagic, UnsupportedVersion, Truncated, BadDims, BadValue, Io };

    FormatError(Kind kind, const std::string& msg)
        : std::runtime_error(msg), kind_(kind) {}

    Kind kind() const noexcept { return kind_; }

private:
    Kind kind_;
};

} // namespace lltext
