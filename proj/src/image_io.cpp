#include "lltext/dataio.hpp"

#include "lltext/error.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace lltext {

namespace {

using Kind = FormatError::Kind;

bool is_space(std::uint8_t c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f'; }

// Reads one ASCII header integer, skipping whitespace and '#' comments.
std::uint64_t header_int(std::span<const std::uint8_t> b, std::size_t& pos, const char* what) {
    while (pos < b.size()) {
        if (is_space(b[pos])) {
            ++pos;
        } else if (b[pos] == '#') {
            while (pos < b.size() && b[pos] != '\n') ++pos;
        } else {
            break;
        }
    }
    if (pos >= b.size()) throw FormatError(Kind::Truncated, std::string("PGM header truncated before ") + what);
    std::uint64_t v = 0;
    std::size_t digits = 0;
    while (pos < b.size() && b[pos] >= '0' && b[pos] <= '9') {
        v = v * 10 + (b[pos] - '0');
        if (v > 1'000'000) throw FormatError(Kind::BadDims, std::string("PGM ") + what + " too large");
        ++pos;
        ++digits;
    }
    if (digits == 0) throw FormatError(Kind::BadValue, std::string("PGM header: expected ") + what);
    return v;
}

std::uint8_t to_byte(double v) { return static_cast<std::uint8_t>(std::clamp(std::round(v), 0.0, 255.0)); }

void put(RgbImage& img, std::int64_t row, std::int64_t col, std::array<std::uint8_t, 3> color) {
    if (row < 0 || col < 0 || row >= static_cast<std::int64_t>(img.height) || col >= static_cast<std::int64_t>(img.width)) {
        return;
    }
    const std::size_t at = (static_cast<std::size_t>(row) * img.width + static_cast<std::size_t>(col)) * 3;
    std::copy(color.begin(), color.end(), img.rgb.begin() + static_cast<std::ptrdiff_t>(at));
}

void draw_line(RgbImage& img, std::int64_t x0, std::int64_t y0, std::int64_t x1, std::int64_t y1,
               std::array<std::uint8_t, 3> color) {
    const std::int64_t dx = std::abs(x1 - x0), dy = -std::abs(y1 - y0);
    const std::int64_t sx = x0 < x1 ? 1 : -1, sy = y0 < y1 ? 1 : -1;
    std::int64_t err = dx + dy;
    while (true) {
        put(img, y0, x0, color);
        if (x0 == x1 && y0 == y1) break;
        const std::int64_t e2 = 2 * err;
        if (e2 >= dy) {
            err += dy;
            x0 += sx;
        }
        if (e2 <= dx) {
            err += dx;
            y0 += sy;
        }
    }
}

// Liang-Barsky clip of a segment to [lo, hi] on both axes.
bool clip_segment(double& x0, double& y0, double& x1, double& y1, double xlo, double xhi, double ylo, double yhi) {
    double t0 = 0.0, t1 = 1.0;
    const double dx = x1 - x0, dy = y1 - y0;
    const double p[4] = {-dx, dx, -dy, dy};
    const double q[4] = {x0 - xlo, xhi - x0, y0 - ylo, yhi - y0};
    for (int i = 0; i < 4; ++i) {
        if (p[i] == 0.0) {
            if (q[i] < 0.0) return false;
            continue;
        }
        const double t = q[i] / p[i];
        if (p[i] < 0.0) t0 = std::max(t0, t);
        else t1 = std::min(t1, t);
    }
    if (t0 > t1) return false;
    const double ax = x0 + t0 * dx, ay = y0 + t0 * dy;
    x1 = x0 + t1 * dx;
    y1 = y0 + t1 * dy;
    x0 = ax;
    y0 = ay;
    return true;
}

} // namespace

Grid decode_pgm(std::span<const std::uint8_t> b) {
    if (b.size() < 2 || b[0] != 'P' || b[1] != '5') throw FormatError(Kind::BadMagic, "not a binary PGM (expected P5)");
    std::size_t pos = 2;
    const auto width = header_int(b, pos, "width");
    const auto height = header_int(b, pos, "height");
    const auto maxval = header_int(b, pos, "maxval");
    if (width == 0 || height == 0) throw FormatError(Kind::BadDims, "PGM has zero extent");
    if (maxval == 0 || maxval > 255) throw FormatError(Kind::BadValue, "only 8-bit PGM is supported");
    if (pos >= b.size() || !is_space(b[pos])) throw FormatError(Kind::Truncated, "PGM header missing separator");
    ++pos;
    const std::uint64_t n = width * height;
    if (b.size() - pos < n) throw FormatError(Kind::Truncated, "PGM pixel data truncated");
    Grid g({static_cast<std::size_t>(height), static_cast<std::size_t>(width)});
    for (std::size_t i = 0; i < n; ++i) g[i] = static_cast<double>(b[pos + i]);
    return g;
}

Grid read_pgm(const std::filesystem::path& path) { return decode_pgm(read_file_bytes(path)); }

std::vector<std::uint8_t> encode_pgm(const Grid& gray) {
    require_rank(gray, 2, "encode_pgm");
    const std::string header =
        "P5\n" + std::to_string(gray.dim(1)) + " " + std::to_string(gray.dim(0)) + "\n255\n";
    std::vector<std::uint8_t> out(header.begin(), header.end());
    for (double v : gray.data()) out.push_back(to_byte(v));
    return out;
}

void write_pgm(const std::filesystem::path& path, const Grid& gray) { write_file_bytes(path, encode_pgm(gray)); }

std::array<std::uint8_t, 3> RgbImage::pixel(std::size_t row, std::size_t col) const {
    const std::size_t at = (row * width + col) * 3;
    return {rgb[at], rgb[at + 1], rgb[at + 2]};
}

RgbImage render_overlay(const Grid& gray, std::span<const TextPolygon> polygons, std::array<std::uint8_t, 3> color) {
    require_rank(gray, 2, "render_overlay");
    RgbImage img{gray.dim(0), gray.dim(1), {}};
    img.rgb.reserve(gray.size() * 3);
    for (double v : gray.data()) {
        const auto g = to_byte(v);
        img.rgb.insert(img.rgb.end(), {g, g, g});
    }
    for (const auto& poly : polygons) {
        const auto& v = poly.vertices;
        for (std::size_t i = 0; i < v.size(); ++i) {
            const auto& a = v[i];
            const auto& b = v[(i + 1) % v.size()];
            double x0 = std::floor(a.x), y0 = std::floor(a.y), x1 = std::floor(b.x), y1 = std::floor(b.y);
            // Segments reaching far outside are clipped first so drawing cost
            // stays proportional to the frame.
            const double margin = 2.0;
            if (!clip_segment(x0, y0, x1, y1, -margin, static_cast<double>(img.width) + margin, -margin,
                              static_cast<double>(img.height) + margin)) {
                continue;
            }
            draw_line(img, static_cast<std::int64_t>(std::round(x0)), static_cast<std::int64_t>(std::round(y0)),
                      static_cast<std::int64_t>(std::round(x1)), static_cast<std::int64_t>(std::round(y1)), color);
        }
    }
    return img;
}

std::vector<std::uint8_t> encode_ppm(const RgbImage& image) {
    const std::string header = "P6\n" + std::to_string(image.width) + " " + std::to_string(image.height) + "\n255\n";
    std::vector<std::uint8_t> out(header.begin(), header.end());
    out.insert(out.end(), image.rgb.begin(), image.rgb.end());
    return out;
}

void write_ppm(const std::filesystem::path& path, const RgbImage& image) {
    write_file_bytes(path, encode_ppm(image));
}

} // namespace lltext
