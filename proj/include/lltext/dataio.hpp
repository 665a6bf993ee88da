#pragma once

#include "lltext/geom.hpp"
#include "lltext/grid.hpp"
#include "lltext/maps.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lltext {

// ---------------------------------------------------------------------------
// Annotations: one polygon per line, "x1,y1,x2,y2,...[,#ignore]".
// ---------------------------------------------------------------------------

struct Annotation {
    TextPolygon polygon;
    bool ignore = false;
};

/// Strict parser; ParseError carries the 1-based line and column.
std::vector<Annotation> parse_annotations_text(std::string_view text);
std::vector<Annotation> parse_annotations(const std::filesystem::path& path);

/// Vertices are rounded to integers and clamped at 0. Polygons that collapse
/// below 3 distinct vertices are dropped.
std::string format_annotations(std::span<const Annotation> annotations);
std::string format_annotations(std::span<const TextPolygon> polygons);
void write_annotations(const std::filesystem::path& path, std::span<const TextPolygon> polygons);

// ---------------------------------------------------------------------------
// MapFile ("TMAP"): little-endian container of named float64 tensors.
//
//   magic "TMAP" | u16 version (1) | u16 section count
//   per section: u16 name length | name bytes | u8 rank (1..4)
//                | u32 dims[rank] | f64 payload[prod(dims)]
// ---------------------------------------------------------------------------

inline constexpr std::uint16_t kMapVersion = 1;

std::vector<std::uint8_t> encode_map(const NamedGrids& sections);
/// Throws FormatError for any malformed input; never reads out of bounds.
NamedGrids decode_map(std::span<const std::uint8_t> bytes);

void write_map(const std::filesystem::path& path, const NamedGrids& sections);
NamedGrids read_map(const std::filesystem::path& path);

void write_geometry_maps(const std::filesystem::path& path, const GeometryMaps& maps);
GeometryMaps read_geometry_maps(const std::filesystem::path& path);

// ---------------------------------------------------------------------------
// Images: binary PGM (P5) in, binary PPM (P6) out, 8-bit.
// ---------------------------------------------------------------------------

/// [H,W] grid of raw sample values (0..maxval).
Grid decode_pgm(std::span<const std::uint8_t> bytes);
Grid read_pgm(const std::filesystem::path& path);
std::vector<std::uint8_t> encode_pgm(const Grid& gray);
void write_pgm(const std::filesystem::path& path, const Grid& gray);

struct RgbImage {
    std::size_t height = 0;
    std::size_t width = 0;
    std::vector<std::uint8_t> rgb;  // row-major, 3 bytes per pixel

    std::array<std::uint8_t, 3> pixel(std::size_t row, std::size_t col) const;
};

inline constexpr std::array<std::uint8_t, 3> kOutlineColor{255, 0, 0};

/// Grey image converted to RGB with each polygon drawn as a closed 1-px
/// outline. Vertex (x, y) maps to pixel (floor(y), floor(x)); off-frame
/// pixels are skipped.
RgbImage render_overlay(const Grid& gray, std::span<const TextPolygon> polygons,
                        std::array<std::uint8_t, 3> color = kOutlineColor);
std::vector<std::uint8_t> encode_ppm(const RgbImage& image);
void write_ppm(const std::filesystem::path& path, const RgbImage& image);

// ---------------------------------------------------------------------------
// Synthetic fixtures.
// ---------------------------------------------------------------------------

/// One text line: a centreline (sinusoid or explicit polyline) swept by a band
/// whose height varies linearly from start to end.
struct BandSpec {
    double x_start = 24.0;
    double x_end = 168.0;
    double baseline = 48.0;
    double amplitude = 0.0;  // px
    double period = 96.0;    // px
    double phase = 0.0;      // radians
    double height_start = 16.0;
    double height_end = 16.0;
    /// When non-empty, replaces the sinusoid.
    std::vector<Point> polyline;
};

struct SynthSpec {
    std::size_t height = 96;
    std::size_t width = 192;
    std::vector<BandSpec> bands{BandSpec{}};
    double noise = 0.0;          // std-dev added to text/centre maps
    double gamma = 1.0;          // contrast gain about 0.5, in (0, 1]
    double core_end_trim = 2.0;  // centre core is shortened this much at each end
    double component_width = 4.0;

    /// Throws GeometryError when a band leaves the frame or folds over itself.
    void validate() const;
};

struct SynthResult {
    GeometryMaps maps;
    std::vector<TextPolygon> truth;
};

/// Text map = band mask, centre map = half-height core, geometry channels =
/// nearest centreline point, local band height, component width and tangent
/// angle. Deterministic per seed.
SynthResult synth_maps(const SynthSpec& spec, std::uint64_t seed);

struct CandidateSet {
    GeometryMaps maps;
    std::vector<Point> candidates;  // (col, row) centre pixels
};

/// `k` distinct centre pixels drawn at random from one straight band long
/// enough to hold them. Fixture for the FPS vs NMS comparison.
CandidateSet synth_candidates(std::size_t k, std::uint64_t seed);

std::vector<std::uint8_t> read_file_bytes(const std::filesystem::path& path);
void write_file_bytes(const std::filesystem::path& path, std::span<const std::uint8_t> bytes);

} // namespace lltext
