#include "lltext/dataio.hpp"

#include "lltext/error.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace lltext {

namespace {

constexpr std::string_view kIgnoreToken = "#ignore";
constexpr std::int64_t kMaxCoordinate = 1'000'000'000;

bool is_blank(char c) { return c == ' ' || c == '\t'; }

Annotation parse_line(std::string_view line, std::size_t line_no) {
    Annotation ann;
    std::vector<std::int64_t> values;
    std::size_t pos = 0;
    while (true) {
        std::size_t start = pos;
        while (start < line.size() && is_blank(line[start])) ++start;
        std::size_t end = line.find(',', start);
        if (end == std::string_view::npos) end = line.size();
        std::size_t stop = end;
        while (stop > start && is_blank(line[stop - 1])) --stop;
        const std::string_view token = line.substr(start, stop - start);
        const std::size_t column = start + 1;
        const bool last = end == line.size();

        if (token == kIgnoreToken) {
            if (!last) throw ParseError(line_no, column, "'#ignore' must be the final token");
            ann.ignore = true;
        } else {
            if (token.empty()) throw ParseError(line_no, column, "empty coordinate");
            std::int64_t v = 0;
            for (std::size_t i = 0; i < token.size(); ++i) {
                const char c = token[i];
                if (c == '-' && i == 0) throw ParseError(line_no, column, "negative coordinate");
                if (c < '0' || c > '9') {
                    throw ParseError(line_no, column + i, "expected an integer, found '" + std::string(token) + "'");
                }
                v = v * 10 + (c - '0');
                if (v > kMaxCoordinate) throw ParseError(line_no, column, "coordinate out of range");
            }
            values.push_back(v);
        }
        if (last) break;
        pos = end + 1;
    }
    if (values.size() % 2 != 0) {
        throw ParseError(line_no, 1, "odd number of coordinates (" + std::to_string(values.size()) + ")");
    }
    if (values.size() < 6) {
        throw ParseError(line_no, 1, "polygon needs at least 3 vertices, got " + std::to_string(values.size() / 2));
    }
    for (std::size_t i = 0; i < values.size(); i += 2) {
        ann.polygon.vertices.push_back({static_cast<double>(values[i]), static_cast<double>(values[i + 1])});
    }
    return ann;
}

std::vector<Point> rounded_ring(const TextPolygon& poly) {
    std::vector<Point> out;
    for (const auto& v : poly.vertices) {
        const Point p{std::max(0.0, std::round(v.x)), std::max(0.0, std::round(v.y))};
        if (!out.empty() && out.back() == p) continue;
        out.push_back(p);
    }
    while (out.size() > 1 && out.back() == out.front()) out.pop_back();
    return out;
}

} // namespace

std::vector<Annotation> parse_annotations_text(std::string_view text) {
    std::vector<Annotation> out;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        bool blank = true;
        for (char c : line) blank = blank && is_blank(c);
        if (!blank) out.push_back(parse_line(line, line_no));
        if (end == text.size()) break;
        pos = end + 1;
    }
    return out;
}

std::vector<Annotation> parse_annotations(const std::filesystem::path& path) {
    const auto bytes = read_file_bytes(path);
    return parse_annotations_text(std::string_view(reinterpret_cast<const char*>(bytes.data()), bytes.size()));
}

std::string format_annotations(std::span<const Annotation> annotations) {
    std::ostringstream os;
    for (const auto& ann : annotations) {
        const auto ring = rounded_ring(ann.polygon);
        if (ring.size() < 3) continue;
        for (std::size_t i = 0; i < ring.size(); ++i) {
            if (i) os << ',';
            os << static_cast<std::int64_t>(ring[i].x) << ',' << static_cast<std::int64_t>(ring[i].y);
        }
        if (ann.ignore) os << ',' << kIgnoreToken;
        os << '\n';
    }
    return os.str();
}

std::string format_annotations(std::span<const TextPolygon> polygons) {
    std::vector<Annotation> anns;
    anns.reserve(polygons.size());
    for (const auto& p : polygons) anns.push_back({p, false});
    return format_annotations(anns);
}

void write_annotations(const std::filesystem::path& path, std::span<const TextPolygon> polygons) {
    const std::string text = format_annotations(polygons);
    write_file_bytes(path, std::span(reinterpret_cast<const std::uint8_t*>(text.data()), text.size()));
}

std::vector<std::uint8_t> read_file_bytes(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError(FormatError::Kind::Io, "cannot open '" + path.string() + "'");
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file_bytes(const std::filesystem::path& path, std::span<const std::uint8_t> bytes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw FormatError(FormatError::Kind::Io, "cannot write '" + path.string() + "'");
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw FormatError(FormatError::Kind::Io, "short write to '" + path.string() + "'");
}

} // namespace lltext
