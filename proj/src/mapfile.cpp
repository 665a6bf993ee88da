#include "lltext/dataio.hpp"

#include "lltext/error.hpp"

#include <bit>
#include <cstring>
#include <set>

namespace lltext {

namespace {

using Kind = FormatError::Kind;

class Writer {
public:
    void u8(std::uint8_t v) { bytes_.push_back(v); }
    void u16(std::uint16_t v) {
        for (int i = 0; i < 2; ++i) bytes_.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
    }
    void u32(std::uint32_t v) {
        for (int i = 0; i < 4; ++i) bytes_.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
    }
    void f64(double d) {
        const auto v = std::bit_cast<std::uint64_t>(d);
        for (int i = 0; i < 8; ++i) bytes_.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
    }
    void raw(std::string_view s) { bytes_.insert(bytes_.end(), s.begin(), s.end()); }
    std::vector<std::uint8_t> take() { return std::move(bytes_); }

private:
    std::vector<std::uint8_t> bytes_;
};

class Reader {
public:
    explicit Reader(std::span<const std::uint8_t> b) : bytes_(b) {}

    std::size_t remaining() const { return bytes_.size() - pos_; }

    std::span<const std::uint8_t> take(std::size_t n, const char* what) {
        if (remaining() < n) {
            throw FormatError(Kind::Truncated, std::string("map file truncated while reading ") + what + " at offset " +
                                                   std::to_string(pos_));
        }
        auto s = bytes_.subspan(pos_, n);
        pos_ += n;
        return s;
    }

    std::uint64_t uint(std::size_t width, const char* what) {
        const auto s = take(width, what);
        std::uint64_t v = 0;
        for (std::size_t i = 0; i < width; ++i) v |= static_cast<std::uint64_t>(s[i]) << (8 * i);
        return v;
    }

private:
    std::span<const std::uint8_t> bytes_;
    std::size_t pos_ = 0;
};

} // namespace

std::vector<std::uint8_t> encode_map(const NamedGrids& sections) {
    if (sections.size() > 0xFFFF) throw FormatError(Kind::BadValue, "too many sections for a map file");
    Writer w;
    w.raw("TMAP");
    w.u16(kMapVersion);
    w.u16(static_cast<std::uint16_t>(sections.size()));
    for (const auto& [name, grid] : sections) {
        if (name.size() > 0xFFFF) throw FormatError(Kind::BadValue, "section name too long");
        w.u16(static_cast<std::uint16_t>(name.size()));
        w.raw(name);
        w.u8(static_cast<std::uint8_t>(grid.rank()));
        for (auto d : grid.shape()) {
            if (d > 0xFFFFFFFFull) throw FormatError(Kind::BadDims, "dimension exceeds u32 in section '" + name + "'");
            w.u32(static_cast<std::uint32_t>(d));
        }
        for (double v : grid.data()) w.f64(v);
    }
    return w.take();
}

NamedGrids decode_map(std::span<const std::uint8_t> bytes) {
    Reader r(bytes);
    const auto magic = r.take(4, "magic");
    if (std::memcmp(magic.data(), "TMAP", 4) != 0) throw FormatError(Kind::BadMagic, "not a map file (bad magic)");
    const auto version = r.uint(2, "version");
    if (version != kMapVersion) {
        throw FormatError(Kind::UnsupportedVersion, "unsupported map file version " + std::to_string(version));
    }
    const auto count = r.uint(2, "section count");
    NamedGrids out;
    std::set<std::string> names;
    for (std::uint64_t s = 0; s < count; ++s) {
        const auto name_len = r.uint(2, "name length");
        const auto name_bytes = r.take(name_len, "section name");
        std::string name(name_bytes.begin(), name_bytes.end());
        if (!names.insert(name).second) throw FormatError(Kind::BadValue, "duplicate section '" + name + "'");
        const auto rank = r.uint(1, "rank");
        if (rank < 1 || rank > 4) {
            throw FormatError(Kind::BadDims, "section '" + name + "' has rank " + std::to_string(rank) + ", expected 1..4");
        }
        Grid::Shape shape;
        std::uint64_t total = 1;
        for (std::uint64_t i = 0; i < rank; ++i) {
            const auto d = r.uint(4, "dimension");
            shape.push_back(static_cast<std::size_t>(d));
            const std::uint64_t cap = r.remaining() / 8;
            if (total != 0 && d != 0 && total > cap / d) {
                throw FormatError(Kind::BadDims, "section '" + name + "' dimensions exceed the file size");
            }
            total *= d;
        }
        if (total > r.remaining() / 8) {
            throw FormatError(Kind::Truncated, "section '" + name + "' payload truncated: need " +
                                                   std::to_string(total) + " values");
        }
        const auto payload = r.take(static_cast<std::size_t>(total) * 8, "payload");
        std::vector<double> data(static_cast<std::size_t>(total));
        for (std::size_t i = 0; i < data.size(); ++i) {
            std::uint64_t v = 0;
            for (std::size_t k = 0; k < 8; ++k) v |= static_cast<std::uint64_t>(payload[i * 8 + k]) << (8 * k);
            data[i] = std::bit_cast<double>(v);
        }
        out.emplace_back(std::move(name), Grid(std::move(shape), std::move(data)));
    }
    if (r.remaining() != 0) {
        throw FormatError(Kind::BadValue, std::to_string(r.remaining()) + " trailing bytes after last section");
    }
    return out;
}

void write_map(const std::filesystem::path& path, const NamedGrids& sections) {
    write_file_bytes(path, encode_map(sections));
}

NamedGrids read_map(const std::filesystem::path& path) { return decode_map(read_file_bytes(path)); }

void write_geometry_maps(const std::filesystem::path& path, const GeometryMaps& maps) {
    write_map(path, maps.to_sections());
}

GeometryMaps read_geometry_maps(const std::filesystem::path& path) {
    return GeometryMaps::from_sections(read_map(path));
}

} // namespace lltext
