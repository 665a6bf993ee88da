#pragma once

#include <cstdint>
#include <random>

namespace lltext {

/// Seeded source for parameter initialisation. The uniform mapping is done
/// by hand so values do not depend on the standard library's distributions.
class SeededUniform {
public:
    explicit SeededUniform(std::uint64_t seed) : engine_(seed) {}

    double next(double lo, double hi) {
        const double unit = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
        return lo + (hi - lo) * unit;
    }

    std::mt19937_64& engine() { return engine_; }

private:
    std::mt19937_64 engine_;
};

} // namespace lltext
