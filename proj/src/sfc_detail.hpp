// Internal helpers shared by the curve encoders: domain/level validation and
// the truncating quantization onto the 32-bit lattice.
#pragma once

#include <cstdint>
#include <string>

#include "sfcpart/sfc.hpp"

namespace sfcpart::detail {

inline void check_level(int level) {
    if (level < kMinLevel || level > kMaxLevel)
        throw config_error("curve level " + std::to_string(level) + " outside [" +
                           std::to_string(kMinLevel) + ", " + std::to_string(kMaxLevel) + "]");
}

inline void check_interior(const UnitPoint& p) {
    const bool ok = p.u > 0.0 && p.u < 1.0 && p.v > 0.0 && p.v < 1.0 && p.w > 0.0 && p.w < 1.0;
    if (!ok)
        throw domain_error("point (" + std::to_string(p.u) + ", " + std::to_string(p.v) + ", " +
                           std::to_string(p.w) + ") not strictly inside the unit cube");
}

inline constexpr double kQuantScale = 4294967295.0; // UINT32_MAX

/// Truncating quantization onto the 32-bit lattice; levels deeper than 32
/// see zero bits.
struct QuantPoint {
    std::uint32_t x, y, z;

    /// Octant digit x<<2|y<<1|z at a level (0 = coarsest).
    unsigned octant(int level) const {
        if (level >= 32)
            return 0;
        const int shift = 31 - level;
        return ((x >> shift & 1u) << 2) | ((y >> shift & 1u) << 1) | (z >> shift & 1u);
    }

    /// The top `level` bits of one quantized coordinate as a lattice index
    /// in [0, 2^level); zero-padded below bit 0 when level > 32.
    static std::uint64_t lattice(std::uint32_t q, int level) {
        return level <= 32 ? std::uint64_t(q) >> (32 - level) : std::uint64_t(q) << (level - 32);
    }
};

inline QuantPoint quantize(const UnitPoint& p) {
    return {std::uint32_t(p.u * kQuantScale), std::uint32_t(p.v * kQuantScale),
            std::uint32_t(p.w * kQuantScale)};
}

} // namespace sfcpart::detail
