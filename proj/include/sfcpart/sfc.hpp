#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "sfcpart/errors.hpp"

namespace sfcpart {

/// 128-bit unsigned integer for curve keys (3 bits per level, up to level 42).
using u128 = unsigned __int128;

inline constexpr int kMinLevel = 1;
inline constexpr int kMaxLevel = 42;
inline constexpr int kDefaultLevel = 30;

/// A point of the open unit cube (0,1)^3. Encoders reject boundary values.
struct UnitPoint {
    double u = 0.0;
    double v = 0.0;
    double w = 0.0;
};

/// Exact position on a space-filling curve of a given level: an unsigned
/// integer of 3*level bits, totally ordered. Comparing keys of different
/// levels throws; they index different refinements of the curve.
struct SfcKey {
    u128 value = 0;
    int level = 0;

    /// Key as a real in [0,1): value / 2^(3*level).
    double unit_interval() const;

    friend bool operator==(const SfcKey& a, const SfcKey& b) {
        require_same_level(a, b);
        return a.value == b.value;
    }
    friend std::strong_ordering operator<=>(const SfcKey& a, const SfcKey& b) {
        require_same_level(a, b);
        return a.value < b.value   ? std::strong_ordering::less
               : a.value > b.value ? std::strong_ordering::greater
                                   : std::strong_ordering::equal;
    }

private:
    static void require_same_level(const SfcKey& a, const SfcKey& b);
};

/// Hilbert curve position of a point, table-driven: quantize each coordinate
/// to the integer lattice, then walk the 24-orientation state machine one
/// octant digit per level (tables after Campbell et al., "Dynamic octree load
/// balancing using space-filling curves", as used in Zoltan's HSFC module).
///
/// Throws domain_error for points on or outside the cube boundary and
/// config_error for a level outside [1, 42].
SfcKey hilbert_encode(const UnitPoint& p, int level);

/// Same curve as hilbert_encode, computed by recursive octant subdivision
/// with an explicit axis rotation/reflection per recursion step. Slower;
/// kept as an independent cross-check of the table-driven encoder.
SfcKey hilbert_encode_recursive(const UnitPoint& p, int level);

/// Morton (Z-order) position: straight bit interleave of the quantized
/// coordinates, x highest. Same domain and level rules as hilbert_encode.
SfcKey morton_encode(const UnitPoint& p, int level);

/// key.value / 2^(3*level), monotone in key order.
double key_to_unit_interval(const SfcKey& key);

/// The level-30 key packed into a double the way the classic 32-bit
/// table-driven implementations did: three 30-bit words combined as
/// ldexp(w2,-90) + ldexp(w1,-60) + ldexp(w0,-30), low word first. Rounds
/// away bits below the double mantissa; provided only for parity with that
/// formulation. Requires key.level == 30.
double legacy_double_key(const SfcKey& key);

/// Decimal digits of a 128-bit value (no locale, no sign).
std::string to_string(u128 value);
/// Lowercase hex digits of a 128-bit value, no leading zeros, no prefix.
std::string to_hex_string(u128 value);

} // namespace sfcpart
