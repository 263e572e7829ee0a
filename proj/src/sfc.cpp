// Table-driven Hilbert and Morton curve encoders over the open unit cube.
//
// The Hilbert tables are the classic 24-orientation formulation (Campbell,
// Devine, Flaherty, Gervasio, Teresco: "Dynamic octree load balancing using
// space-filling curves"; the same tables ship in Zoltan's HSFC module).
// State 0 is the base orientation; kHilbertDigit maps the geometric octant
// (x<<2 | y<<1 | z) to the digit along the curve, kHilbertState to the
// orientation of the sub-cube's curve.

#include "sfcpart/sfc.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

#include "sfc_detail.hpp"

namespace sfcpart {

using detail::check_interior;
using detail::check_level;
using detail::QuantPoint;
using detail::quantize;

namespace {

constexpr std::uint8_t kHilbertDigit[24][8] = {
    {0, 7, 3, 4, 1, 6, 2, 5}, {0, 1, 3, 2, 7, 6, 4, 5}, {0, 3, 7, 4, 1, 2, 6, 5},
    {2, 3, 5, 4, 1, 0, 6, 7}, {4, 5, 3, 2, 7, 6, 0, 1}, {4, 7, 3, 0, 5, 6, 2, 1},
    {6, 7, 5, 4, 1, 0, 2, 3}, {0, 1, 7, 6, 3, 2, 4, 5}, {2, 1, 5, 6, 3, 0, 4, 7},
    {6, 1, 5, 2, 7, 0, 4, 3}, {0, 7, 1, 6, 3, 4, 2, 5}, {2, 1, 3, 0, 5, 6, 4, 7},
    {4, 7, 5, 6, 3, 0, 2, 1}, {4, 5, 7, 6, 3, 2, 0, 1}, {6, 1, 7, 0, 5, 2, 4, 3},
    {0, 3, 1, 2, 7, 4, 6, 5}, {2, 3, 1, 0, 5, 4, 6, 7}, {6, 7, 1, 0, 5, 4, 2, 3},
    {2, 5, 1, 6, 3, 4, 0, 7}, {4, 3, 7, 0, 5, 2, 6, 1}, {4, 3, 5, 2, 7, 0, 6, 1},
    {6, 5, 1, 2, 7, 4, 0, 3}, {2, 5, 3, 4, 1, 6, 0, 7}, {6, 5, 7, 4, 1, 2, 0, 3}};

constexpr std::uint8_t kHilbertState[24][8] = {
    {1, 6, 3, 4, 2, 5, 0, 0},         {0, 7, 8, 1, 9, 4, 5, 1},
    {15, 22, 23, 20, 0, 2, 19, 2},    {3, 23, 3, 15, 6, 20, 16, 22},
    {11, 4, 12, 4, 20, 1, 22, 13},    {22, 12, 20, 11, 5, 0, 5, 19},
    {17, 0, 6, 21, 3, 9, 6, 2},       {10, 1, 14, 13, 11, 7, 12, 7},
    {8, 9, 8, 18, 14, 12, 10, 11},    {21, 8, 9, 9, 1, 6, 17, 7},
    {7, 17, 15, 12, 16, 13, 10, 10},  {11, 14, 9, 5, 11, 22, 0, 8},
    {18, 5, 12, 10, 19, 8, 12, 20},   {8, 13, 19, 7, 5, 13, 18, 4},
    {23, 11, 7, 17, 14, 14, 6, 1},    {2, 18, 10, 15, 21, 19, 20, 15},
    {16, 21, 17, 19, 16, 2, 3, 18},   {6, 10, 16, 14, 17, 23, 17, 15},
    {18, 18, 21, 8, 17, 7, 13, 16},   {3, 4, 13, 16, 19, 19, 2, 5},
    {16, 13, 20, 20, 4, 3, 15, 12},   {9, 21, 18, 21, 15, 14, 23, 10},
    {22, 22, 6, 1, 23, 11, 4, 3},     {14, 23, 2, 9, 22, 23, 21, 0}};

} // namespace

void SfcKey::require_same_level(const SfcKey& a, const SfcKey& b) {
    if (a.level != b.level)
        throw config_error("comparing keys of different levels (" + std::to_string(a.level) +
                           " vs " + std::to_string(b.level) + ")");
}

double SfcKey::unit_interval() const { return key_to_unit_interval(*this); }

SfcKey hilbert_encode(const UnitPoint& p, int level) {
    check_level(level);
    check_interior(p);
    const QuantPoint q = quantize(p);
    u128 key = 0;
    unsigned state = 0;
    for (int l = 0; l < level; ++l) {
        const unsigned octant = q.octant(l);
        key = key << 3 | kHilbertDigit[state][octant];
        state = kHilbertState[state][octant];
    }
    return {key, level};
}

SfcKey morton_encode(const UnitPoint& p, int level) {
    check_level(level);
    check_interior(p);
    const QuantPoint q = quantize(p);
    u128 key = 0;
    for (int l = 0; l < level; ++l)
        key = key << 3 | q.octant(l);
    return {key, level};
}

double key_to_unit_interval(const SfcKey& key) {
    // 3*level <= 126 bits; split so each half converts exactly.
    const double hi = double(std::uint64_t(key.value >> 64));
    const double lo = double(std::uint64_t(key.value));
    return std::ldexp(hi, 64 - 3 * key.level) + std::ldexp(lo, -3 * key.level);
}

double legacy_double_key(const SfcKey& key) {
    if (key.level != 30)
        throw config_error("legacy double packing is defined for level 30 only, got level " +
                           std::to_string(key.level));
    constexpr u128 mask30 = (u128(1) << 30) - 1;
    const double w0 = double(std::uint32_t(key.value >> 60 & mask30));
    const double w1 = double(std::uint32_t(key.value >> 30 & mask30));
    const double w2 = double(std::uint32_t(key.value & mask30));
    double out = std::ldexp(w2, -90);
    out += std::ldexp(w1, -60);
    out += std::ldexp(w0, -30);
    return out;
}

std::string to_string(u128 value) {
    if (value == 0)
        return "0";
    std::string digits;
    while (value != 0) {
        digits.push_back(char('0' + int(value % 10)));
        value /= 10;
    }
    std::reverse(digits.begin(), digits.end());
    return digits;
}

std::string to_hex_string(u128 value) {
    if (value == 0)
        return "0";
    static const char* hex = "0123456789abcdef";
    std::string digits;
    while (value != 0) {
        digits.push_back(hex[int(value & 0xf)]);
        value >>= 4;
    }
    std::reverse(digits.begin(), digits.end());
    return digits;
}

} // namespace sfcpart
