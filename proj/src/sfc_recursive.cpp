// Recursive Hilbert encoder: octant subdivision with one axis
// rotation/reflection per recursion step. Produces the same curve as the
// table-driven encoder in sfc.cpp but shares none of its digit/state tables;
// kept as an independent cross-check.
//
// The curve is fixed by two things. First, the traversal order of the eight
// octants in the base orientation (consecutive octants differ in one axis):
//
//     (0,0,0) (1,0,0) (1,1,0) (0,1,0) (0,1,1) (1,1,1) (1,0,1) (0,0,1)
//
// Second, the isometry that maps each child cube's curve back to the base
// orientation. Those eight maps are hard-coded below; that they generate the
// same orientations as the 24-state tables is checked exhaustively by the
// test suite.

#include <array>
#include <cstdint>

#include "sfcpart/sfc.hpp"

#include "sfc_detail.hpp"

namespace sfcpart {

namespace {

// Base traversal order as octant corners (x<<2 | y<<1 | z).
constexpr std::uint8_t kBaseCorner[8] = {0b000, 0b100, 0b110, 0b010,
                                         0b011, 0b111, 0b101, 0b001};

constexpr std::array<std::uint8_t, 8> corner_positions() {
    std::array<std::uint8_t, 8> pos{};
    for (std::uint8_t p = 0; p < 8; ++p)
        pos[kBaseCorner[p]] = p;
    return pos;
}
constexpr auto kCornerPosition = corner_positions();

// Signed axis permutation: axis a of the canonical frame reads from axis
// src[a] of the child frame, mirrored when flip[a] is set.
struct AxisMap {
    std::uint8_t src[3];
    bool flip[3];
};

// Child-to-canonical maps, one per traversal position. 0/7 swap x,z; 1/6
// swap y,z; 2/5 keep the frame; 3/4 rotate all three axes; mirrors differ.
constexpr AxisMap kChildFrame[8] = {
    {{2, 1, 0}, {false, false, false}}, {{0, 2, 1}, {false, false, false}},
    {{0, 1, 2}, {false, false, false}}, {{2, 0, 1}, {true, true, false}},
    {{2, 0, 1}, {false, true, true}},   {{0, 1, 2}, {false, false, false}},
    {{0, 2, 1}, {false, true, true}},   {{2, 1, 0}, {true, false, true}}};

u128 subdivide(std::uint64_t x, std::uint64_t y, std::uint64_t z, int bits) {
    if (bits == 0)
        return 0;
    const int l = bits - 1;
    const unsigned octant =
        unsigned(((x >> l & 1) << 2) | ((y >> l & 1) << 1) | (z >> l & 1));
    const unsigned pos = kCornerPosition[octant];

    const std::uint64_t mask = (std::uint64_t(1) << l) - 1;
    const std::uint64_t local[3] = {x & mask, y & mask, z & mask};
    const AxisMap& m = kChildFrame[pos];
    std::uint64_t canon[3];
    for (int a = 0; a < 3; ++a)
        canon[a] = m.flip[a] ? mask - local[m.src[a]] : local[m.src[a]];

    return u128(pos) << (3 * l) | subdivide(canon[0], canon[1], canon[2], l);
}

} // namespace

SfcKey hilbert_encode_recursive(const UnitPoint& p, int level) {
    detail::check_level(level);
    detail::check_interior(p);
    const detail::QuantPoint q = detail::quantize(p);
    const std::uint64_t x = detail::QuantPoint::lattice(q.x, level);
    const std::uint64_t y = detail::QuantPoint::lattice(q.y, level);
    const std::uint64_t z = detail::QuantPoint::lattice(q.z, level);
    return {subdivide(x, y, z, level), level};
}

} // namespace sfcpart
