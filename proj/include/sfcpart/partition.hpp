#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "sfcpart/grid.hpp"
#include "sfcpart/sfc.hpp"

namespace sfcpart {

/// Default margin keeping mapped points away from the unit-cube boundary.
inline constexpr double kDefaultEpsilon = 0x1p-20;

/// Aspect-ratio-preserving affine map of Omega into (eps, 1-eps)^3: one shared
/// scale factor, so the longest axis spans exactly (eps, 1-eps) and shorter
/// axes span proportionally less.
struct DomainMap {
    double scale = 1.0;
    std::array<double, 3> offset = {0.0, 0.0, 0.0};
    double epsilon = kDefaultEpsilon;

    UnitPoint apply(const std::array<double, 3>& p) const {
        return {offset[0] + p[0] * scale,
                offset[1] + p[1] * scale,
                offset[2] + p[2] * scale};
    }
};

enum class Method { hilbert, morton, external };

std::string method_name(Method m);
/// Throws config_error for an unknown name.
Method method_from_name(const std::string& name);

/// Cell-to-rank assignment. For SFC methods each rank owns one contiguous
/// segment of the curve order; cut_keys are the n_ranks-1 ascending keys at
/// which ownership changes (rank j owns keys in [cut_keys[j-1], cut_keys[j])).
/// cut_keys is empty for partitions read from file (method external).
struct Partition {
    int n_ranks = 1;
    std::vector<std::int32_t> assignment;
    std::vector<SfcKey> cut_keys;
    Method method = Method::external;
};

/// scale = (1-2*eps)/max(Lx,Ly,Lz), offset places the lower corner at eps.
/// Throws config_error unless 0 < eps < 0.5.
DomainMap build_domain_map(const GridSpec& grid, double epsilon = kDefaultEpsilon);

/// Curve key of every cell center, linear-index order. Runs the encoder in
/// parallel over cells; output is a pure function of the input. Requires
/// 2^level >= max(nx,ny,nz) so that keys are distinct (throws config_error
/// naming the minimum level otherwise).
std::vector<SfcKey> key_cells(const GridSpec& grid, const DomainMap& map,
                              Method method, int level);

/// Single-threaded reference for key_cells; same contract, plain loop.
std::vector<SfcKey> key_cells_serial(const GridSpec& grid, const DomainMap& map,
                                     Method method, int level);

/// Split cells, sorted by key, into n_ranks contiguous intervals of
/// near-equal weight: cut j is placed where the weight prefix sum is nearest
/// to j*W/n_ranks (ties break toward the smaller prefix), subject to every
/// rank owning at least one cell. An empty weights span means uniform 1.0,
/// in which case rank sizes differ by at most one cell.
///
/// Sorting is by (key, position) so the result is deterministic; duplicate
/// keys violate the precondition and throw internal_error.
Partition partition_1d(std::span<const SfcKey> keys, std::span<const double> weights,
                       int n_ranks, Method method = Method::hilbert);

/// Map the domain, key every cell center, split the curve order: the whole
/// pipeline. Uses the grid's cell weights when it has them.
Partition partition_grid(const GridSpec& grid, Method method, int n_ranks,
                         int level = kDefaultLevel, double epsilon = kDefaultEpsilon);

/// Checks the partition against a grid: assignment length, rank ids in
/// range, every rank nonempty. Throws config_error on mismatch. Used for
/// partitions read from file before computing metrics on them.
void validate_partition(const Partition& partition, const GridSpec& grid);

/// Smallest level with 2^level >= max(nx,ny,nz).
int min_level_for(const GridSpec& grid);

} // namespace sfcpart
