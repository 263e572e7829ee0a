#pragma once

#include <filesystem>
#include <iosfwd>
#include <vector>

#include "sfcpart/grid.hpp"
#include "sfcpart/partition.hpp"

namespace sfcpart {

/// Reads a grid spec file:
///
///     dims nx ny nz
///     extents x1 x2 y1 y2 z1 z2
///     weights <path>          (optional)
///
/// A relative weights path is resolved against the grid file's directory.
/// Unknown or repeated lines throw parse_error with the offending line
/// number; blank lines are ignored.
GridSpec read_grid_spec(const std::filesystem::path& path);

/// Reads exactly `count` whitespace-separated positive decimals.
std::vector<double> read_weights(const std::filesystem::path& path, std::int64_t count);

/// Partition file: line 1 `nparts N`, line 2 `method <name>`, then one rank
/// id per cell in linear-index order.
void write_partition(std::ostream& out, const Partition& partition);
void write_partition(const std::filesystem::path& path, const Partition& partition);

/// Inverse of write_partition. The in-memory cut keys are not part of the
/// format, so they come back empty. Rank ids are checked against nparts.
Partition read_partition(std::istream& in);
Partition read_partition(const std::filesystem::path& path);

} // namespace sfcpart
