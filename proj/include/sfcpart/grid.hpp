#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "sfcpart/errors.hpp"

namespace sfcpart {

/// Zero-based lattice coordinate of a cell.
struct CellCoord {
    int i = 0;
    int j = 0;
    int k = 0;

    friend bool operator==(const CellCoord&, const CellCoord&) = default;
};

/// Uniform structured grid on Omega = [x1,x2] x [y1,y2] x [z1,z2] with
/// nx * ny * nz cells and optional per-cell workloads.
///
/// Immutable after construction; all accessors are safe for concurrent use.
class GridSpec {
public:
    /// Throws config_error on non-positive dimensions, degenerate extents,
    /// a weight array of the wrong length, or a non-positive weight.
    GridSpec(int nx, int ny, int nz,
             double x1, double x2, double y1, double y2, double z1, double z2,
             std::vector<double> cell_weights = {});

    int nx() const { return nx_; }
    int ny() const { return ny_; }
    int nz() const { return nz_; }
    std::int64_t num_cells() const { return std::int64_t(nx_) * ny_ * nz_; }

    std::array<double, 3> lower() const { return {x1_, y1_, z1_}; }
    std::array<double, 3> upper() const { return {x2_, y2_, z2_}; }
    /// Physical extent lengths (Lx, Ly, Lz).
    std::array<double, 3> lengths() const { return {x2_ - x1_, y2_ - y1_, z2_ - z1_}; }
    /// Cell spacings (hx, hy, hz).
    std::array<double, 3> spacing() const;

    bool has_weights() const { return !weights_.empty(); }
    /// Per-cell weights in linear-index order; empty means uniform 1.0.
    const std::vector<double>& weights() const { return weights_; }
    /// Weight of one cell (1.0 when no weights were given).
    double weight(std::int64_t idx) const { return weights_.empty() ? 1.0 : weights_[idx]; }
    /// Sum of all cell weights.
    double total_weight() const;

    bool in_range(const CellCoord& c) const {
        return c.i >= 0 && c.i < nx_ && c.j >= 0 && c.j < ny_ && c.k >= 0 && c.k < nz_;
    }

    /// x-fastest linear index: idx = i + nx*(j + ny*k).
    std::int64_t linear_index(const CellCoord& c) const;
    /// Inverse of linear_index.
    CellCoord cell_at(std::int64_t idx) const;

private:
    int nx_, ny_, nz_;
    double x1_, x2_, y1_, y2_, z1_, z2_;
    std::vector<double> weights_;
};

/// Center of a cell: (x1 + (i+0.5)*hx, ...). Strictly interior to Omega.
/// Throws std::out_of_range when c is outside the grid.
std::array<double, 3> cell_center(const GridSpec& grid, const CellCoord& c);

/// In-range face neighbors of a cell (the 6-point stencil). An interior cell
/// has 6, a corner cell 3. Throws std::out_of_range when c is outside.
std::vector<CellCoord> neighbors(const GridSpec& grid, const CellCoord& c);

/// Dual graph of the grid: one vertex per cell, one edge per pair of
/// face-adjacent cells. The adjacency is implicit (never materialized), so
/// it costs nothing regardless of grid size. Edge weights default to 1.0.
class DualGraph {
public:
    using EdgeWeightFn = std::function<double(const CellCoord&, const CellCoord&)>;

    explicit DualGraph(const GridSpec& grid, EdgeWeightFn edge_weight = {})
        : grid_(&grid), edge_weight_(std::move(edge_weight)) {}

    const GridSpec& grid() const { return *grid_; }
    bool has_edge_weights() const { return static_cast<bool>(edge_weight_); }

    double edge_weight(const CellCoord& a, const CellCoord& b) const {
        return edge_weight_ ? edge_weight_(a, b) : 1.0;
    }

private:
    const GridSpec* grid_;
    EdgeWeightFn edge_weight_;
};

} // namespace sfcpart
