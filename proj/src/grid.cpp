#include "sfcpart/grid.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace sfcpart {

namespace {

void check_extent(double lo, double hi, const char* axis) {
    if (!(lo < hi))
        throw config_error(std::string("degenerate extent on ") + axis + " axis: [" +
                           std::to_string(lo) + ", " + std::to_string(hi) + "]");
}

} // namespace

GridSpec::GridSpec(int nx, int ny, int nz,
                   double x1, double x2, double y1, double y2, double z1, double z2,
                   std::vector<double> cell_weights)
    : nx_(nx), ny_(ny), nz_(nz), x1_(x1), x2_(x2), y1_(y1), y2_(y2), z1_(z1), z2_(z2),
      weights_(std::move(cell_weights)) {
    if (nx_ < 1 || ny_ < 1 || nz_ < 1)
        throw config_error("grid dimensions must be positive, got " + std::to_string(nx_) + "x" +
                           std::to_string(ny_) + "x" + std::to_string(nz_));
    check_extent(x1_, x2_, "x");
    check_extent(y1_, y2_, "y");
    check_extent(z1_, z2_, "z");
    if (!weights_.empty()) {
        if (std::int64_t(weights_.size()) != num_cells())
            throw config_error("weight array has " + std::to_string(weights_.size()) +
                               " entries, grid has " + std::to_string(num_cells()) + " cells");
        for (std::size_t i = 0; i < weights_.size(); ++i)
            if (!(weights_[i] > 0.0))
                throw config_error("cell weight " + std::to_string(i) + " is not positive");
    }
}

std::array<double, 3> GridSpec::spacing() const {
    return {(x2_ - x1_) / nx_, (y2_ - y1_) / ny_, (z2_ - z1_) / nz_};
}

double GridSpec::total_weight() const {
    if (weights_.empty())
        return double(num_cells());
    return std::accumulate(weights_.begin(), weights_.end(), 0.0);
}

std::int64_t GridSpec::linear_index(const CellCoord& c) const {
    if (!in_range(c))
        throw std::out_of_range("cell (" + std::to_string(c.i) + "," + std::to_string(c.j) + "," +
                                std::to_string(c.k) + ") outside grid");
    return c.i + std::int64_t(nx_) * (c.j + std::int64_t(ny_) * c.k);
}

CellCoord GridSpec::cell_at(std::int64_t idx) const {
    if (idx < 0 || idx >= num_cells())
        throw std::out_of_range("linear index " + std::to_string(idx) + " outside grid");
    const int i = int(idx % nx_);
    const std::int64_t rest = idx / nx_;
    return {i, int(rest % ny_), int(rest / ny_)};
}

std::array<double, 3> cell_center(const GridSpec& grid, const CellCoord& c) {
    if (!grid.in_range(c))
        throw std::out_of_range("cell (" + std::to_string(c.i) + "," + std::to_string(c.j) + "," +
                                std::to_string(c.k) + ") outside grid");
    const auto h = grid.spacing();
    const auto lo = grid.lower();
    return {lo[0] + (c.i + 0.5) * h[0], lo[1] + (c.j + 0.5) * h[1], lo[2] + (c.k + 0.5) * h[2]};
}

std::vector<CellCoord> neighbors(const GridSpec& grid, const CellCoord& c) {
    if (!grid.in_range(c))
        throw std::out_of_range("cell (" + std::to_string(c.i) + "," + std::to_string(c.j) + "," +
                                std::to_string(c.k) + ") outside grid");
    std::vector<CellCoord> out;
    out.reserve(6);
    const CellCoord candidates[6] = {{c.i - 1, c.j, c.k}, {c.i + 1, c.j, c.k},
                                     {c.i, c.j - 1, c.k}, {c.i, c.j + 1, c.k},
                                     {c.i, c.j, c.k - 1}, {c.i, c.j, c.k + 1}};
    for (const auto& n : candidates)
        if (grid.in_range(n))
            out.push_back(n);
    return out;
}

} // namespace sfcpart
