#include "sfcpart/partition.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <string>

#include "sfc_detail.hpp"

namespace sfcpart {

std::string method_name(Method m) {
    switch (m) {
    case Method::hilbert: return "hilbert";
    case Method::morton: return "morton";
    case Method::external: return "external";
    }
    return "?";
}

Method method_from_name(const std::string& name) {
    if (name == "hilbert")
        return Method::hilbert;
    if (name == "morton")
        return Method::morton;
    if (name == "external")
        return Method::external;
    throw config_error("unknown method '" + name + "' (expected hilbert, morton or external)");
}

int min_level_for(const GridSpec& grid) {
    const int longest = std::max({grid.nx(), grid.ny(), grid.nz()});
    int level = 1;
    while ((std::int64_t(1) << level) < longest)
        ++level;
    return level;
}

DomainMap build_domain_map(const GridSpec& grid, double epsilon) {
    if (!(epsilon > 0.0 && epsilon < 0.5))
        throw config_error("epsilon " + std::to_string(epsilon) + " outside (0, 0.5)");
    const auto len = grid.lengths();
    const double longest = std::max({len[0], len[1], len[2]});
    DomainMap map;
    map.epsilon = epsilon;
    map.scale = (1.0 - 2.0 * epsilon) / longest;
    const auto lo = grid.lower();
    for (int a = 0; a < 3; ++a)
        map.offset[a] = epsilon - lo[a] * map.scale;
    return map;
}

namespace {

SfcKey encode(const UnitPoint& p, Method method, int level) {
    return method == Method::hilbert ? hilbert_encode(p, level) : morton_encode(p, level);
}

void check_keying_args(const GridSpec& grid, Method method, int level) {
    if (method == Method::external)
        throw config_error("method 'external' names partitions read from file; it cannot key cells");
    // encode() runs inside a parallel loop and must not be the one to throw
    detail::check_level(level);
    const int min_level = min_level_for(grid);
    if (level < min_level)
        throw config_error("level " + std::to_string(level) + " cannot separate a " +
                           std::to_string(grid.nx()) + "x" + std::to_string(grid.ny()) + "x" +
                           std::to_string(grid.nz()) + " grid; minimum level is " +
                           std::to_string(min_level));
}

// Greedy prefix cuts over an already sorted curve order: cut j ends where
// the weight prefix sum is nearest j*W/n_ranks, ties toward the smaller
// prefix; every rank keeps at least one cell. Order must expose cell(pos)
// and key_value(pos) for sorted positions.
template <class Order>
Partition cuts_from_order(const Order& order, std::int64_t n, std::span<const double> weights,
                          int n_ranks, Method method, int level) {
    const double total =
        weights.empty() ? double(n) : std::accumulate(weights.begin(), weights.end(), 0.0);

    Partition part;
    part.n_ranks = n_ranks;
    part.method = method;
    part.assignment.assign(std::size_t(n), 0);
    part.cut_keys.reserve(std::size_t(n_ranks) - 1);

    const auto weight_at = [&](std::int64_t pos) {
        return weights.empty() ? 1.0 : weights[std::size_t(order.cell(pos))];
    };

    std::int64_t begin = 0; // first sorted position of the current rank
    double prefix = 0.0;    // weight of sorted positions [0, begin)
    for (int rank = 0; rank + 1 < n_ranks; ++rank) {
        const double target = total * double(rank + 1) / double(n_ranks);
        const std::int64_t max_end = n - (n_ranks - 1 - rank); // leave one cell per later rank
        std::int64_t end = begin + 1;
        double sum = prefix + weight_at(begin);
        while (end < max_end) {
            const double next = sum + weight_at(end);
            if (!(std::abs(next - target) < std::abs(sum - target)))
                break;
            sum = next;
            ++end;
        }
        for (std::int64_t i = begin; i < end; ++i)
            part.assignment[std::size_t(order.cell(i))] = rank;
        part.cut_keys.push_back({order.key_value(end), level});
        begin = end;
        prefix = sum;
    }
    for (std::int64_t i = begin; i < n; ++i)
        part.assignment[std::size_t(order.cell(i))] = n_ranks - 1;
    return part;
}

// Key and cell id packed into one 128-bit word (key in the high bits), so
// one flat sort of 16-byte values yields the (key, cell) order. Fits
// whenever 3*level + bits(n) <= 128, i.e. always at the default level.
struct PackedOrder {
    std::vector<u128> data;
    int cell_bits;

    std::int64_t cell(std::int64_t pos) const {
        return std::int64_t(data[std::size_t(pos)] & ((u128(1) << cell_bits) - 1));
    }
    u128 key_value(std::int64_t pos) const { return data[std::size_t(pos)] >> cell_bits; }
};

// Fallback for levels too deep to pack: explicit 32-byte records.
struct RecordOrder {
    struct Rec {
        u128 key;
        std::int64_t idx;
    };
    std::vector<Rec> data;

    std::int64_t cell(std::int64_t pos) const { return data[std::size_t(pos)].idx; }
    u128 key_value(std::int64_t pos) const { return data[std::size_t(pos)].key; }
};

int cell_bits_for(std::int64_t n) {
    return std::max(1, int(std::bit_width(std::uint64_t(n - 1))));
}

void check_rank_count(std::int64_t n, int n_ranks) {
    if (n == 0)
        throw config_error("cannot partition zero cells");
    if (n_ranks < 1)
        throw config_error("rank count must be at least 1, got " + std::to_string(n_ranks));
    if (n_ranks > n)
        throw config_error("rank count " + std::to_string(n_ranks) + " exceeds cell count " +
                           std::to_string(n));
}

Partition partition_packed(PackedOrder&& order, std::int64_t n, std::span<const double> weights,
                           int n_ranks, Method method, int level) {
    std::sort(order.data.begin(), order.data.end());
    for (std::int64_t i = 1; i < n; ++i)
        if (order.key_value(i - 1) == order.key_value(i))
            throw internal_error("duplicate curve keys at cells " +
                                 std::to_string(order.cell(i - 1)) + " and " +
                                 std::to_string(order.cell(i)));
    return cuts_from_order(order, n, weights, n_ranks, method, level);
}

} // namespace

std::vector<SfcKey> key_cells(const GridSpec& grid, const DomainMap& map,
                              Method method, int level) {
    check_keying_args(grid, method, level);
    const std::int64_t n = grid.num_cells();
    std::vector<SfcKey> keys(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(static)
    for (std::int64_t idx = 0; idx < n; ++idx)
        keys[std::size_t(idx)] =
            encode(map.apply(cell_center(grid, grid.cell_at(idx))), method, level);
    return keys;
}

std::vector<SfcKey> key_cells_serial(const GridSpec& grid, const DomainMap& map,
                                     Method method, int level) {
    check_keying_args(grid, method, level);
    const std::int64_t n = grid.num_cells();
    std::vector<SfcKey> keys(static_cast<std::size_t>(n));
    for (std::int64_t idx = 0; idx < n; ++idx)
        keys[std::size_t(idx)] =
            encode(map.apply(cell_center(grid, grid.cell_at(idx))), method, level);
    return keys;
}

Partition partition_1d(std::span<const SfcKey> keys, std::span<const double> weights,
                       int n_ranks, Method method) {
    const std::int64_t n = std::int64_t(keys.size());
    check_rank_count(n, n_ranks);
    if (!weights.empty()) {
        if (std::int64_t(weights.size()) != n)
            throw config_error("weights size " + std::to_string(weights.size()) +
                               " does not match key count " + std::to_string(n));
        for (std::int64_t i = 0; i < n; ++i)
            if (!(weights[std::size_t(i)] > 0.0))
                throw config_error("weight " + std::to_string(i) + " is not positive");
    }
    const int level = keys[0].level;
    for (std::int64_t i = 1; i < n; ++i)
        if (keys[std::size_t(i)].level != level)
            throw config_error("keys mix levels " + std::to_string(level) + " and " +
                               std::to_string(keys[std::size_t(i)].level));

    const int cell_bits = cell_bits_for(n);
    if (3 * level + cell_bits <= 128) {
        PackedOrder order;
        order.cell_bits = cell_bits;
        order.data.reserve(std::size_t(n));
        for (std::int64_t i = 0; i < n; ++i)
            order.data.push_back(keys[std::size_t(i)].value << cell_bits | u128(i));
        return partition_packed(std::move(order), n, weights, n_ranks, method, level);
    }

    RecordOrder order;
    order.data.reserve(std::size_t(n));
    for (std::int64_t i = 0; i < n; ++i)
        order.data.push_back({keys[std::size_t(i)].value, i});
    std::sort(order.data.begin(), order.data.end(),
              [](const RecordOrder::Rec& a, const RecordOrder::Rec& b) {
                  return a.key != b.key ? a.key < b.key : a.idx < b.idx;
              });
    for (std::int64_t i = 1; i < n; ++i)
        if (order.key_value(i - 1) == order.key_value(i))
            throw internal_error("duplicate curve keys at cells " +
                                 std::to_string(order.cell(i - 1)) + " and " +
                                 std::to_string(order.cell(i)));
    return cuts_from_order(order, n, weights, n_ranks, method, level);
}

Partition partition_grid(const GridSpec& grid, Method method, int n_ranks,
                         int level, double epsilon) {
    const DomainMap map = build_domain_map(grid, epsilon);
    const std::int64_t n = grid.num_cells();
    check_rank_count(n, n_ranks);

    const int cell_bits = cell_bits_for(n);
    if (3 * level + cell_bits <= 128) {
        // Key straight into the packed sort buffer: one pass, no
        // intermediate key array. Identical to key_cells + partition_1d.
        check_keying_args(grid, method, level);
        PackedOrder order;
        order.cell_bits = cell_bits;
        order.data.resize(std::size_t(n));
#pragma omp parallel for schedule(static)
        for (std::int64_t idx = 0; idx < n; ++idx)
            order.data[std::size_t(idx)] =
                encode(map.apply(cell_center(grid, grid.cell_at(idx))), method, level).value
                    << cell_bits |
                u128(idx);
        return partition_packed(std::move(order), n, grid.weights(), n_ranks, method, level);
    }

    const std::vector<SfcKey> keys = key_cells(grid, map, method, level);
    return partition_1d(keys, grid.weights(), n_ranks, method);
}

void validate_partition(const Partition& partition, const GridSpec& grid) {
    if (partition.n_ranks < 1)
        throw config_error("partition has no ranks");
    if (std::int64_t(partition.assignment.size()) != grid.num_cells())
        throw config_error("partition covers " + std::to_string(partition.assignment.size()) +
                           " cells, grid has " + std::to_string(grid.num_cells()));
    std::vector<std::int64_t> counts(std::size_t(partition.n_ranks), 0);
    for (std::size_t i = 0; i < partition.assignment.size(); ++i) {
        const std::int32_t r = partition.assignment[i];
        if (r < 0 || r >= partition.n_ranks)
            throw config_error("cell " + std::to_string(i) + " assigned to rank " +
                               std::to_string(r) + ", valid ranks are 0.." +
                               std::to_string(partition.n_ranks - 1));
        ++counts[std::size_t(r)];
    }
    for (int r = 0; r < partition.n_ranks; ++r)
        if (counts[std::size_t(r)] == 0)
            throw config_error("rank " + std::to_string(r) + " owns no cells");
}

} // namespace sfcpart
