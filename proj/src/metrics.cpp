// Partition quality: per-rank face counts, surface indices, connectivity,
// edge cut, load imbalance.
//
// The face scan walks the +x/+y/+z neighbor of every cell, so each interior
// mesh face is visited exactly once. Counts are integers and therefore
// schedule-independent; the cut-weight sum is accumulated per fixed-size
// block and reduced in block order, so the result does not depend on the
// thread count either.

#include "sfcpart/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace sfcpart {

namespace {

void check_sizes(const Partition& partition, const GridSpec& grid) {
    if (std::int64_t(partition.assignment.size()) != grid.num_cells())
        throw config_error("partition covers " + std::to_string(partition.assignment.size()) +
                           " cells, grid has " + std::to_string(grid.num_cells()));
    if (partition.n_ranks < 1)
        throw config_error("partition has no ranks");
}

struct FaceScan {
    std::vector<std::int64_t> faces;          // f_i
    std::vector<std::int64_t> boundary_faces; // b_i
    double cut_weight = 0.0;
    std::vector<std::uint64_t> rank_pairs;    // distinct (lo<<32|hi) adjacencies
};

constexpr std::int64_t kBlock = 1 << 14;

FaceScan scan_faces(const Partition& partition, const DualGraph& graph, bool parallel) {
    const GridSpec& grid = graph.grid();
    check_sizes(partition, grid);

    const std::int64_t n = grid.num_cells();
    const int nranks = partition.n_ranks;
    const std::int64_t nblocks = (n + kBlock - 1) / kBlock;
    const auto* rank = partition.assignment.data();

    int nthreads = 1;
#ifdef _OPENMP
    if (parallel)
        nthreads = omp_get_max_threads();
#else
    (void)parallel;
#endif

    std::vector<std::vector<std::int64_t>> tf(nthreads), tb(nthreads);
    std::vector<std::vector<std::uint64_t>> tpairs(nthreads);
    for (int t = 0; t < nthreads; ++t) {
        tf[t].assign(std::size_t(nranks), 0);
        tb[t].assign(std::size_t(nranks), 0);
    }
    std::vector<double> block_cut(std::size_t(nblocks), 0.0);

    const int nx = grid.nx(), ny = grid.ny(), nz = grid.nz();
    const std::int64_t sx = 1, sy = nx, sz = std::int64_t(nx) * ny;

#pragma omp parallel for schedule(static) if (parallel)
    for (std::int64_t blk = 0; blk < nblocks; ++blk) {
        int tid = 0;
#ifdef _OPENMP
        tid = omp_get_thread_num();
#endif
        auto& f = tf[std::size_t(tid)];
        auto& b = tb[std::size_t(tid)];
        std::vector<std::uint64_t> pairs;
        double cut = 0.0;

        const std::int64_t lo = blk * kBlock;
        const std::int64_t hi = std::min(n, lo + kBlock);
        for (std::int64_t idx = lo; idx < hi; ++idx) {
            const int i = int(idx % nx);
            const std::int64_t rest = idx / nx;
            const int j = int(rest % ny);
            const int k = int(rest / ny);
            const std::int32_t ru = rank[idx];

            const bool open[3] = {i + 1 < nx, j + 1 < ny, k + 1 < nz};
            const std::int64_t stride[3] = {sx, sy, sz};
            for (int dir = 0; dir < 3; ++dir) {
                if (!open[dir])
                    continue;
                const std::int64_t vidx = idx + stride[dir];
                const std::int32_t rv = rank[vidx];
                if (ru == rv) {
                    ++f[std::size_t(ru)];
                    continue;
                }
                ++f[std::size_t(ru)];
                ++f[std::size_t(rv)];
                ++b[std::size_t(ru)];
                ++b[std::size_t(rv)];
                if (graph.has_edge_weights()) {
                    const CellCoord u{i, j, k};
                    CellCoord v = u;
                    (dir == 0 ? v.i : dir == 1 ? v.j : v.k) += 1;
                    cut += graph.edge_weight(u, v);
                } else {
                    cut += 1.0;
                }
                const std::uint32_t a = std::uint32_t(std::min(ru, rv));
                const std::uint32_t c = std::uint32_t(std::max(ru, rv));
                pairs.push_back(std::uint64_t(a) << 32 | c);
            }
        }
        std::sort(pairs.begin(), pairs.end());
        pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
        auto& sink = tpairs[std::size_t(tid)];
        sink.insert(sink.end(), pairs.begin(), pairs.end());
        block_cut[std::size_t(blk)] = cut;
    }

    FaceScan out;
    out.faces.assign(std::size_t(nranks), 0);
    out.boundary_faces.assign(std::size_t(nranks), 0);
    for (int t = 0; t < nthreads; ++t)
        for (int r = 0; r < nranks; ++r) {
            out.faces[std::size_t(r)] += tf[std::size_t(t)][std::size_t(r)];
            out.boundary_faces[std::size_t(r)] += tb[std::size_t(t)][std::size_t(r)];
        }
    for (std::int64_t blk = 0; blk < nblocks; ++blk)
        out.cut_weight += block_cut[std::size_t(blk)];
    for (int t = 0; t < nthreads; ++t)
        out.rank_pairs.insert(out.rank_pairs.end(), tpairs[std::size_t(t)].begin(),
                              tpairs[std::size_t(t)].end());
    std::sort(out.rank_pairs.begin(), out.rank_pairs.end());
    out.rank_pairs.erase(std::unique(out.rank_pairs.begin(), out.rank_pairs.end()),
                         out.rank_pairs.end());
    return out;
}

std::vector<int> pair_connectivity(const std::vector<std::uint64_t>& rank_pairs, int nranks) {
    std::vector<int> c(std::size_t(nranks), 0);
    for (std::uint64_t p : rank_pairs) {
        ++c[std::size_t(p >> 32)];
        ++c[std::size_t(p & 0xffffffffu)];
    }
    return c;
}

QualityReport assemble(const Partition& partition, const DualGraph& graph, bool parallel) {
    const GridSpec& grid = graph.grid();
    const FaceScan scan = scan_faces(partition, graph, parallel);
    const int nranks = partition.n_ranks;

    QualityReport report;
    report.per_rank.assign(std::size_t(nranks), RankStats{});
    for (std::int64_t idx = 0; idx < grid.num_cells(); ++idx) {
        auto& rs = report.per_rank[std::size_t(partition.assignment[std::size_t(idx)])];
        ++rs.cells;
        rs.weight += grid.weight(idx);
    }
    for (int r = 0; r < nranks; ++r)
        if (report.per_rank[std::size_t(r)].cells == 0)
            throw internal_error("rank " + std::to_string(r) + " owns no cells");

    const std::vector<int> conn = pair_connectivity(scan.rank_pairs, nranks);
    double ratio_sum = 0.0, ratio_max = 0.0, weight_max = 0.0, weight_total = 0.0;
    for (int r = 0; r < nranks; ++r) {
        auto& rs = report.per_rank[std::size_t(r)];
        rs.faces = scan.faces[std::size_t(r)];
        rs.boundary_faces = scan.boundary_faces[std::size_t(r)];
        rs.connectivity = conn[std::size_t(r)];
        const double ratio = rs.faces > 0 ? double(rs.boundary_faces) / double(rs.faces) : 0.0;
        ratio_sum += ratio;
        ratio_max = std::max(ratio_max, ratio);
        report.c_max = std::max(report.c_max, rs.connectivity);
        weight_max = std::max(weight_max, rs.weight);
        weight_total += rs.weight;
    }
    report.r_max = ratio_max;
    report.r_avg = ratio_sum / double(nranks);
    report.edge_cut = scan.cut_weight;
    report.imbalance = weight_max / (weight_total / double(nranks));
    return report;
}

} // namespace

SurfaceCounts surface_counts(const Partition& partition, const DualGraph& graph) {
    FaceScan scan = scan_faces(partition, graph, true);
    return {std::move(scan.faces), std::move(scan.boundary_faces)};
}

SurfaceIndices surface_indices(const SurfaceCounts& counts) {
    SurfaceIndices out;
    const std::size_t nranks = counts.faces.size();
    if (nranks == 0 || counts.boundary_faces.size() != nranks)
        throw config_error("malformed surface counts");
    double sum = 0.0;
    for (std::size_t r = 0; r < nranks; ++r) {
        if (counts.boundary_faces[r] > counts.faces[r])
            throw internal_error("rank " + std::to_string(r) + " has more boundary faces than faces");
        const double ratio =
            counts.faces[r] > 0 ? double(counts.boundary_faces[r]) / double(counts.faces[r]) : 0.0;
        sum += ratio;
        out.r_max = std::max(out.r_max, ratio);
    }
    out.r_avg = sum / double(nranks);
    return out;
}

Connectivity connectivity(const Partition& partition, const DualGraph& graph) {
    const FaceScan scan = scan_faces(partition, graph, true);
    Connectivity out;
    out.per_rank = pair_connectivity(scan.rank_pairs, partition.n_ranks);
    for (int c : out.per_rank)
        out.c_max = std::max(out.c_max, c);
    return out;
}

double edge_cut(const Partition& partition, const DualGraph& graph) {
    return scan_faces(partition, graph, true).cut_weight;
}

double imbalance(const Partition& partition, std::span<const double> weights) {
    const std::int64_t n = std::int64_t(partition.assignment.size());
    if (!weights.empty() && std::int64_t(weights.size()) != n)
        throw config_error("weights size " + std::to_string(weights.size()) +
                           " does not match partition size " + std::to_string(n));
    std::vector<double> rank_weight(std::size_t(partition.n_ranks), 0.0);
    for (std::int64_t i = 0; i < n; ++i)
        rank_weight[std::size_t(partition.assignment[std::size_t(i)])] +=
            weights.empty() ? 1.0 : weights[std::size_t(i)];
    const double total = std::accumulate(rank_weight.begin(), rank_weight.end(), 0.0);
    const double mx = *std::max_element(rank_weight.begin(), rank_weight.end());
    return mx / (total / double(partition.n_ranks));
}

QualityReport compute_quality(const Partition& partition, const DualGraph& graph) {
    return assemble(partition, graph, true);
}

QualityReport compute_quality_serial(const Partition& partition, const DualGraph& graph) {
    return assemble(partition, graph, false);
}

} // namespace sfcpart
