#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "sfcpart/grid.hpp"
#include "sfcpart/partition.hpp"

namespace sfcpart {

/// Per-rank face counts. faces[i] is the number of interior mesh faces
/// incident to rank i: a face between two rank-i cells counts once, a face
/// between rank i and another rank counts in both ranks. Faces on the
/// physical boundary of Omega carry no communication and are not counted.
/// boundary_faces[i] is the subset shared with another rank.
struct SurfaceCounts {
    std::vector<std::int64_t> faces;
    std::vector<std::int64_t> boundary_faces;
};

/// Surface indices over the counts: r_max = max_i b_i/f_i,
/// r_avg = (1/n_ranks) * sum_i b_i/f_i.
struct SurfaceIndices {
    double r_max = 0.0;
    double r_avg = 0.0;
};

struct Connectivity {
    std::vector<int> per_rank; ///< distinct other ranks adjacent to rank i
    int c_max = 0;
};

struct RankStats {
    std::int64_t cells = 0;
    double weight = 0.0;
    std::int64_t faces = 0;
    std::int64_t boundary_faces = 0;
    int connectivity = 0;
};

/// Everything the quality table needs for one partition.
struct QualityReport {
    std::vector<RankStats> per_rank;
    double r_max = 0.0;
    double r_avg = 0.0;
    int c_max = 0;
    double edge_cut = 0.0;
    double imbalance = 1.0;
};

/// Throws config_error when the assignment length does not match the grid.
SurfaceCounts surface_counts(const Partition& partition, const DualGraph& graph);

/// Requires f_i > 0 for every rank (an empty rank violates the partition
/// invariants and throws internal_error).
SurfaceIndices surface_indices(const SurfaceCounts& counts);

Connectivity connectivity(const Partition& partition, const DualGraph& graph);

/// Total weight of dual-graph edges whose endpoints lie in different ranks;
/// each cut edge counted once.
double edge_cut(const Partition& partition, const DualGraph& graph);

/// max_i (rank weight) / (W / n_ranks); 1.0 is a perfect split. An empty
/// weights span means uniform cell weights.
double imbalance(const Partition& partition, std::span<const double> weights);

/// All of the above in one pass over the grid. Parallel over cells; counts
/// are integers and real sums are accumulated in a fixed block order, so the
/// result does not depend on the schedule or thread count.
QualityReport compute_quality(const Partition& partition, const DualGraph& graph);

/// Single-threaded reference for compute_quality; same contract.
QualityReport compute_quality_serial(const Partition& partition, const DualGraph& graph);

} // namespace sfcpart
