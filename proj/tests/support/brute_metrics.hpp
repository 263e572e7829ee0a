// Test-only oracle: an independent recount of the partition quality numbers.
// Walks all 6 directions of every cell with its own neighbor arithmetic and
// set-based bookkeeping; shares nothing with the library's face scan.
#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "sfcpart/grid.hpp"

namespace brute {

struct Result {
    std::vector<std::int64_t> f, b;
    std::vector<int> c;
    double cut = 0.0;
};

inline Result recount(const sfcpart::GridSpec& grid, const std::vector<std::int32_t>& rank,
                      int nranks, const sfcpart::DualGraph* graph = nullptr) {
    Result out;
    out.f.assign(std::size_t(nranks), 0);
    out.b.assign(std::size_t(nranks), 0);
    out.c.assign(std::size_t(nranks), 0);

    std::vector<std::int64_t> same_incidences(std::size_t(nranks), 0);
    std::vector<std::set<int>> links(static_cast<std::size_t>(nranks));
    std::set<std::pair<std::int64_t, std::int64_t>> cut_faces;

    const int dirs[6][3] = {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0},
                            {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
    for (int k = 0; k < grid.nz(); ++k)
        for (int j = 0; j < grid.ny(); ++j)
            for (int i = 0; i < grid.nx(); ++i) {
                const std::int64_t u =
                    i + std::int64_t(grid.nx()) * (j + std::int64_t(grid.ny()) * k);
                const int ru = rank[std::size_t(u)];
                for (const auto& d : dirs) {
                    const int ni = i + d[0], nj = j + d[1], nk = k + d[2];
                    if (ni < 0 || ni >= grid.nx() || nj < 0 || nj >= grid.ny() || nk < 0 ||
                        nk >= grid.nz())
                        continue;
                    const std::int64_t v =
                        ni + std::int64_t(grid.nx()) * (nj + std::int64_t(grid.ny()) * nk);
                    const int rv = rank[std::size_t(v)];
                    if (ru == rv) {
                        ++same_incidences[std::size_t(ru)];
                    } else {
                        ++out.f[std::size_t(ru)];
                        ++out.b[std::size_t(ru)];
                        links[std::size_t(ru)].insert(rv);
                        cut_faces.insert({std::min(u, v), std::max(u, v)});
                    }
                }
            }
    for (int r = 0; r < nranks; ++r) {
        // every same-rank face was seen from both sides
        out.f[std::size_t(r)] += same_incidences[std::size_t(r)] / 2;
        out.c[std::size_t(r)] = int(links[std::size_t(r)].size());
    }
    for (const auto& [u, v] : cut_faces) {
        if (graph && graph->has_edge_weights())
            out.cut += graph->edge_weight(grid.cell_at(u), grid.cell_at(v));
        else
            out.cut += 1.0;
    }
    return out;
}

} // namespace brute
