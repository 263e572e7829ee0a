#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>

#include "sfcpart/grid.hpp"

using namespace sfcpart;

TEST_CASE("construction validates dimensions, extents and weights") {
    CHECK_NOTHROW(GridSpec(1, 1, 1, 0, 1, 0, 1, 0, 1));
    CHECK_THROWS_AS(GridSpec(0, 1, 1, 0, 1, 0, 1, 0, 1), const config_error&);
    CHECK_THROWS_AS(GridSpec(2, -3, 1, 0, 1, 0, 1, 0, 1), const config_error&);
    CHECK_THROWS_AS(GridSpec(1, 1, 1, 1, 1, 0, 1, 0, 1), const config_error&);
    CHECK_THROWS_AS(GridSpec(1, 1, 1, 0, 1, 2, 1, 0, 1), const config_error&);
    CHECK_THROWS_AS(GridSpec(2, 1, 1, 0, 1, 0, 1, 0, 1, {1.0}), const config_error&);
    CHECK_THROWS_AS(GridSpec(2, 1, 1, 0, 1, 0, 1, 0, 1, {1.0, 0.0}), const config_error&);
    CHECK_THROWS_AS(GridSpec(2, 1, 1, 0, 1, 0, 1, 0, 1, {1.0, -2.0}), const config_error&);

    const GridSpec g(2, 3, 4, 0, 1, 0, 1, 0, 1, {});
    CHECK(g.num_cells() == 24);
    CHECK_FALSE(g.has_weights());
    CHECK(g.weight(17) == 1.0);
    CHECK(g.total_weight() == 24.0);
}

TEST_CASE("cell centers") {
    const GridSpec unit(1, 1, 1, 0, 1, 0, 1, 0, 1);
    CHECK(cell_center(unit, {0, 0, 0}) == std::array<double, 3>{0.5, 0.5, 0.5});

    const GridSpec two(2, 2, 2, 0, 2, 0, 2, 0, 2);
    CHECK(cell_center(two, {1, 0, 1}) == std::array<double, 3>{1.5, 0.5, 1.5});

    // anisotropic spacings: hx = 1200/180 = 20/3, hy = 2200/660 = 10/3, hz = 170/255 = 2/3
    const GridSpec refined(180, 660, 255, 0, 1200, 0, 2200, 0, 170);
    const auto c = cell_center(refined, {0, 0, 0});
    CHECK(c[0] == doctest::Approx(10.0 / 3.0).epsilon(1e-14));
    CHECK(c[1] == doctest::Approx(5.0 / 3.0).epsilon(1e-14));
    CHECK(c[2] == doctest::Approx(1.0 / 3.0).epsilon(1e-14));

    CHECK_THROWS_AS(cell_center(two, {2, 0, 0}), const std::out_of_range&);
    CHECK_THROWS_AS(cell_center(two, {0, -1, 0}), const std::out_of_range&);
}

TEST_CASE("cell centers stay strictly inside the domain") {
    const GridSpec g(7, 3, 5, -2.5, 4.0, 10.0, 11.0, 0.0, 0.125);
    for (std::int64_t idx = 0; idx < g.num_cells(); ++idx) {
        const auto c = cell_center(g, g.cell_at(idx));
        for (int a = 0; a < 3; ++a) {
            REQUIRE(c[std::size_t(a)] > g.lower()[std::size_t(a)]);
            REQUIRE(c[std::size_t(a)] < g.upper()[std::size_t(a)]);
        }
    }
}

TEST_CASE("linear index round-trips over whole grids") {
    for (int nx : {1, 2, 5})
        for (int ny : {1, 3})
            for (int nz : {1, 4}) {
                const GridSpec g(nx, ny, nz, 0, 1, 0, 1, 0, 1);
                for (std::int64_t idx = 0; idx < g.num_cells(); ++idx) {
                    const CellCoord c = g.cell_at(idx);
                    REQUIRE(g.linear_index(c) == idx);
                }
                // x-fastest convention
                if (nx > 1)
                    CHECK(g.linear_index({1, 0, 0}) == 1);
            }
    const GridSpec g(2, 2, 2, 0, 1, 0, 1, 0, 1);
    CHECK_THROWS_AS(g.cell_at(8), const std::out_of_range&);
    CHECK_THROWS_AS(g.cell_at(-1), const std::out_of_range&);
}

TEST_CASE("neighbors: counts, symmetry, bounds") {
    const GridSpec single(1, 1, 1, 0, 1, 0, 1, 0, 1);
    CHECK(neighbors(single, {0, 0, 0}).empty());

    const GridSpec g3(3, 3, 3, 0, 1, 0, 1, 0, 1);
    CHECK(neighbors(g3, {1, 1, 1}).size() == 6);
    const auto corner = neighbors(g3, {0, 0, 0});
    REQUIRE(corner.size() == 3);
    const std::set<std::array<int, 3>> got{{corner[0].i, corner[0].j, corner[0].k},
                                           {corner[1].i, corner[1].j, corner[1].k},
                                           {corner[2].i, corner[2].j, corner[2].k}};
    CHECK(got == std::set<std::array<int, 3>>{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});

    CHECK_THROWS_AS(neighbors(g3, {3, 0, 0}), const std::out_of_range&);

    // exhaustive symmetry and degree bounds on small grids
    for (int nx : {2, 3, 8})
        for (int ny : {2, 5})
            for (int nz : {2, 4, 8}) {
                const GridSpec g(nx, ny, nz, 0, 1, 0, 1, 0, 1);
                for (std::int64_t idx = 0; idx < g.num_cells(); ++idx) {
                    const CellCoord u = g.cell_at(idx);
                    const auto nbrs = neighbors(g, u);
                    REQUIRE(nbrs.size() >= 3); // all dims >= 2
                    REQUIRE(nbrs.size() <= 6);
                    for (const CellCoord& v : nbrs) {
                        const auto back = neighbors(g, v);
                        REQUIRE(std::find(back.begin(), back.end(), u) != back.end());
                    }
                }
            }
}

TEST_CASE("dual graph wraps the grid and defaults edge weights to 1") {
    const GridSpec g(4, 4, 4, 0, 1, 0, 1, 0, 1);
    const DualGraph plain(g);
    CHECK_FALSE(plain.has_edge_weights());
    CHECK(plain.edge_weight({0, 0, 0}, {1, 0, 0}) == 1.0);

    const DualGraph weighted(g, [](const CellCoord& a, const CellCoord& b) {
        return a.k != b.k ? 10.0 : 1.0;
    });
    CHECK(weighted.has_edge_weights());
    CHECK(weighted.edge_weight({0, 0, 0}, {0, 0, 1}) == 10.0);
    CHECK(weighted.edge_weight({0, 0, 0}, {0, 1, 0}) == 1.0);
}
