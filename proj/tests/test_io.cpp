#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include "sfcpart/io.hpp"

using namespace sfcpart;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("sfcpart_io_test_" + std::to_string(::getpid()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }

    fs::path write(const std::string& name, const std::string& content) const {
        const fs::path p = path / name;
        std::ofstream out(p);
        out << content;
        return p;
    }
};

} // namespace

TEST_CASE("grid spec files") {
    TempDir tmp;

    SUBCASE("minimal") {
        const auto p = tmp.write("g.txt", "dims 4 5 6\nextents 0 1 0 2 0 3\n");
        const GridSpec g = read_grid_spec(p);
        CHECK(g.nx() == 4);
        CHECK(g.ny() == 5);
        CHECK(g.nz() == 6);
        CHECK(g.lengths() == std::array<double, 3>{1, 2, 3});
        CHECK_FALSE(g.has_weights());
    }

    SUBCASE("blank lines are fine, order is free") {
        const auto p = tmp.write("g.txt", "\nextents 0 1 0 1 0 1\n\ndims 2 2 2\n");
        CHECK(read_grid_spec(p).num_cells() == 8);
    }

    SUBCASE("weights path is relative to the grid file") {
        tmp.write("w.txt", "1 2 3 4\n5 6 7 8\n");
        const auto p = tmp.write("g.txt", "dims 2 2 2\nextents 0 1 0 1 0 1\nweights w.txt\n");
        const GridSpec g = read_grid_spec(p);
        REQUIRE(g.has_weights());
        CHECK(g.weights()[0] == 1.0);
        CHECK(g.weights()[7] == 8.0);
        CHECK(g.total_weight() == 36.0);
    }

    SUBCASE("unknown keyword names its line") {
        const auto p = tmp.write("g.txt", "dims 2 2 2\nmesh stuff\nextents 0 1 0 1 0 1\n");
        CHECK_THROWS_WITH_AS(read_grid_spec(p), doctest::Contains("line 2"), const parse_error&);
    }

    SUBCASE("trailing junk, missing fields, repeats") {
        CHECK_THROWS_AS(read_grid_spec(tmp.write("a.txt", "dims 2 2 2 9\nextents 0 1 0 1 0 1\n")),
                        const parse_error&);
        CHECK_THROWS_AS(read_grid_spec(tmp.write("b.txt", "dims 2 2\nextents 0 1 0 1 0 1\n")),
                        const parse_error&);
        CHECK_THROWS_AS(read_grid_spec(tmp.write("c.txt", "dims 2 2 2\n")), const parse_error&);
        CHECK_THROWS_AS(read_grid_spec(tmp.write("d.txt", "extents 0 1 0 1 0 1\n")),
                        const parse_error&);
        CHECK_THROWS_AS(
            read_grid_spec(tmp.write("e.txt", "dims 2 2 2\ndims 2 2 2\nextents 0 1 0 1 0 1\n")),
            const parse_error&);
        CHECK_THROWS_AS(read_grid_spec(tmp.path / "missing.txt"), const parse_error&);
        // invalid values surface as parse errors too
        CHECK_THROWS_AS(read_grid_spec(tmp.write("f.txt", "dims 0 2 2\nextents 0 1 0 1 0 1\n")),
                        const parse_error&);
    }
}

TEST_CASE("weights files") {
    TempDir tmp;
    CHECK(read_weights(tmp.write("w.txt", "0.5 1.5\n2.5 "), 3) ==
          std::vector<double>{0.5, 1.5, 2.5});
    CHECK_THROWS_AS(read_weights(tmp.write("short.txt", "1 2"), 3), const parse_error&);
    CHECK_THROWS_AS(read_weights(tmp.write("long.txt", "1 2 3 4"), 3), const parse_error&);
    CHECK_THROWS_AS(read_weights(tmp.write("neg.txt", "1 -2 3"), 3), const parse_error&);
    CHECK_THROWS_AS(read_weights(tmp.write("junk.txt", "1 two 3"), 3), const parse_error&);
}

TEST_CASE("partition files round-trip") {
    Partition p;
    p.n_ranks = 3;
    p.method = Method::hilbert;
    p.assignment = {0, 0, 1, 1, 2, 2, 2, 1};

    std::ostringstream out;
    write_partition(out, p);
    CHECK(out.str() == "nparts 3\nmethod hilbert\n0\n0\n1\n1\n2\n2\n2\n1\n");

    std::istringstream in(out.str());
    const Partition q = read_partition(in);
    CHECK(q.n_ranks == p.n_ranks);
    CHECK(q.method == p.method);
    CHECK(q.assignment == p.assignment);
    CHECK(q.cut_keys.empty());
}

TEST_CASE("partition files through the filesystem") {
    TempDir tmp;
    Partition p;
    p.n_ranks = 2;
    p.method = Method::external;
    p.assignment = {1, 0, 1};
    const fs::path file = tmp.path / "part.txt";
    write_partition(file, p);
    const Partition q = read_partition(file);
    CHECK(q.assignment == p.assignment);
    CHECK(q.method == Method::external);
}

TEST_CASE("malformed partition files") {
    auto parse = [](const std::string& text) {
        std::istringstream in(text);
        return read_partition(in);
    };
    CHECK_THROWS_AS(parse(""), const parse_error&);
    CHECK_THROWS_AS(parse("nparts x\n"), const parse_error&);
    CHECK_THROWS_AS(parse("nparts 0\nmethod hilbert\n0\n"), const parse_error&);
    CHECK_THROWS_AS(parse("nparts 2\n0\n1\n"), const parse_error&);
    CHECK_THROWS_AS(parse("nparts 2\nmethod zigzag\n0\n1\n"), const parse_error&);
    CHECK_THROWS_AS(parse("nparts 2\nmethod hilbert\n"), const parse_error&);
    CHECK_THROWS_AS(parse("nparts 2\nmethod hilbert\n0\n2\n"), const parse_error&);
    CHECK_THROWS_AS(parse("nparts 2\nmethod hilbert\n0\n-1\n"), const parse_error&);
    CHECK_THROWS_AS(parse("nparts 2\nmethod hilbert\n0\n1\nbogus\n"), const parse_error&);
}
