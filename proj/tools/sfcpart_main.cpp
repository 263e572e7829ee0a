// sfcpart command line: partition structured grids along space-filling
// curves and score partition quality.
//
//   sfcpart partition --grid g.txt --method hilbert --np 256 --out p.txt
//   sfcpart metrics   --grid g.txt --partition p.txt [--format csv]
//   sfcpart sweep     --grid g.txt --method hilbert,morton --np 256,512,1024
//   sfcpart encode    [--method hilbert] [--level 30]   (u v w triples on stdin)
//
// Exit codes: 0 success, 1 usage or bad parameters, 2 bad input data.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "sfcpart/io.hpp"
#include "sfcpart/metrics.hpp"
#include "sfcpart/partition.hpp"

namespace {

using namespace sfcpart;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

void apply_threads(int threads) {
#ifdef _OPENMP
    if (threads > 0)
        omp_set_num_threads(threads);
#else
    (void)threads;
#endif
}

GridSpec load_grid(const std::string& grid_path, const std::string& weights_path) {
    GridSpec grid = read_grid_spec(grid_path);
    if (weights_path.empty())
        return grid;
    std::vector<double> w = read_weights(weights_path, grid.num_cells());
    const auto lo = grid.lower();
    const auto hi = grid.upper();
    return GridSpec(grid.nx(), grid.ny(), grid.nz(), lo[0], hi[0], lo[1], hi[1], lo[2], hi[2],
                    std::move(w));
}

std::vector<Method> parse_methods(const std::vector<std::string>& names) {
    std::vector<Method> methods;
    for (const auto& name : names) {
        const Method m = method_from_name(name);
        if (m == Method::external)
            throw config_error("method 'external' cannot produce partitions");
        methods.push_back(m);
    }
    return methods;
}

void check_np(const std::vector<int>& np_list, const GridSpec& grid) {
    for (int np : np_list) {
        if (np < 1)
            throw config_error("--np values must be at least 1, got " + std::to_string(np));
        if (np > grid.num_cells())
            throw config_error("--np " + std::to_string(np) + " exceeds the cell count " +
                               std::to_string(grid.num_cells()));
    }
}

void print_report_text(std::ostream& out, const QualityReport& q) {
    out << "rank        cells        weight            f            b      c\n";
    char line[160];
    for (std::size_t r = 0; r < q.per_rank.size(); ++r) {
        const auto& rs = q.per_rank[r];
        std::snprintf(line, sizeof line, "%-6zu %10lld %13.4f %12lld %12lld %6d\n", r,
                      (long long)rs.cells, rs.weight, (long long)rs.faces,
                      (long long)rs.boundary_faces, rs.connectivity);
        out << line;
    }
    char summary[256];
    std::snprintf(summary, sizeof summary,
                  "np=%zu r_max=%.6f r_avg=%.6f c_max=%d edge_cut=%.6g imbalance=%.6f\n",
                  q.per_rank.size(), q.r_max, q.r_avg, q.c_max, q.edge_cut, q.imbalance);
    out << summary;
}

void print_report_csv(std::ostream& out, const QualityReport& q) {
    out << "rank,cells,weight,f,b,c\n";
    char line[160];
    for (std::size_t r = 0; r < q.per_rank.size(); ++r) {
        const auto& rs = q.per_rank[r];
        std::snprintf(line, sizeof line, "%zu,%lld,%.17g,%lld,%lld,%d\n", r, (long long)rs.cells,
                      rs.weight, (long long)rs.faces, (long long)rs.boundary_faces,
                      rs.connectivity);
        out << line;
    }
    char summary[256];
    std::snprintf(summary, sizeof summary,
                  "summary,np=%zu,r_max=%.17g,r_avg=%.17g,c_max=%d,edge_cut=%.17g,imbalance=%.17g\n",
                  q.per_rank.size(), q.r_max, q.r_avg, q.c_max, q.edge_cut, q.imbalance);
    out << summary;
}

int run_partition(const std::string& grid_path, const std::string& weights_path,
                  const std::string& method_name, int np, int level, double epsilon,
                  const std::string& out_path) {
    const GridSpec grid = load_grid(grid_path, weights_path);
    check_np({np}, grid);
    const Method method = parse_methods({method_name}).front();

    const auto start = Clock::now();
    const Partition part = partition_grid(grid, method, np, level, epsilon);
    const double elapsed = seconds_since(start);

    write_partition(out_path, part);
    std::printf("partitioned %lld cells into %d ranks (%s, level %d) in %.3f s -> %s\n",
                (long long)grid.num_cells(), np, method_name.c_str(), level, elapsed,
                out_path.c_str());
    return 0;
}

int run_metrics(const std::string& grid_path, const std::string& weights_path,
                const std::string& partition_path, const std::string& format) {
    const GridSpec grid = load_grid(grid_path, weights_path);
    const Partition part = read_partition(partition_path);
    try {
        validate_partition(part, grid);
    } catch (const config_error& e) {
        // inconsistent input files, not a flag problem
        throw parse_error("'" + partition_path + "' does not fit '" + grid_path +
                          "': " + e.what());
    }
    const DualGraph graph(grid);
    const QualityReport q = compute_quality(part, graph);
    if (format == "csv")
        print_report_csv(std::cout, q);
    else
        print_report_text(std::cout, q);
    return 0;
}

int run_sweep(const std::string& grid_path, const std::string& weights_path,
              const std::vector<std::string>& method_names, std::vector<int> np_list, int level,
              double epsilon, const std::string& format) {
    const GridSpec grid = load_grid(grid_path, weights_path);
    check_np(np_list, grid);
    const std::vector<Method> methods = parse_methods(method_names);

    const bool csv = format == "csv";
    if (csv)
        std::printf("method,np,r_max,r_avg,c_max,edge_cut,imbalance,partition_seconds\n");
    else
        std::printf("%-8s %6s %9s %9s %6s %14s %10s %8s\n", "method", "np", "r_max", "r_avg",
                    "c_max", "edge_cut", "imbalance", "time_s");

    const DualGraph graph(grid);
    for (const Method method : methods) {
        // keys do not depend on np; compute them once per method
        const auto keyed_at = Clock::now();
        const DomainMap map = build_domain_map(grid, epsilon);
        const std::vector<SfcKey> keys = key_cells(grid, map, method, level);
        const double keying = seconds_since(keyed_at);

        for (const int np : np_list) {
            const auto start = Clock::now();
            const Partition part = partition_1d(keys, grid.weights(), np, method);
            const double elapsed = keying + seconds_since(start);
            const QualityReport q = compute_quality(part, graph);
            if (csv)
                std::printf("%s,%d,%.17g,%.17g,%d,%.17g,%.17g,%.3f\n",
                            method_name(method).c_str(), np, q.r_max, q.r_avg, q.c_max,
                            q.edge_cut, q.imbalance, elapsed);
            else
                std::printf("%-8s %6d %8.4f%% %8.4f%% %6d %14.6g %10.4f %8.3f\n",
                            method_name(method).c_str(), np, 100.0 * q.r_max, 100.0 * q.r_avg,
                            q.c_max, q.edge_cut, q.imbalance, elapsed);
        }
    }
    return 0;
}

int run_encode(const std::string& method_name_arg, int level) {
    const Method method = parse_methods({method_name_arg}).front();
    std::string line;
    long lineno = 0;
    while (std::getline(std::cin, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        UnitPoint p;
        char trailing;
        const int got = std::sscanf(line.c_str(), "%lf %lf %lf %c", &p.u, &p.v, &p.w, &trailing);
        if (got != 3)
            throw parse_error("expected 'u v w'", lineno);
        SfcKey key;
        try {
            key = method == Method::hilbert ? hilbert_encode(p, level) : morton_encode(p, level);
        } catch (const domain_error& e) {
            throw parse_error(e.what(), lineno);
        }
        std::printf("%s %s %.17g\n", to_string(key.value).c_str(),
                    to_hex_string(key.value).c_str(), key_to_unit_interval(key));
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"structured-grid partitioning along space-filling curves"};
    app.require_subcommand(1);

    int threads = 0;
    app.add_option("--threads", threads, "worker thread count (default: all cores)")
        ->envname("SFCPART_THREADS");

    std::string grid_path, weights_path, partition_path, out_path;
    std::string format = "text";
    std::vector<std::string> methods = {"hilbert"};
    std::vector<int> np_list;
    int level = kDefaultLevel;
    double epsilon = kDefaultEpsilon;

    auto add_grid = [&](CLI::App* cmd) {
        cmd->add_option("--grid", grid_path, "grid spec file")->required();
        cmd->add_option("--weights", weights_path, "cell weight file (overrides the grid file)");
    };
    auto add_curve = [&](CLI::App* cmd) {
        cmd->add_option("--level", level, "curve level (bits per axis)")
            ->default_val(kDefaultLevel);
        cmd->add_option("--epsilon", epsilon, "margin of the unit-cube mapping")
            ->default_val(kDefaultEpsilon);
    };

    CLI::App* partition = app.add_subcommand("partition", "assign cells to ranks");
    add_grid(partition);
    add_curve(partition);
    partition->add_option("--method", methods, "hilbert or morton")->delimiter(',');
    partition->add_option("--np", np_list, "rank count")->delimiter(',')->required();
    partition->add_option("--out", out_path, "partition file to write")->required();

    CLI::App* metrics = app.add_subcommand("metrics", "score a partition file");
    add_grid(metrics);
    metrics->add_option("--partition", partition_path, "partition file to score")->required();
    metrics->add_option("--format", format, "text or csv")
        ->check(CLI::IsMember({"text", "csv"}));

    CLI::App* sweep = app.add_subcommand("sweep", "quality table over methods and rank counts");
    add_grid(sweep);
    add_curve(sweep);
    sweep->add_option("--method", methods, "comma list of methods")->delimiter(',');
    sweep->add_option("--np", np_list, "comma list of rank counts")->delimiter(',')->required();
    sweep->add_option("--format", format, "text or csv")->check(CLI::IsMember({"text", "csv"}));

    CLI::App* encode = app.add_subcommand("encode", "key 'u v w' triples from stdin");
    add_curve(encode);
    encode->add_option("--method", methods, "hilbert or morton")->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    apply_threads(threads);
    try {
        if (app.got_subcommand(partition)) {
            if (np_list.size() != 1)
                throw config_error("partition takes exactly one --np value");
            if (methods.size() != 1)
                throw config_error("partition takes exactly one --method");
            return run_partition(grid_path, weights_path, methods.front(), np_list.front(),
                                 level, epsilon, out_path);
        }
        if (app.got_subcommand(metrics))
            return run_metrics(grid_path, weights_path, partition_path, format);
        if (app.got_subcommand(sweep))
            return run_sweep(grid_path, weights_path, methods, np_list, level, epsilon, format);
        if (app.got_subcommand(encode)) {
            if (methods.size() != 1)
                throw config_error("encode takes exactly one --method");
            return run_encode(methods.front(), level);
        }
    } catch (const config_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const error& e) { // parse, domain, internal: bad data
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
