#include "sfcpart/io.hpp"

#include <fstream>
#include <sstream>
#include <string>

namespace sfcpart {

namespace {

std::ifstream open_for_read(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw parse_error("cannot open '" + path.string() + "' for reading");
    return in;
}

bool blank(const std::string& line) {
    return line.find_first_not_of(" \t\r") == std::string::npos;
}

} // namespace

GridSpec read_grid_spec(const std::filesystem::path& path) {
    std::ifstream in = open_for_read(path);

    bool have_dims = false, have_extents = false;
    int nx = 0, ny = 0, nz = 0;
    double ext[6] = {0, 0, 0, 0, 0, 0};
    std::filesystem::path weights_path;

    std::string line;
    long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (blank(line))
            continue;
        std::istringstream ls(line);
        std::string keyword;
        ls >> keyword;
        if (keyword == "dims") {
            if (have_dims)
                throw parse_error("repeated 'dims' line", lineno);
            if (!(ls >> nx >> ny >> nz))
                throw parse_error("expected 'dims nx ny nz'", lineno);
            have_dims = true;
        } else if (keyword == "extents") {
            if (have_extents)
                throw parse_error("repeated 'extents' line", lineno);
            if (!(ls >> ext[0] >> ext[1] >> ext[2] >> ext[3] >> ext[4] >> ext[5]))
                throw parse_error("expected 'extents x1 x2 y1 y2 z1 z2'", lineno);
            have_extents = true;
        } else if (keyword == "weights") {
            if (!weights_path.empty())
                throw parse_error("repeated 'weights' line", lineno);
            std::string p;
            if (!(ls >> p))
                throw parse_error("expected 'weights <path>'", lineno);
            weights_path = p;
        } else {
            throw parse_error("unknown keyword '" + keyword + "'", lineno);
        }
        std::string trailing;
        if (ls >> trailing)
            throw parse_error("trailing content '" + trailing + "'", lineno);
    }
    if (!have_dims)
        throw parse_error("missing 'dims' line in '" + path.string() + "'");
    if (!have_extents)
        throw parse_error("missing 'extents' line in '" + path.string() + "'");

    std::vector<double> weights;
    if (!weights_path.empty()) {
        if (weights_path.is_relative())
            weights_path = path.parent_path() / weights_path;
        weights = read_weights(weights_path, std::int64_t(nx) * ny * nz);
    }
    try {
        return GridSpec(nx, ny, nz, ext[0], ext[1], ext[2], ext[3], ext[4], ext[5],
                        std::move(weights));
    } catch (const config_error& e) {
        throw parse_error("invalid grid in '" + path.string() + "': " + e.what());
    }
}

std::vector<double> read_weights(const std::filesystem::path& path, std::int64_t count) {
    std::ifstream in = open_for_read(path);
    std::vector<double> weights;
    weights.reserve(std::size_t(count));
    double w = 0.0;
    while (in >> w) {
        if (!(w > 0.0))
            throw parse_error("weight " + std::to_string(weights.size()) + " in '" +
                              path.string() + "' is not positive");
        weights.push_back(w);
    }
    if (!in.eof())
        throw parse_error("malformed number after " + std::to_string(weights.size()) +
                          " weights in '" + path.string() + "'");
    if (std::int64_t(weights.size()) != count)
        throw parse_error("'" + path.string() + "' has " + std::to_string(weights.size()) +
                          " weights, expected " + std::to_string(count));
    return weights;
}

void write_partition(std::ostream& out, const Partition& partition) {
    out << "nparts " << partition.n_ranks << '\n';
    out << "method " << method_name(partition.method) << '\n';
    for (std::int32_t r : partition.assignment)
        out << r << '\n';
}

void write_partition(const std::filesystem::path& path, const Partition& partition) {
    std::ofstream out(path);
    if (!out)
        throw parse_error("cannot open '" + path.string() + "' for writing");
    write_partition(out, partition);
    out.flush();
    if (!out)
        throw parse_error("failed writing '" + path.string() + "'");
}

Partition read_partition(std::istream& in) {
    std::string keyword;
    Partition part;

    long lineno = 1;
    if (!(in >> keyword) || keyword != "nparts" || !(in >> part.n_ranks))
        throw parse_error("expected 'nparts N'", lineno);
    if (part.n_ranks < 1)
        throw parse_error("nparts must be at least 1", lineno);

    ++lineno;
    std::string name;
    if (!(in >> keyword) || keyword != "method" || !(in >> name))
        throw parse_error("expected 'method <name>'", lineno);
    try {
        part.method = method_from_name(name);
    } catch (const config_error& e) {
        throw parse_error(e.what(), lineno);
    }

    std::int64_t value = 0;
    while (in >> value) {
        ++lineno;
        if (value < 0 || value >= part.n_ranks)
            throw parse_error("rank id " + std::to_string(value) + " outside 0.." +
                              std::to_string(part.n_ranks - 1), lineno);
        part.assignment.push_back(std::int32_t(value));
    }
    if (!in.eof())
        throw parse_error("malformed rank id", lineno + 1);
    if (part.assignment.empty())
        throw parse_error("partition file has no cells");
    return part;
}

Partition read_partition(const std::filesystem::path& path) {
    std::ifstream in = open_for_read(path);
    return read_partition(in);
}

} // namespace sfcpart
