#include "nzpoly/families.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace nzpoly {

namespace {

int parse_size(const std::string& part, int lo, int hi, const std::string& spec) {
    int value = 0;
    try {
        std::size_t used = 0;
        value = std::stoi(part, &used);
        if (used != part.size()) throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
        throw std::invalid_argument("generate_family: bad size in '" + spec + "'");
    }
    if (value < lo || value > hi) {
        throw std::invalid_argument("generate_family: size out of range in '" + spec + "'");
    }
    return value;
}

std::vector<std::string> split_colons(const std::string& s) {
    std::vector<std::string> parts;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ':')) parts.push_back(item);
    return parts;
}

} // namespace

Graph generate_family(const std::string& spec) {
    if (spec.rfind("file:", 0) == 0) {
        const std::string path = spec.substr(5);
        std::ifstream in(path);
        if (!in) throw std::invalid_argument("generate_family: cannot open '" + path + "'");
        std::ostringstream text;
        text << in.rdbuf();
        return parse_edge_list(text.str());
    }

    const auto parts = split_colons(spec);
    const std::string& name = parts.empty() ? spec : parts[0];
    std::vector<Edge> edges;

    if (name == "complete" && parts.size() == 2) {
        const int n = parse_size(parts[1], 1, 64, spec);
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
        }
        return Graph::with_vertex_count(n, std::move(edges));
    }
    if (name == "cycle" && parts.size() == 2) {
        const int n = parse_size(parts[1], 1, 1024, spec);
        for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
        return Graph::with_vertex_count(n, std::move(edges));
    }
    if (name == "path" && parts.size() == 2) {
        const int n = parse_size(parts[1], 1, 1024, spec);
        for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
        return Graph::with_vertex_count(n, std::move(edges));
    }
    if (name == "star" && parts.size() == 2) {
        const int n = parse_size(parts[1], 1, 1024, spec);
        for (int i = 1; i < n; ++i) edges.push_back({0, i});
        return Graph::with_vertex_count(n, std::move(edges));
    }
    if (name == "bouquet" && parts.size() == 2) {
        const int r = parse_size(parts[1], 0, 30, spec);
        for (int i = 0; i < r; ++i) edges.push_back({0, 0});
        return Graph::with_vertex_count(1, std::move(edges));
    }
    if (name == "theta" && parts.size() == 4) {
        // two hub vertices 1 and 2; each path contributes length-1 inner vertices
        const int a = parse_size(parts[1], 1, 64, spec);
        const int b = parse_size(parts[2], 1, 64, spec);
        const int c = parse_size(parts[3], 1, 64, spec);
        int next = 2;
        auto add_path = [&edges, &next](int len) {
            int prev = 0;
            for (int s = 1; s < len; ++s) {
                edges.push_back({prev, next});
                prev = next++;
            }
            edges.push_back({prev, 1});
        };
        add_path(a);
        add_path(b);
        add_path(c);
        return Graph::with_vertex_count(next, std::move(edges));
    }
    throw std::invalid_argument("generate_family: unknown spec '" + spec + "'");
}

} // namespace nzpoly
