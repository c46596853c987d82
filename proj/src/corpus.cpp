#include "nzpoly/corpus.hpp"

#include <numeric>
#include <stdexcept>

namespace nzpoly {

namespace {

bool connected_spanning(int n, const std::vector<Edge>& edges) {
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&parent](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    int comps = n;
    for (const Edge& e : edges) {
        int a = find(e.tail), b = find(e.head);
        if (a != b) {
            parent[a] = b;
            --comps;
        }
    }
    return comps == 1;
}

} // namespace

std::vector<CorpusEntry> corpus_graphs(int max_vertices, int max_edges) {
    if (max_vertices < 1 || max_vertices > 7) {
        throw std::invalid_argument("corpus_graphs: max_vertices must be in 1..7");
    }
    if (max_edges < 0) {
        throw std::invalid_argument("corpus_graphs: negative max_edges");
    }
    std::vector<CorpusEntry> out;
    for (int n = 1; n <= max_vertices; ++n) {
        std::vector<Edge> slots;
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) slots.push_back({i, j});
        }
        const std::uint64_t masks = std::uint64_t{1} << slots.size();
        for (std::uint64_t mask = 0; mask < masks; ++mask) {
            if (std::popcount(mask) > max_edges) continue;
            std::vector<Edge> edges;
            for (std::size_t s = 0; s < slots.size(); ++s) {
                if (mask >> s & 1) edges.push_back(slots[s]);
            }
            if (!connected_spanning(n, edges)) continue;
            out.push_back({"v" + std::to_string(n) + "-m" + std::to_string(mask),
                           Graph::with_vertex_count(n, std::move(edges))});
        }
    }
    return out;
}

} // namespace nzpoly
