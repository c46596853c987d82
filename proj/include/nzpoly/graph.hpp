#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace nzpoly {

/// Directed edge between vertex indices; tail == head is a loop.
struct Edge {
    int tail = 0;
    int head = 0;
    bool operator==(const Edge&) const = default;
};

/// Directed multigraph with a canonical, stable edge order (input order) and
/// a canonical vertex order (numeric-aware label order). Immutable.
class Graph {
public:
    /// Labels must be distinct and already in canonical order; edges index
    /// into them. Throws std::invalid_argument on dangling endpoints.
    Graph(std::vector<std::string> labels, std::vector<Edge> edges);

    /// Vertices "1".."n".
    static Graph with_vertex_count(int n, std::vector<Edge> edges);

    int vertex_count() const { return static_cast<int>(labels_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int e) const { return edges_[e]; }
    const std::string& label(int v) const { return labels_[v]; }
    const std::vector<std::string>& labels() const { return labels_; }
    bool is_loop(int e) const { return edges_[e].tail == edges_[e].head; }

    /// Column of the vertex-edge incidence matrix: +1 at head, -1 at tail,
    /// all zero for loops.
    std::vector<int> incidence_column(int e) const;

    Graph with_edge_reversed(int e) const;

private:
    std::vector<std::string> labels_;
    std::vector<Edge> edges_;
};

/// Edge-list text: one "tail head" pair per line, '#' starts a comment,
/// blank lines ignored. Vertex set is the union of endpoints.
Graph parse_edge_list(std::string_view text);

struct GraphClassification {
    int component_count = 0;
    int cyclomatic_number = 0; // |E| - |V| + c
    bool has_bridge = false;
    bool has_loop = false;
};

GraphClassification classify(const Graph& g);

/// Component id (0-based, in order of smallest contained vertex) per vertex.
std::vector<int> component_labels(const Graph& g);

/// Vertex-induced component subgraphs, preserving labels and edge order.
std::vector<Graph> split_components(const Graph& g);

/// A spanning forest together with the fundamental-cycle data that
/// parameterizes flows (by non-forest values) and tensions (by forest values).
struct SpanningForestData {
    std::vector<int> forest_edges;     // ascending edge indices, |V| - c of them
    std::vector<int> non_forest_edges; // ascending, r of them

    /// Fundamental-cycle sign vector per non-forest edge (same order as
    /// non_forest_edges), length |E|, entries {0,+-1}, +1 at the edge itself.
    std::vector<std::vector<std::int8_t>> sign_vectors;

    /// |T| x |E\T| matrix with entries {0,+-1}: column for non-forest edge e
    /// is sign_vectors[e] restricted to forest_edges. Any flow satisfies
    /// f|_T = C f|_{E\T}; any tension satisfies t|_{E\T} = -C^t t|_T.
    std::vector<std::vector<std::int8_t>> matrix_c;

    int forest_size() const { return static_cast<int>(forest_edges.size()); }
    int cycle_rank() const { return static_cast<int>(non_forest_edges.size()); }
};

/// Canonical forest: depth-first search from the smallest vertex of each
/// component, exploring incident edges in input order. Deterministic.
SpanningForestData spanning_forest(const Graph& g);

/// Same construction but edges are explored by ascending priority[e];
/// lets tests exercise forest-choice invariance. priority must be a
/// permutation-free ranking of all edges (any strict total order works).
SpanningForestData spanning_forest(const Graph& g, std::span<const int> edge_priority);

} // namespace nzpoly
