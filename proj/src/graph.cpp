#include "nzpoly/graph.hpp"

#include "nzpoly/errors.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace nzpoly {

namespace {

bool all_digits(const std::string& s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
        return std::isdigit(c);
    });
}

// Numeric labels sort by value (via length-then-lex on the digit string,
// after stripping nothing: we require canonical decimals from callers),
// and before non-numeric labels; everything else is lexicographic.
bool label_less(const std::string& a, const std::string& b) {
    const bool na = all_digits(a), nb = all_digits(b);
    if (na != nb) return na;
    if (na && nb) {
        if (a.size() != b.size()) return a.size() < b.size();
    }
    return a < b;
}

bool valid_token(const std::string& s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
        return std::isalnum(c) || c == '_';
    });
}

} // namespace

Graph::Graph(std::vector<std::string> labels, std::vector<Edge> edges)
    : labels_(std::move(labels)), edges_(std::move(edges)) {
    if (labels_.empty()) {
        throw std::invalid_argument("Graph: need at least one vertex");
    }
    for (const Edge& e : edges_) {
        if (e.tail < 0 || e.tail >= vertex_count() || e.head < 0 || e.head >= vertex_count()) {
            throw std::invalid_argument("Graph: edge endpoint out of range");
        }
    }
}

Graph Graph::with_vertex_count(int n, std::vector<Edge> edges) {
    std::vector<std::string> labels;
    labels.reserve(n);
    for (int v = 1; v <= n; ++v) labels.push_back(std::to_string(v));
    return Graph(std::move(labels), std::move(edges));
}

std::vector<int> Graph::incidence_column(int e) const {
    std::vector<int> col(vertex_count(), 0);
    if (!is_loop(e)) {
        col[edges_[e].head] += 1;
        col[edges_[e].tail] -= 1;
    }
    return col;
}

Graph Graph::with_edge_reversed(int e) const {
    std::vector<Edge> edges = edges_;
    std::swap(edges[e].tail, edges[e].head);
    return Graph(labels_, std::move(edges));
}

Graph parse_edge_list(std::string_view text) {
    std::vector<std::pair<std::string, std::string>> raw_edges;
    int lineno = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        std::string line(text.substr(pos, nl == std::string_view::npos ? nl : nl - pos));
        pos = (nl == std::string_view::npos) ? text.size() + 1 : nl + 1;
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        std::istringstream is(line);
        std::string a, b, extra;
        if (!(is >> a)) continue; // blank or comment-only line
        if (!(is >> b) || (is >> extra)) {
            throw ParseError(lineno, "expected exactly two vertex ids");
        }
        if (!valid_token(a) || !valid_token(b)) {
            throw ParseError(lineno, "vertex id must be alphanumeric");
        }
        raw_edges.emplace_back(std::move(a), std::move(b));
    }
    if (raw_edges.empty()) {
        throw ParseError(lineno, "no edges in input");
    }
    std::vector<std::string> labels;
    for (const auto& [a, b] : raw_edges) {
        labels.push_back(a);
        labels.push_back(b);
    }
    std::sort(labels.begin(), labels.end(), label_less);
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    std::map<std::string, int> index;
    for (int v = 0; v < static_cast<int>(labels.size()); ++v) index[labels[v]] = v;
    std::vector<Edge> edges;
    edges.reserve(raw_edges.size());
    for (const auto& [a, b] : raw_edges) {
        edges.push_back({index[a], index[b]});
    }
    return Graph(std::move(labels), std::move(edges));
}

namespace {

struct DfsResult {
    std::vector<int> forest;       // forest edge indices in discovery order
    std::vector<int> parent_edge;  // per vertex, forest edge to parent (-1 at roots)
    std::vector<int> parent;       // per vertex (-1 at roots)
    std::vector<int> depth;        // per vertex
    std::vector<int> component;    // per vertex
};

// Iterative DFS matching the recursive order: from each unvisited vertex in
// canonical order, explore incident non-loop edges by ascending priority.
DfsResult dfs_forest(const Graph& g, std::span<const int> priority) {
    const int n = g.vertex_count();
    std::vector<std::vector<std::pair<int, int>>> adj(n); // (edge, other endpoint)
    for (int e = 0; e < g.edge_count(); ++e) {
        if (g.is_loop(e)) continue;
        adj[g.edge(e).tail].emplace_back(e, g.edge(e).head);
        adj[g.edge(e).head].emplace_back(e, g.edge(e).tail);
    }
    for (auto& list : adj) {
        std::stable_sort(list.begin(), list.end(), [&](const auto& x, const auto& y) {
            return priority[x.first] < priority[y.first];
        });
    }

    DfsResult r;
    r.parent_edge.assign(n, -1);
    r.parent.assign(n, -1);
    r.depth.assign(n, 0);
    r.component.assign(n, -1);
    int comp = 0;
    std::vector<std::size_t> cursor(n, 0);
    for (int root = 0; root < n; ++root) {
        if (r.component[root] >= 0) continue;
        r.component[root] = comp;
        std::vector<int> stack{root};
        while (!stack.empty()) {
            int u = stack.back();
            bool advanced = false;
            while (cursor[u] < adj[u].size()) {
                auto [e, w] = adj[u][cursor[u]++];
                if (r.component[w] >= 0) continue;
                r.component[w] = comp;
                r.parent[w] = u;
                r.parent_edge[w] = e;
                r.depth[w] = r.depth[u] + 1;
                r.forest.push_back(e);
                stack.push_back(w);
                advanced = true;
                break;
            }
            if (!advanced) stack.pop_back();
        }
        ++comp;
    }
    return r;
}

} // namespace

GraphClassification classify(const Graph& g) {
    GraphClassification c;
    std::vector<int> comp = component_labels(g);
    c.component_count = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
    c.cyclomatic_number = g.edge_count() - g.vertex_count() + c.component_count;
    for (int e = 0; e < g.edge_count(); ++e) {
        if (g.is_loop(e)) c.has_loop = true;
    }
    // A non-loop edge is a bridge iff it lies on no cycle, i.e. iff its row in
    // the forest matrix C is identically zero.
    SpanningForestData f = spanning_forest(g);
    for (int row = 0; row < f.forest_size(); ++row) {
        bool zero = std::all_of(f.matrix_c[row].begin(), f.matrix_c[row].end(),
                                [](std::int8_t v) { return v == 0; });
        if (zero) {
            c.has_bridge = true;
            break;
        }
    }
    return c;
}

std::vector<int> component_labels(const Graph& g) {
    std::vector<int> priority(g.edge_count());
    std::iota(priority.begin(), priority.end(), 0);
    return dfs_forest(g, priority).component;
}

std::vector<Graph> split_components(const Graph& g) {
    std::vector<int> comp = component_labels(g);
    int count = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
    std::vector<Graph> out;
    for (int c = 0; c < count; ++c) {
        std::vector<std::string> labels;
        std::vector<int> remap(g.vertex_count(), -1);
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (comp[v] == c) {
                remap[v] = static_cast<int>(labels.size());
                labels.push_back(g.label(v));
            }
        }
        std::vector<Edge> edges;
        for (const Edge& e : g.edges()) {
            if (comp[e.tail] == c) {
                edges.push_back({remap[e.tail], remap[e.head]});
            }
        }
        out.emplace_back(std::move(labels), std::move(edges));
    }
    return out;
}

SpanningForestData spanning_forest(const Graph& g) {
    std::vector<int> priority(g.edge_count());
    std::iota(priority.begin(), priority.end(), 0);
    return spanning_forest(g, priority);
}

SpanningForestData spanning_forest(const Graph& g, std::span<const int> edge_priority) {
    if (static_cast<int>(edge_priority.size()) != g.edge_count()) {
        throw std::invalid_argument("spanning_forest: priority size mismatch");
    }
    DfsResult dfs = dfs_forest(g, edge_priority);

    SpanningForestData out;
    out.forest_edges = dfs.forest;
    std::sort(out.forest_edges.begin(), out.forest_edges.end());
    std::vector<char> in_forest(g.edge_count(), 0);
    for (int e : out.forest_edges) in_forest[e] = 1;
    for (int e = 0; e < g.edge_count(); ++e) {
        if (!in_forest[e]) out.non_forest_edges.push_back(e);
    }

    std::vector<int> forest_row(g.edge_count(), -1);
    for (int row = 0; row < out.forest_size(); ++row) forest_row[out.forest_edges[row]] = row;

    out.matrix_c.assign(out.forest_size(), std::vector<std::int8_t>(out.cycle_rank(), 0));
    out.sign_vectors.reserve(out.cycle_rank());
    for (int col = 0; col < out.cycle_rank(); ++col) {
        const int e = out.non_forest_edges[col];
        std::vector<std::int8_t> sig(g.edge_count(), 0);
        sig[e] = 1; // the cycle traverses e along its own orientation
        if (!g.is_loop(e)) {
            // Walk both endpoints up to their LCA; the fundamental path runs
            // from head(e) to tail(e).
            int a = g.edge(e).head;
            int b = g.edge(e).tail;
            while (dfs.depth[a] > dfs.depth[b]) {
                // traversal a -> parent(a)
                const int fe = dfs.parent_edge[a];
                sig[fe] = (g.edge(fe).tail == a) ? 1 : -1;
                a = dfs.parent[a];
            }
            std::vector<int> tail_side; // collected deep-to-shallow
            while (dfs.depth[b] > dfs.depth[a]) {
                tail_side.push_back(b);
                b = dfs.parent[b];
            }
            while (a != b) {
                const int fe = dfs.parent_edge[a];
                sig[fe] = (g.edge(fe).tail == a) ? 1 : -1;
                a = dfs.parent[a];
                tail_side.push_back(b);
                b = dfs.parent[b];
            }
            // tail side is traversed parent -> child
            for (auto it = tail_side.rbegin(); it != tail_side.rend(); ++it) {
                const int fe = dfs.parent_edge[*it];
                sig[fe] = (g.edge(fe).head == *it) ? 1 : -1;
            }
        }
        for (int row = 0; row < out.forest_size(); ++row) {
            out.matrix_c[row][col] = sig[out.forest_edges[row]];
        }
        out.sign_vectors.push_back(std::move(sig));
    }
    return out;
}

} // namespace nzpoly
