#pragma once

#include "nzpoly/graph.hpp"

#include <string>
#include <vector>

namespace nzpoly {

struct CorpusEntry {
    std::string id; // "v{n}-m{edge bitmask}", stable across runs
    Graph graph;
};

/// Every connected simple graph on exactly n labeled vertices for
/// n = 1..max_vertices with at most max_edges edges, each edge oriented from
/// the smaller to the larger endpoint. Distinct edge sets only (no
/// isomorphism reduction), in deterministic (n, bitmask) order.
std::vector<CorpusEntry> corpus_graphs(int max_vertices, int max_edges);

} // namespace nzpoly
