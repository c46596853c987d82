#pragma once

#include "nzpoly/graph.hpp"

#include <string>

namespace nzpoly {

/// Deterministic graph families, keyed by a small spec string:
///   complete:n   K_n, edges in lexicographic order, oriented low -> high
///   cycle:n      directed n-cycle (cycle:1 is a single loop)
///   path:n       directed path on n vertices (path:1 is a single vertex)
///   star:n       edges center -> leaf, center is vertex 1
///   bouquet:r    one vertex with r loops
///   theta:a:b:c  two vertices joined by three directed paths of a, b, c edges
///   file:PATH    edge-list file parsed with parse_edge_list
/// Throws std::invalid_argument for unknown specs or out-of-range sizes.
Graph generate_family(const std::string& spec);

} // namespace nzpoly
