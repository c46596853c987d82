#pragma once

#include "nzpoly/graph.hpp"
#include "nzpoly/kinds.hpp"
#include "nzpoly/polynomial.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace nzpoly {

/// Affine hyperplane {x : a.x = b} with integral data; a != 0.
struct Hyperplane {
    std::vector<std::int64_t> normal;
    std::int64_t offset = 0;
    bool operator==(const Hyperplane&) const = default;
};

/// Bounded rational polyhedron a.x <= b in H-representation with exact
/// integer data; box_bound B certifies P inside [-B, B]^dim.
struct HPolytope {
    int dim = 0;
    std::vector<std::pair<std::vector<std::int64_t>, std::int64_t>> rows;
    std::int64_t box_bound = 1;
};

/// F_G = {f in R^{E\T} : -1 <= -Cf <= 1, -1 <= f <= 1}. Identically-zero
/// rows of C (bridges) contribute no constraint.
HPolytope flow_polytope(const Graph& g, const SpanningForestData& forest);

/// T_G = {t in R^T : -1 <= C^t t <= 1, -1 <= t <= 1}. Identically-zero
/// columns of C (loops) contribute no constraint; the graph is then
/// degenerate for tension counting and theorem checks are skipped upstream.
HPolytope tension_polytope(const Graph& g, const SpanningForestData& forest);

HPolytope unit_cube(int dim);      // [0,1]^dim, ambient cube of the modular counts
HPolytope symmetric_cube(int dim); // [-1,1]^dim
HPolytope cross_polytope(int dim); // all |x_1| + ... + |x_dim| <= 1

/// The inside-out hyperplane set for the given count kind: lattice
/// translates of the C rows meeting the open unit cube (modular kinds), or
/// coordinate hyperplanes plus Cf = 0 / C^t t = 0 rows (integral kinds).
/// Hyperplanes are sign-canonicalized, deduplicated and sorted.
std::vector<Hyperplane> iop_arrangement(const Graph& g, const SpanningForestData& forest,
                                        CountKind kind);

enum class Region { closed, interior };

/// |Z^dim ∩ k.P| (closed) or |Z^dim ∩ int(k.P)| (interior), by box
/// enumeration. k = 0 requires region == closed.
std::int64_t count_lattice_points(const HPolytope& p, std::int64_t k, Region region);

/// Interpolates closed counts at k = 0..dim and checks one extra sample.
ExactPolynomial ehrhart_polynomial(const HPolytope& p);

/// Exact check of the two reflexivity conditions, the second verified for
/// dilates 1..k_max; requires P full-dimensional.
bool reflexivity_check(const HPolytope& p, int k_max);

/// True iff every point satisfies every row of P.
bool contains_points(const HPolytope& p, std::span<const std::vector<std::int64_t>> pts);

} // namespace nzpoly
