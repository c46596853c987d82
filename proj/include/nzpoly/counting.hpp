#pragma once

#include "nzpoly/graph.hpp"
#include "nzpoly/kinds.hpp"
#include "nzpoly/polynomial.hpp"
#include "nzpoly/polytope.hpp"

#include <cstdint>
#include <span>

namespace nzpoly {

// The four nowhere-zero counters. Each enumerates the free coordinates of
// the forest parameterization and checks the dependent ones, so bridges
// force 0 for the flow kinds and loops force 0 for the tension kinds
// without special-casing. The two-argument forms use the canonical forest.
// All throw std::invalid_argument for k <= 0 and GuardExceeded when the
// candidate space passes 1e8.

std::int64_t count_nz_modular_flows(const Graph& g, std::int64_t k);
std::int64_t count_nz_modular_flows(const Graph& g, const SpanningForestData& f, std::int64_t k);

std::int64_t count_nz_modular_tensions(const Graph& g, std::int64_t k);
std::int64_t count_nz_modular_tensions(const Graph& g, const SpanningForestData& f,
                                       std::int64_t k);

std::int64_t count_nz_integral_flows(const Graph& g, std::int64_t k);
std::int64_t count_nz_integral_flows(const Graph& g, const SpanningForestData& f, std::int64_t k);

std::int64_t count_nz_integral_tensions(const Graph& g, std::int64_t k);
std::int64_t count_nz_integral_tensions(const Graph& g, const SpanningForestData& f,
                                        std::int64_t k);

std::int64_t count_by_kind(const Graph& g, const SpanningForestData& f, CountKind kind,
                           std::int64_t k);

/// A counting polynomial; degenerate marks the forced-zero cases (bridge
/// for flow kinds, loop for tension kinds), where the zero polynomial is
/// returned instead of an interpolation.
struct CountingPolynomial {
    ExactPolynomial poly;
    bool degenerate = false;
};

/// Interpolates the matching counter at k = 1..d+1 (d = cyclomatic number
/// for flows, |V|-c for tensions) and checks one extra sample.
CountingPolynomial polynomial_of(const Graph& g, CountKind kind);
CountingPolynomial polynomial_of(const Graph& g, const SpanningForestData& f, CountKind kind);

/// Inside-out Ehrhart count: lattice points strictly inside k.P avoiding
/// every dilated hyperplane (a.x != k b).
std::int64_t count_iop_points(const HPolytope& p, std::span<const Hyperplane> hyperplanes,
                              std::int64_t k);

} // namespace nzpoly
