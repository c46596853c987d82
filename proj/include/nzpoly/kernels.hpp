#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace nzpoly {

/// Count vectors x over a small product space whose dependent coordinates,
/// obtained by multiplying with a {0,+-1} matrix, stay nowhere zero.
/// Free dimension is rows[i].size() for every row.
struct ParamCountProblem {
    std::vector<std::vector<std::int8_t>> rows; // dependent-coordinate matrix
    int free_dim = 0;
    std::int64_t k = 1;
};

/// Count integer points of [-radius, radius]^dim under a dilated inequality
/// system, optionally punctured by hyperplanes.
struct GridCountProblem {
    int dim = 0;
    std::int64_t radius = 0;
    // a.x <= b rows (b already dilated by the caller); strict switches to <.
    std::vector<std::pair<std::vector<std::int64_t>, std::int64_t>> le_rows;
    bool strict = false;
    // excluded hyperplanes a.x == b (already dilated)
    std::vector<std::pair<std::vector<std::int64_t>, std::int64_t>> ne_rows;
};

/// OpenMP-parallel kernels. The candidate space is flattened to a linear
/// index range and split across threads; results are exactly the serial
/// counts (associative integer reduction). Callers enforce the candidate
/// budget before building a problem.
namespace kernels {

/// Free values 1..k-1 per coordinate; accept when every dependent value is
/// nonzero mod k.
std::int64_t count_param_modular(const ParamCountProblem& p);

/// Free values +-1..+-(k-1); accept when every dependent value s satisfies
/// 1 <= |s| <= k-1.
std::int64_t count_param_integral(const ParamCountProblem& p);

std::int64_t count_grid(const GridCountProblem& p);

} // namespace kernels

/// Serial reference implementations (plain odometer loops, no OpenMP, no
/// index decoding). Kept as the comparison baseline for the parallel
/// kernels; used by tests and the benchmark, not by the library API.
namespace reference {

std::int64_t count_param_modular(const ParamCountProblem& p);
std::int64_t count_param_integral(const ParamCountProblem& p);
std::int64_t count_grid(const GridCountProblem& p);

} // namespace reference

} // namespace nzpoly
