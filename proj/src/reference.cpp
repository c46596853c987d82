#include "nzpoly/kernels.hpp"

#include <vector>

// Straight odometer loops over the same candidate spaces as the parallel
// kernels. Deliberately written without index arithmetic so the two paths
// share no enumeration code.

namespace nzpoly::reference {

namespace {

bool rows_nowhere_zero_mod(const ParamCountProblem& p, const std::vector<std::int64_t>& x) {
    for (const auto& row : p.rows) {
        std::int64_t s = 0;
        for (std::size_t j = 0; j < x.size(); ++j) s += row[j] * x[j];
        if (s % p.k == 0) return false;
    }
    return true;
}

bool rows_nowhere_zero_boxed(const ParamCountProblem& p, const std::vector<std::int64_t>& x) {
    for (const auto& row : p.rows) {
        std::int64_t s = 0;
        for (std::size_t j = 0; j < x.size(); ++j) s += row[j] * x[j];
        if (s == 0 || s > p.k - 1 || s < -(p.k - 1)) return false;
    }
    return true;
}

} // namespace

std::int64_t count_param_modular(const ParamCountProblem& p) {
    if (p.free_dim == 0) return p.rows.empty() ? 1 : 0;
    if (p.k < 2) return 0;
    std::vector<std::int64_t> x(p.free_dim, 1);
    std::int64_t count = 0;
    while (true) {
        if (rows_nowhere_zero_mod(p, x)) ++count;
        int j = 0;
        while (j < p.free_dim && ++x[j] == p.k) {
            x[j] = 1;
            ++j;
        }
        if (j == p.free_dim) break;
    }
    return count;
}

std::int64_t count_param_integral(const ParamCountProblem& p) {
    if (p.free_dim == 0) return p.rows.empty() ? 1 : 0;
    if (p.k < 2) return 0;
    // per-coordinate value order: -(k-1), ..., -1, 1, ..., k-1
    auto next_value = [&p](std::int64_t v) -> std::int64_t {
        if (v == -1) return 1;
        return v + 1; // one past k-1 signals wrap to caller
    };
    std::vector<std::int64_t> x(p.free_dim, -(p.k - 1));
    std::int64_t count = 0;
    while (true) {
        if (rows_nowhere_zero_boxed(p, x)) ++count;
        int j = 0;
        while (j < p.free_dim) {
            x[j] = next_value(x[j]);
            if (x[j] <= p.k - 1) break;
            x[j] = -(p.k - 1);
            ++j;
        }
        if (j == p.free_dim) break;
    }
    return count;
}

std::int64_t count_grid(const GridCountProblem& p) {
    auto accepts = [&p](const std::vector<std::int64_t>& x) {
        for (const auto& [a, b] : p.le_rows) {
            std::int64_t s = 0;
            for (int j = 0; j < p.dim; ++j) s += a[j] * x[j];
            if (p.strict ? !(s < b) : !(s <= b)) return false;
        }
        for (const auto& [a, b] : p.ne_rows) {
            std::int64_t s = 0;
            for (int j = 0; j < p.dim; ++j) s += a[j] * x[j];
            if (s == b) return false;
        }
        return true;
    };
    if (p.dim == 0) {
        return accepts({}) ? 1 : 0;
    }
    std::vector<std::int64_t> x(p.dim, -p.radius);
    std::int64_t count = 0;
    while (true) {
        if (accepts(x)) ++count;
        int j = 0;
        while (j < p.dim && ++x[j] > p.radius) {
            x[j] = -p.radius;
            ++j;
        }
        if (j == p.dim) break;
    }
    return count;
}

} // namespace nzpoly::reference
