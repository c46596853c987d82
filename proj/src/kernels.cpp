#include "nzpoly/kernels.hpp"

#include <cassert>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace nzpoly::kernels {

namespace {

constexpr int kMaxDim = 40;

std::int64_t checked_total(std::int64_t base, int dim) {
    std::int64_t total = 1;
    for (int i = 0; i < dim; ++i) {
        if (base != 0 && total > (std::int64_t{1} << 62) / base) {
            throw std::overflow_error("kernel candidate space exceeds int64");
        }
        total *= base;
    }
    return total;
}

// Splits the flattened candidate space into one contiguous block per thread;
// each block decodes its first candidate and then advances an odometer, so
// the per-candidate cost matches the serial loop and the total is an
// associative sum of block counts.
template <typename ValueOf, typename Accept>
std::int64_t block_count(std::int64_t total, int dim, std::int64_t base, ValueOf value_of,
                         Accept accept) {
    assert(dim <= kMaxDim);
    if (total <= 0) return 0;
    std::int64_t count = 0;
#pragma omp parallel reduction(+ : count) if (total > 4096)
    {
#ifdef _OPENMP
        const int tid = omp_get_thread_num();
        const int threads = omp_get_num_threads();
#else
        const int tid = 0;
        const int threads = 1;
#endif
        const std::int64_t chunk = total / threads;
        const std::int64_t extra = total % threads;
        const std::int64_t begin = chunk * tid + (tid < extra ? tid : extra);
        const std::int64_t end = begin + chunk + (tid < extra ? 1 : 0);

        std::int64_t digits[kMaxDim];
        std::int64_t values[kMaxDim];
        std::int64_t rem = begin;
        for (int j = 0; j < dim; ++j) {
            digits[j] = rem % base;
            rem /= base;
            values[j] = value_of(digits[j]);
        }
        for (std::int64_t i = begin; i < end; ++i) {
            if (accept(values)) ++count;
            int j = 0;
            while (j < dim && ++digits[j] == base) {
                digits[j] = 0;
                values[j] = value_of(0);
                ++j;
            }
            if (j < dim) values[j] = value_of(digits[j]);
        }
    }
    return count;
}

} // namespace

std::int64_t count_param_modular(const ParamCountProblem& p) {
    const std::int64_t k = p.k;
    if (p.free_dim == 0) {
        return p.rows.empty() ? 1 : 0; // dependent coordinates are all zero
    }
    const std::int64_t base = k - 1;
    const std::int64_t total = checked_total(base, p.free_dim);
    const int m = p.free_dim;
    return block_count(
        total, m, base, [](std::int64_t digit) { return digit + 1; },
        [&p, m, k](const std::int64_t* x) {
            for (const auto& row : p.rows) {
                std::int64_t s = 0;
                for (int j = 0; j < m; ++j) s += row[j] * x[j];
                if (s % k == 0) return false;
            }
            return true;
        });
}

std::int64_t count_param_integral(const ParamCountProblem& p) {
    const std::int64_t k = p.k;
    if (p.free_dim == 0) {
        return p.rows.empty() ? 1 : 0;
    }
    const std::int64_t half = k - 1;
    const std::int64_t base = 2 * half; // values 1..k-1 then -1..-(k-1)
    const std::int64_t total = checked_total(base, p.free_dim);
    const int m = p.free_dim;
    return block_count(
        total, m, base,
        [half](std::int64_t digit) { return digit < half ? digit + 1 : -(digit - half + 1); },
        [&p, m, half](const std::int64_t* x) {
            for (const auto& row : p.rows) {
                std::int64_t s = 0;
                for (int j = 0; j < m; ++j) s += row[j] * x[j];
                if (s == 0 || s > half || s < -half) return false;
            }
            return true;
        });
}

std::int64_t count_grid(const GridCountProblem& p) {
    if (p.dim == 0) {
        // the single point of R^0 is the origin; every row reads a.x = 0
        for (const auto& [a, b] : p.le_rows) {
            (void)a;
            if (p.strict ? !(0 < b) : !(0 <= b)) return 0;
        }
        for (const auto& [a, b] : p.ne_rows) {
            (void)a;
            if (b == 0) return 0;
        }
        return 1;
    }
    const std::int64_t side = 2 * p.radius + 1;
    const std::int64_t total = checked_total(side, p.dim);
    const int n = p.dim;
    const std::int64_t radius = p.radius;
    return block_count(
        total, n, side, [radius](std::int64_t digit) { return digit - radius; },
        [&p, n](const std::int64_t* x) {
            for (const auto& [a, b] : p.le_rows) {
                std::int64_t s = 0;
                for (int j = 0; j < n; ++j) s += a[j] * x[j];
                if (p.strict ? !(s < b) : !(s <= b)) return false;
            }
            for (const auto& [a, b] : p.ne_rows) {
                std::int64_t s = 0;
                for (int j = 0; j < n; ++j) s += a[j] * x[j];
                if (s == b) return false;
            }
            return true;
        });
}

} // namespace nzpoly::kernels
