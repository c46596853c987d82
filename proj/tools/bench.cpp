// Times the OpenMP kernels against the serial reference implementations on
// medium-size counting problems and verifies that the counts agree.

#include "nzpoly/counting.hpp"
#include "nzpoly/families.hpp"
#include "nzpoly/kernels.hpp"
#include "nzpoly/polytope.hpp"

#include <chrono>
#include <cstdio>
#include <functional>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using Clock = std::chrono::steady_clock;

double time_ms(const std::function<std::int64_t()>& fn, std::int64_t& result) {
    const auto start = Clock::now();
    result = fn();
    const auto stop = Clock::now();
    return std::chrono::duration<double, std::milli>(stop - start).count();
}

void run_case(const char* name, const std::function<std::int64_t()>& serial,
              const std::function<std::int64_t()>& parallel) {
    std::int64_t serial_count = 0, parallel_count = 0;
    const double serial_ms = time_ms(serial, serial_count);
    const double parallel_ms = time_ms(parallel, parallel_count);
    std::printf("%-34s %12lld %10.1f ms %10.1f ms %6.2fx  %s\n", name,
                static_cast<long long>(serial_count), serial_ms, parallel_ms,
                serial_ms / parallel_ms, serial_count == parallel_count ? "ok" : "MISMATCH");
}

} // namespace

int main() {
    using namespace nzpoly;
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads = %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP not available; both columns run serially\n");
#endif
    std::printf("%-34s %12s %13s %13s %7s\n", "case", "count", "serial", "parallel", "speedup");

    {
        const Graph g = generate_family("complete:6");
        const SpanningForestData f = spanning_forest(g);
        ParamCountProblem p;
        p.k = 26;
        p.free_dim = f.forest_size();
        p.rows.assign(f.cycle_rank(), std::vector<std::int8_t>(f.forest_size(), 0));
        for (int col = 0; col < f.cycle_rank(); ++col) {
            for (int row = 0; row < f.forest_size(); ++row) {
                p.rows[col][row] = static_cast<std::int8_t>(-f.matrix_c[row][col]);
            }
        }
        run_case("modular tensions K6, k=26", [&p] { return reference::count_param_modular(p); },
                 [&p] { return kernels::count_param_modular(p); });
    }
    {
        const Graph g = generate_family("theta:2:2:3");
        const SpanningForestData f = spanning_forest(g);
        ParamCountProblem p;
        p.k = 1000;
        p.free_dim = f.cycle_rank();
        p.rows = f.matrix_c;
        run_case("integral flows theta:2:2:3, k=1000",
                 [&p] { return reference::count_param_integral(p); },
                 [&p] { return kernels::count_param_integral(p); });
    }
    {
        const Graph g = generate_family("complete:5");
        const SpanningForestData f = spanning_forest(g);
        const HPolytope t = tension_polytope(g, f);
        GridCountProblem p;
        p.dim = t.dim;
        p.radius = 40;
        for (const auto& [a, b] : t.rows) p.le_rows.emplace_back(a, 40 * b);
        run_case("lattice points 40*T_K5", [&p] { return reference::count_grid(p); },
                 [&p] { return kernels::count_grid(p); });
    }
    return 0;
}
