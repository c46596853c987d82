#include "nzpoly/counting.hpp"

#include "nzpoly/errors.hpp"
#include "nzpoly/kernels.hpp"

#include <cmath>
#include <stdexcept>

namespace nzpoly {

std::string to_string(CountKind kind) {
    switch (kind) {
        case CountKind::modular_flow: return "modular_flow";
        case CountKind::modular_tension: return "modular_tension";
        case CountKind::integral_flow: return "integral_flow";
        case CountKind::integral_tension: return "integral_tension";
    }
    throw std::invalid_argument("bad CountKind");
}

CountKind count_kind_from_string(const std::string& s) {
    if (s == "modular_flow") return CountKind::modular_flow;
    if (s == "modular_tension") return CountKind::modular_tension;
    if (s == "integral_flow") return CountKind::integral_flow;
    if (s == "integral_tension") return CountKind::integral_tension;
    throw std::invalid_argument("unknown count kind '" + s + "'");
}

namespace {

constexpr std::int64_t kCandidateBudget = 100'000'000;

void check_budget(std::int64_t base, int dim, const char* what) {
    double total = 1.0;
    for (int i = 0; i < dim; ++i) {
        total *= static_cast<double>(base);
        if (total > static_cast<double>(kCandidateBudget)) {
            throw GuardExceeded(std::string(what) + ": " + std::to_string(base) + "^" +
                                std::to_string(dim) + " candidates exceed the budget");
        }
    }
}

void require_positive_k(std::int64_t k) {
    if (k <= 0) throw std::invalid_argument("counter: need k >= 1");
}

// Dependent-coordinate matrix: rows of C for flow kinds (dependent = forest
// coordinates), rows of -C^t for tension kinds (dependent = non-forest).
ParamCountProblem make_problem(const SpanningForestData& f, bool flow, std::int64_t k) {
    ParamCountProblem p;
    p.k = k;
    if (flow) {
        p.free_dim = f.cycle_rank();
        p.rows = f.matrix_c;
    } else {
        p.free_dim = f.forest_size();
        p.rows.assign(f.cycle_rank(), std::vector<std::int8_t>(f.forest_size(), 0));
        for (int col = 0; col < f.cycle_rank(); ++col) {
            for (int row = 0; row < f.forest_size(); ++row) {
                p.rows[col][row] = static_cast<std::int8_t>(-f.matrix_c[row][col]);
            }
        }
    }
    return p;
}

} // namespace

std::int64_t count_nz_modular_flows(const Graph& g, const SpanningForestData& f, std::int64_t k) {
    require_positive_k(k);
    ParamCountProblem p = make_problem(f, true, k);
    (void)g;
    check_budget(k - 1, p.free_dim, "modular flow count");
    return kernels::count_param_modular(p);
}

std::int64_t count_nz_modular_tensions(const Graph& g, const SpanningForestData& f,
                                       std::int64_t k) {
    require_positive_k(k);
    ParamCountProblem p = make_problem(f, false, k);
    (void)g;
    check_budget(k - 1, p.free_dim, "modular tension count");
    return kernels::count_param_modular(p);
}

std::int64_t count_nz_integral_flows(const Graph& g, const SpanningForestData& f, std::int64_t k) {
    require_positive_k(k);
    ParamCountProblem p = make_problem(f, true, k);
    (void)g;
    check_budget(2 * (k - 1), p.free_dim, "integral flow count");
    return kernels::count_param_integral(p);
}

std::int64_t count_nz_integral_tensions(const Graph& g, const SpanningForestData& f,
                                        std::int64_t k) {
    require_positive_k(k);
    ParamCountProblem p = make_problem(f, false, k);
    (void)g;
    check_budget(2 * (k - 1), p.free_dim, "integral tension count");
    return kernels::count_param_integral(p);
}

std::int64_t count_nz_modular_flows(const Graph& g, std::int64_t k) {
    return count_nz_modular_flows(g, spanning_forest(g), k);
}
std::int64_t count_nz_modular_tensions(const Graph& g, std::int64_t k) {
    return count_nz_modular_tensions(g, spanning_forest(g), k);
}
std::int64_t count_nz_integral_flows(const Graph& g, std::int64_t k) {
    return count_nz_integral_flows(g, spanning_forest(g), k);
}
std::int64_t count_nz_integral_tensions(const Graph& g, std::int64_t k) {
    return count_nz_integral_tensions(g, spanning_forest(g), k);
}

std::int64_t count_by_kind(const Graph& g, const SpanningForestData& f, CountKind kind,
                           std::int64_t k) {
    switch (kind) {
        case CountKind::modular_flow: return count_nz_modular_flows(g, f, k);
        case CountKind::modular_tension: return count_nz_modular_tensions(g, f, k);
        case CountKind::integral_flow: return count_nz_integral_flows(g, f, k);
        case CountKind::integral_tension: return count_nz_integral_tensions(g, f, k);
    }
    throw std::invalid_argument("count_by_kind: bad kind");
}

CountingPolynomial polynomial_of(const Graph& g, const SpanningForestData& f, CountKind kind) {
    const GraphClassification cls = classify(g);
    const bool flow = is_flow_kind(kind);
    if ((flow && cls.has_bridge) || (!flow && cls.has_loop)) {
        return {ExactPolynomial{}, true};
    }
    const int d = flow ? cls.cyclomatic_number : g.vertex_count() - cls.component_count;
    std::vector<std::pair<std::int64_t, BigInt>> samples;
    samples.reserve(d + 1);
    for (std::int64_t k = 1; k <= d + 1; ++k) {
        samples.emplace_back(k, BigInt(count_by_kind(g, f, kind, k)));
    }
    ExactPolynomial poly = interpolate(samples);
    const std::int64_t extra = d + 2;
    if (poly(extra) != Rational(count_by_kind(g, f, kind, extra))) {
        throw std::logic_error("polynomial_of: extra-sample consistency check failed");
    }
    return {std::move(poly), false};
}

CountingPolynomial polynomial_of(const Graph& g, CountKind kind) {
    return polynomial_of(g, spanning_forest(g), kind);
}

std::int64_t count_iop_points(const HPolytope& p, std::span<const Hyperplane> hyperplanes,
                              std::int64_t k) {
    require_positive_k(k);
    GridCountProblem prob;
    prob.dim = p.dim;
    prob.radius = k * p.box_bound;
    prob.strict = true; // interior of k.P
    check_budget(2 * prob.radius + 1, p.dim, "inside-out count");
    for (const auto& [a, b] : p.rows) prob.le_rows.emplace_back(a, k * b);
    for (const Hyperplane& h : hyperplanes) prob.ne_rows.emplace_back(h.normal, k * h.offset);
    return kernels::count_grid(prob);
}

} // namespace nzpoly
