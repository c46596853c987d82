#include "nzpoly/polytope.hpp"

#include "nzpoly/errors.hpp"
#include "nzpoly/kernels.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace nzpoly {

namespace {

constexpr std::int64_t kCandidateBudget = 100'000'000;

void check_budget(std::int64_t side, int dim) {
    double total = 1.0;
    for (int i = 0; i < dim; ++i) {
        total *= static_cast<double>(side);
        if (total > static_cast<double>(kCandidateBudget)) {
            throw GuardExceeded("lattice enumeration over a " + std::to_string(side) + "^" +
                                std::to_string(dim) + " grid exceeds the candidate budget");
        }
    }
}

using Row = std::pair<std::vector<std::int64_t>, std::int64_t>;

void append_box_rows(HPolytope& p, std::int64_t lo, std::int64_t hi) {
    for (int i = 0; i < p.dim; ++i) {
        std::vector<std::int64_t> a(p.dim, 0);
        a[i] = 1;
        p.rows.emplace_back(a, hi);
        for (auto& v : a) v = -v;
        p.rows.emplace_back(std::move(a), -lo);
    }
}

bool zero_vector(std::span<const std::int64_t> a) {
    return std::all_of(a.begin(), a.end(), [](std::int64_t v) { return v == 0; });
}

// H_{a,b} and H_{-a,-b} are the same hyperplane; fix the sign by the first
// nonzero coordinate.
Hyperplane canonical(std::vector<std::int64_t> a, std::int64_t b) {
    for (std::int64_t v : a) {
        if (v > 0) break;
        if (v < 0) {
            for (auto& w : a) w = -w;
            b = -b;
            break;
        }
    }
    return Hyperplane{std::move(a), b};
}

} // namespace

namespace {

void check_forest_matches(const Graph& g, const SpanningForestData& forest) {
    if (forest.forest_size() + forest.cycle_rank() != g.edge_count()) {
        throw std::invalid_argument("forest data does not belong to this graph");
    }
}

} // namespace

HPolytope flow_polytope(const Graph& g, const SpanningForestData& forest) {
    check_forest_matches(g, forest);
    HPolytope p;
    p.dim = forest.cycle_rank();
    p.box_bound = 1;
    for (int row = 0; row < forest.forest_size(); ++row) {
        std::vector<std::int64_t> a(forest.matrix_c[row].begin(), forest.matrix_c[row].end());
        if (zero_vector(a)) continue; // bridge row
        std::vector<std::int64_t> neg(a.size());
        std::transform(a.begin(), a.end(), neg.begin(), [](std::int64_t v) { return -v; });
        p.rows.emplace_back(neg, 1); // -Cf <= 1
        p.rows.emplace_back(a, 1);   //  Cf <= 1
    }
    append_box_rows(p, -1, 1);
    return p;
}

HPolytope tension_polytope(const Graph& g, const SpanningForestData& forest) {
    check_forest_matches(g, forest);
    HPolytope p;
    p.dim = forest.forest_size();
    p.box_bound = 1;
    for (int col = 0; col < forest.cycle_rank(); ++col) {
        std::vector<std::int64_t> a(forest.forest_size());
        for (int row = 0; row < forest.forest_size(); ++row) a[row] = forest.matrix_c[row][col];
        if (zero_vector(a)) continue; // loop column
        std::vector<std::int64_t> neg(a.size());
        std::transform(a.begin(), a.end(), neg.begin(), [](std::int64_t v) { return -v; });
        p.rows.emplace_back(a, 1);   //  C^t t <= 1
        p.rows.emplace_back(neg, 1); // -C^t t <= 1
    }
    append_box_rows(p, -1, 1);
    return p;
}

HPolytope unit_cube(int dim) {
    HPolytope p;
    p.dim = dim;
    p.box_bound = 1;
    append_box_rows(p, 0, 1);
    return p;
}

HPolytope symmetric_cube(int dim) {
    HPolytope p;
    p.dim = dim;
    p.box_bound = 1;
    append_box_rows(p, -1, 1);
    return p;
}

HPolytope cross_polytope(int dim) {
    if (dim > 20) throw std::invalid_argument("cross_polytope: dimension too large");
    HPolytope p;
    p.dim = dim;
    p.box_bound = 1;
    const std::int64_t patterns = std::int64_t{1} << dim;
    for (std::int64_t mask = 0; mask < patterns; ++mask) {
        std::vector<std::int64_t> a(dim);
        for (int i = 0; i < dim; ++i) a[i] = (mask >> i) & 1 ? 1 : -1;
        p.rows.emplace_back(std::move(a), 1);
    }
    if (dim == 0) p.rows.clear();
    return p;
}

std::vector<Hyperplane> iop_arrangement(const Graph& g, const SpanningForestData& forest,
                                        CountKind kind) {
    check_forest_matches(g, forest);
    const bool flow = is_flow_kind(kind);
    const int dim = flow ? forest.cycle_rank() : forest.forest_size();

    // normal vectors: rows of C for flows, rows of -C^t (negated columns) for tensions
    std::vector<std::vector<std::int64_t>> normals;
    if (flow) {
        for (int row = 0; row < forest.forest_size(); ++row) {
            normals.emplace_back(forest.matrix_c[row].begin(), forest.matrix_c[row].end());
        }
    } else {
        for (int col = 0; col < forest.cycle_rank(); ++col) {
            std::vector<std::int64_t> a(dim);
            for (int row = 0; row < dim; ++row) a[row] = -forest.matrix_c[row][col];
            normals.push_back(std::move(a));
        }
    }

    std::set<std::pair<std::vector<std::int64_t>, std::int64_t>> seen;
    auto add = [&seen](const Hyperplane& h) { seen.insert({h.normal, h.offset}); };

    if (is_modular_kind(kind)) {
        // offsets j with H_{a,j} meeting the open unit cube: -neg(a) < j < pos(a)
        for (const auto& a : normals) {
            if (zero_vector(a)) continue;
            std::int64_t pos = 0, neg = 0;
            for (std::int64_t v : a) {
                if (v > 0) pos += v;
                if (v < 0) neg -= v;
            }
            // a.x ranges over the open interval (-neg, pos) on the open cube
            for (std::int64_t j = -neg + 1; j <= pos - 1; ++j) {
                add(canonical(a, j));
            }
        }
    } else {
        for (int i = 0; i < dim; ++i) {
            std::vector<std::int64_t> a(dim, 0);
            a[i] = 1;
            add(Hyperplane{std::move(a), 0});
        }
        for (const auto& a : normals) {
            if (zero_vector(a)) continue;
            add(canonical(a, 0));
        }
    }

    std::vector<Hyperplane> out;
    out.reserve(seen.size());
    for (const auto& [a, b] : seen) out.push_back(Hyperplane{a, b});
    return out;
}

std::int64_t count_lattice_points(const HPolytope& p, std::int64_t k, Region region) {
    if (k < 0 || (k == 0 && region == Region::interior)) {
        throw std::invalid_argument("count_lattice_points: need k >= 0 (>= 1 for interior)");
    }
    GridCountProblem prob;
    prob.dim = p.dim;
    prob.radius = k * p.box_bound;
    prob.strict = (region == Region::interior);
    check_budget(2 * prob.radius + 1, p.dim);
    for (const auto& [a, b] : p.rows) {
        prob.le_rows.emplace_back(a, k * b);
    }
    return kernels::count_grid(prob);
}

ExactPolynomial ehrhart_polynomial(const HPolytope& p) {
    const int d = p.dim;
    std::vector<std::pair<std::int64_t, BigInt>> samples;
    samples.reserve(d + 1);
    for (std::int64_t k = 0; k <= d; ++k) {
        samples.emplace_back(k, BigInt(count_lattice_points(p, k, Region::closed)));
    }
    ExactPolynomial ehr = interpolate(samples);
    const std::int64_t extra = d + 1;
    if (ehr(extra) != Rational(count_lattice_points(p, extra, Region::closed))) {
        throw std::logic_error("ehrhart_polynomial: extra-sample consistency check failed");
    }
    return ehr;
}

bool reflexivity_check(const HPolytope& p, int k_max) {
    if (k_max < 1) throw std::invalid_argument("reflexivity_check: need k_max >= 1");
    // (1) the only interior lattice point is the origin
    if (count_lattice_points(p, 1, Region::interior) != 1) return false;
    for (const auto& [a, b] : p.rows) {
        (void)a;
        if (b <= 0) return false; // origin not strictly inside, so the single
                                  // interior point found above is not 0
    }
    // (2) int((k+1)P) ∩ Z^d = kP ∩ Z^d for k = 1..k_max
    for (std::int64_t k = 1; k <= k_max; ++k) {
        const std::int64_t radius = (k + 1) * p.box_bound;
        check_budget(2 * radius + 1, p.dim);
        GridCountProblem strict_next;
        strict_next.dim = p.dim;
        strict_next.radius = radius;
        strict_next.strict = true;
        for (const auto& [a, b] : p.rows) strict_next.le_rows.emplace_back(a, (k + 1) * b);
        GridCountProblem closed_k;
        closed_k.dim = p.dim;
        closed_k.radius = radius; // same sweep so set equality reduces to counts
        closed_k.strict = false;
        for (const auto& [a, b] : p.rows) closed_k.le_rows.emplace_back(a, k * b);
        // kP ⊆ int((k+1)P) holds automatically when 0 is interior, so set
        // equality is equivalent to equal counts over a common box.
        if (kernels::count_grid(strict_next) != kernels::count_grid(closed_k)) return false;
    }
    return true;
}

bool contains_points(const HPolytope& p, std::span<const std::vector<std::int64_t>> pts) {
    for (const auto& x : pts) {
        if (static_cast<int>(x.size()) != p.dim) {
            throw std::invalid_argument("contains_points: point dimension mismatch");
        }
        for (const auto& [a, b] : p.rows) {
            std::int64_t s = 0;
            for (int j = 0; j < p.dim; ++j) s += a[j] * x[j];
            if (s > b) return false;
        }
    }
    return true;
}

} // namespace nzpoly
