#include "nzpoly/counting.hpp"

#include "nzpoly/errors.hpp"
#include "nzpoly/families.hpp"
#include "nzpoly/tutte.hpp"
#include "oracles.hpp"

#include "doctest.h"

#include <numeric>
#include <random>

using namespace nzpoly;

namespace {

ExactPolynomial from_ints(std::initializer_list<long> coeffs) {
    std::vector<Rational> v;
    for (long c : coeffs) v.emplace_back(c);
    return ExactPolynomial(std::move(v));
}

} // namespace

TEST_CASE("modular flow examples") {
    CHECK(count_nz_modular_flows(generate_family("cycle:3"), 3) == 2);
    CHECK(count_nz_modular_flows(generate_family("complete:4"), 4) == 6);
    for (std::int64_t k = 1; k <= 5; ++k) {
        CHECK(count_nz_modular_flows(generate_family("path:4"), k) == 0);
    }
    CHECK_THROWS_AS(count_nz_modular_flows(generate_family("cycle:3"), 0),
                    std::invalid_argument);
}

TEST_CASE("modular tension examples") {
    const Graph k3 = generate_family("complete:3");
    CHECK(count_nz_modular_tensions(k3, 3) == 2);
    CHECK(count_nz_modular_tensions(k3, 4) == 6);
    for (std::int64_t k = 1; k <= 5; ++k) {
        CHECK(count_nz_modular_tensions(generate_family("bouquet:1"), k) == 0);
    }
}

TEST_CASE("integral flow examples") {
    CHECK(count_nz_integral_flows(generate_family("cycle:3"), 3) == 4);
    CHECK(count_nz_integral_flows(generate_family("cycle:3"), 1) == 0);
    CHECK(count_nz_integral_flows(generate_family("bouquet:2"), 2) == 4);
}

TEST_CASE("integral tension examples") {
    const Graph k3 = generate_family("complete:3");
    CHECK(count_nz_integral_tensions(k3, 3) == 6);
    CHECK(count_nz_integral_tensions(k3, 2) == 0);
    CHECK(count_nz_integral_tensions(generate_family("path:2"), 3) == 4);
}

TEST_CASE("fitted polynomials") {
    CHECK(polynomial_of(generate_family("cycle:3"), CountKind::modular_flow).poly ==
          from_ints({-1, 1}));
    CHECK(polynomial_of(generate_family("path:3"), CountKind::modular_tension).poly ==
          from_ints({1, -2, 1}));
    CHECK(polynomial_of(generate_family("bouquet:2"), CountKind::integral_flow).poly ==
          from_ints({4, -8, 4}));

    const CountingPolynomial degenerate_flow =
        polynomial_of(generate_family("path:3"), CountKind::integral_flow);
    CHECK(degenerate_flow.degenerate);
    CHECK(degenerate_flow.poly.is_zero());
    const CountingPolynomial degenerate_tension =
        polynomial_of(generate_family("bouquet:2"), CountKind::modular_tension);
    CHECK(degenerate_tension.degenerate);
    CHECK(degenerate_tension.poly.is_zero());
}

TEST_CASE("tutte polynomial examples") {
    const TuttePolynomial c3 = tutte_polynomial(generate_family("cycle:3"));
    std::map<std::pair<int, int>, BigInt> expected{{{2, 0}, 1}, {{1, 0}, 1}, {{0, 1}, 1}};
    CHECK(c3.coefficients == expected);

    const TuttePolynomial bridge = tutte_polynomial(generate_family("path:2"));
    CHECK(bridge.coefficients == std::map<std::pair<int, int>, BigInt>{{{1, 0}, 1}});

    const TuttePolynomial loop = tutte_polynomial(generate_family("bouquet:1"));
    CHECK(loop.coefficients == std::map<std::pair<int, int>, BigInt>{{{0, 1}, 1}});

    // T(1,1) counts maximal spanning forests
    CHECK(tutte_polynomial(generate_family("complete:4")).evaluate(1, 1) == 16);
    CHECK(tutte_polynomial(generate_family("theta:1:2:2")).evaluate(1, 1) == 8);

    for (const auto& [powers, c] : tutte_polynomial(generate_family("complete:5")).coefficients) {
        (void)powers;
        CHECK(c > 0);
    }
    CHECK_THROWS_AS(tutte_polynomial(generate_family("complete:7")), GuardExceeded);
}

TEST_CASE("modular polynomials from tutte") {
    const ModularPolynomials c3 = modular_polys_from_tutte(generate_family("cycle:3"));
    CHECK(c3.mflow == from_ints({-1, 1}));
    CHECK(c3.mtension == from_ints({2, -3, 1}));
    CHECK(c3.chromatic == from_ints({0, 2, -3, 1}));

    const ModularPolynomials bridge = modular_polys_from_tutte(generate_family("path:2"));
    CHECK(bridge.mflow.is_zero());
    CHECK(bridge.mtension == from_ints({-1, 1}));
    CHECK(bridge.chromatic == from_ints({0, -1, 1}));

    const ModularPolynomials loop = modular_polys_from_tutte(generate_family("bouquet:1"));
    CHECK(loop.mflow == from_ints({-1, 1}));
    CHECK(loop.mtension.is_zero());
}

TEST_CASE("inside-out point counts") {
    SUBCASE("unit square with one diagonal hyperplane") {
        const HPolytope square = unit_cube(2);
        const std::vector<Hyperplane> h{{{1, 1}, 1}};
        CHECK(count_iop_points(square, h, 4) == 6);
    }
    SUBCASE("open segment") {
        CHECK(count_iop_points(unit_cube(1), {}, 5) == 4);
    }
    SUBCASE("symmetric segment punctured at zero") {
        const std::vector<Hyperplane> h{{{1}, 0}};
        CHECK(count_iop_points(symmetric_cube(1), h, 3) == 4);
    }
}

namespace {

void check_oracle_triangle(const Graph& g, std::int64_t kmax = 6) {
    const GraphClassification cls = classify(g);
    const SpanningForestData f = spanning_forest(g);
    const HPolytope fp = flow_polytope(g, f);
    const HPolytope tp = tension_polytope(g, f);
    const auto hf = iop_arrangement(g, f, CountKind::integral_flow);
    const auto ht = iop_arrangement(g, f, CountKind::integral_tension);
    const auto ha = iop_arrangement(g, f, CountKind::modular_flow);
    const auto hb = iop_arrangement(g, f, CountKind::modular_tension);
    const ModularPolynomials tutte = modular_polys_from_tutte(g);
    for (std::int64_t k = 1; k <= kmax; ++k) {
        const std::int64_t mf = count_nz_modular_flows(g, f, k);
        const std::int64_t mt = count_nz_modular_tensions(g, f, k);
        // (b) full-space brute force
        CHECK(mf == oracles::modular_flows(g, k));
        CHECK(mt == oracles::modular_tensions(g, k));
        CHECK(count_nz_integral_flows(g, f, k) == oracles::integral_flows(g, k));
        CHECK(count_nz_integral_tensions(g, f, k) == oracles::integral_tensions(g, k));
        // (c) tutte evaluations
        CHECK(Rational(mf) == tutte.mflow(k));
        CHECK(Rational(mt) == tutte.mtension(k));
        // inside-out realizations, valid for the nondegenerate kind only
        // (bridges admit no flows, loops no tensions)
        if (!cls.has_bridge) {
            CHECK(count_nz_integral_flows(g, f, k) == count_iop_points(fp, hf, k));
            CHECK(mf == count_iop_points(unit_cube(f.cycle_rank()), ha, k));
        }
        if (!cls.has_loop) {
            CHECK(count_nz_integral_tensions(g, f, k) == count_iop_points(tp, ht, k));
            CHECK(mt == count_iop_points(unit_cube(f.forest_size()), hb, k));
        }
    }
}

} // namespace

TEST_CASE("oracle triangle on families") {
    for (const char* spec : {"cycle:3", "cycle:4", "complete:4", "theta:1:2:2", "theta:2:2:2",
                             "bouquet:2", "path:4", "star:4", "cycle:1", "cycle:2"}) {
        CAPTURE(spec);
        check_oracle_triangle(generate_family(spec));
    }
    check_oracle_triangle(parse_edge_list("1 1\n1 2\n1 2\n2 3\n3 1"));
    check_oracle_triangle(parse_edge_list("1 2\n2 3\n3 1\n4 5\n5 6\n6 4")); // disconnected
}

TEST_CASE("forest invariance of all four counters") {
    std::mt19937 rng(31);
    for (const char* spec : {"complete:4", "theta:1:2:2", "cycle:4"}) {
        CAPTURE(spec);
        const Graph g = generate_family(spec);
        const SpanningForestData canonical = spanning_forest(g);
        std::vector<int> priority(g.edge_count());
        std::iota(priority.begin(), priority.end(), 0);
        for (int trial = 0; trial < 3; ++trial) {
            std::shuffle(priority.begin(), priority.end(), rng);
            const SpanningForestData other = spanning_forest(g, priority);
            for (std::int64_t k = 1; k <= 5; ++k) {
                CHECK(count_nz_modular_flows(g, canonical, k) ==
                      count_nz_modular_flows(g, other, k));
                CHECK(count_nz_modular_tensions(g, canonical, k) ==
                      count_nz_modular_tensions(g, other, k));
                CHECK(count_nz_integral_flows(g, canonical, k) ==
                      count_nz_integral_flows(g, other, k));
                CHECK(count_nz_integral_tensions(g, canonical, k) ==
                      count_nz_integral_tensions(g, other, k));
            }
        }
    }
}

TEST_CASE("orientation invariance of all four counters") {
    const Graph g = generate_family("complete:4");
    for (int e = 0; e < g.edge_count(); ++e) {
        const Graph rev = g.with_edge_reversed(e);
        for (std::int64_t k = 2; k <= 5; ++k) {
            CHECK(count_nz_modular_flows(g, k) == count_nz_modular_flows(rev, k));
            CHECK(count_nz_modular_tensions(g, k) == count_nz_modular_tensions(rev, k));
            CHECK(count_nz_integral_flows(g, k) == count_nz_integral_flows(rev, k));
            CHECK(count_nz_integral_tensions(g, k) == count_nz_integral_tensions(rev, k));
        }
    }
}

TEST_CASE("component product rule") {
    const Graph two = parse_edge_list("1 2\n2 3\n3 1\n4 5\n5 6\n6 4");
    const Graph one = generate_family("cycle:3");
    for (CountKind kind : {CountKind::modular_flow, CountKind::modular_tension,
                           CountKind::integral_flow, CountKind::integral_tension}) {
        const ExactPolynomial whole = polynomial_of(two, kind).poly;
        const ExactPolynomial part = polynomial_of(one, kind).poly;
        CHECK(whole == part * part);
    }
}

TEST_CASE("extra-sample degree facts hold for every corpus-style graph") {
    // degree of the fitted polynomial equals r for flows, |V|-c for tensions
    const Graph g = generate_family("theta:1:2:2");
    const GraphClassification cls = classify(g);
    CHECK(polynomial_of(g, CountKind::modular_flow).poly.degree() == cls.cyclomatic_number);
    CHECK(polynomial_of(g, CountKind::integral_flow).poly.degree() == cls.cyclomatic_number);
    CHECK(polynomial_of(g, CountKind::modular_tension).poly.degree() ==
          g.vertex_count() - cls.component_count);
    CHECK(polynomial_of(g, CountKind::integral_tension).poly.degree() ==
          g.vertex_count() - cls.component_count);
}

TEST_CASE("enumeration guard") {
    CHECK_THROWS_AS(count_nz_modular_flows(generate_family("bouquet:20"), 100), GuardExceeded);
    CHECK_THROWS_AS(count_nz_integral_tensions(generate_family("path:30"), 50), GuardExceeded);
}
