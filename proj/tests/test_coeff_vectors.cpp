#include "nzpoly/coeff_vectors.hpp"

#include "doctest.h"

#include <random>

using namespace nzpoly;

namespace {

ExactPolynomial from_ints(std::initializer_list<long> coeffs) {
    std::vector<Rational> v;
    for (long c : coeffs) v.emplace_back(c);
    return ExactPolynomial(std::move(v));
}

std::vector<Rational> rats(std::initializer_list<long> values) {
    std::vector<Rational> v;
    for (long x : values) v.emplace_back(x);
    return v;
}

ExactPolynomial random_poly_of_degree(std::mt19937& rng, int d) {
    std::uniform_int_distribution<std::int64_t> val(-20, 20);
    std::vector<Rational> coeffs(d + 1);
    for (int i = 0; i <= d; ++i) coeffs[i] = Rational(val(rng));
    if (coeffs[d] == 0) coeffs[d] = 1;
    return ExactPolynomial(std::move(coeffs));
}

} // namespace

TEST_CASE("hstar examples") {
    CHECK(hstar_vector(from_ints({1, 3, 3}), 2).entries == rats({1, 4, 1}));
    CHECK(hstar_vector(standard_family(StandardFamily::double_shifted, 2), 2).entries ==
          rats({1, 6, 1}));
    CHECK(hstar_vector(from_ints({1}), 0).entries == rats({1}));
    CHECK_THROWS_AS(hstar_vector(from_ints({1, 3, 3}), 1), std::invalid_argument);
}

TEST_CASE("h examples") {
    CHECK(h_vector(from_ints({1, 2, 1}), 2).entries == rats({1, 1, 0, 0}));
    CHECK(h_vector(from_ints({0, 0, 1}), 2).entries == rats({1, -2, 4, -1}));
    CHECK(h_vector(from_ints({-1, 5}), 1).entries == rats({1, 2, 2}));
}

TEST_CASE("f examples") {
    CHECK(f_vector(from_ints({1, 2, 1}), 2).entries == rats({4, 5, 2}));
    CHECK(f_vector(from_ints({1, 2}), 1).entries == rats({3, 2}));
    CHECK(f_vector(from_ints({1}), 0).entries == rats({1}));
}

TEST_CASE("vector_to_poly examples") {
    CHECK(vector_to_poly(CoeffVector{VectorKind::hstar, 2, rats({1, 4, 1})}) ==
          from_ints({1, 3, 3}));
    for (int d = 0; d <= 5; ++d) {
        std::vector<Rational> h(d + 2, Rational(0));
        h[0] = 1;
        CHECK(vector_to_poly(CoeffVector{VectorKind::h, d, h}) == binomial_basis(d, d));
    }
    CHECK(vector_to_poly(CoeffVector{VectorKind::f, 0, rats({1})}) == from_ints({1}));
    CHECK_THROWS_AS(vector_to_poly(CoeffVector{VectorKind::h, 1, rats({2, 0, 0})}),
                    std::invalid_argument);
}

TEST_CASE("eulerian numbers") {
    CHECK(eulerian(3, 2) == 4);
    CHECK(eulerian(4, 2) == 11);
    CHECK(eulerian(4, 3) == 11);
    for (int n = 1; n <= 8; ++n) {
        CHECK(eulerian(n, 0) == 0);
        CHECK(eulerian(n, n + 1) == 0);
        CHECK(eulerian(n, 1) == 1);
        CHECK(eulerian(n, n) == 1);
    }
    CHECK_THROWS_AS(eulerian(0, 0), std::invalid_argument);
    CHECK_THROWS_AS(eulerian(3, 5), std::invalid_argument);
    CHECK_THROWS_AS(eulerian(3, -1), std::invalid_argument);
}

TEST_CASE("macmahon numbers") {
    CHECK(macmahon(3, 2) == 6);
    CHECK(macmahon(2, 2) == 1);
    CHECK(macmahon(4, 2) == 23);
    CHECK(macmahon(5, 3) == 230);
    for (int n = 1; n <= 8; ++n) {
        CHECK(macmahon(n, 0) == 0);
        CHECK(macmahon(n, 1) == 1);
        CHECK(macmahon(n, n) == 1);
    }
    CHECK_THROWS_AS(macmahon(0, 0), std::invalid_argument);
    CHECK_THROWS_AS(macmahon(3, 4), std::invalid_argument);
}

TEST_CASE("round trips for all three kinds up to degree 8") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> deg_drop(0, 2);
    for (int d = 0; d <= 8; ++d) {
        for (int trial = 0; trial < 5; ++trial) {
            const int deg = std::max(0, d - deg_drop(rng));
            const ExactPolynomial p = random_poly_of_degree(rng, deg);
            CHECK(vector_to_poly(hstar_vector(p, d)) == p);
            CHECK(vector_to_poly(h_vector(p, d)) == p);
            CHECK(vector_to_poly(f_vector(p, d)) == p);
        }
    }
}

TEST_CASE("hstar-vs-h relation") {
    std::mt19937 rng(123);
    for (int d = 0; d <= 8; ++d) {
        const ExactPolynomial p = random_poly_of_degree(rng, d);
        const auto hs = hstar_vector(p, d).entries;
        const auto h = h_vector(p, d).entries;
        for (int i = 0; i <= d; ++i) {
            const Rational sign((d + i) % 2 == 0 ? 1 : -1);
            CHECK(hs[i] == h[i] + sign * Rational(binomial(BigInt(d + 1), i)) * h[d + 1]);
        }
    }
}

TEST_CASE("f-vs-h relation") {
    std::mt19937 rng(321);
    for (int d = 0; d <= 8; ++d) {
        const ExactPolynomial p = random_poly_of_degree(rng, d);
        const auto h = h_vector(p, d).entries;
        const auto f = f_vector(p, d).entries;
        for (int i = 0; i <= d + 1; ++i) {
            Rational expected((i % 2 == 0 ? 1 : -1) * binomial(BigInt(d + 1), i));
            for (int m = 0; m < i; ++m) {
                const Rational sign((i - m - 1) % 2 == 0 ? 1 : -1);
                expected += sign * Rational(binomial(BigInt(d - m), i - m - 1)) * f[m];
            }
            CHECK(h[i] == expected);
        }
    }
}

TEST_CASE("hstar of the three standard families gives Eulerian and MacMahon rows") {
    for (int n = 1; n <= 8; ++n) {
        const auto power = hstar_vector(standard_family(StandardFamily::power, n), n).entries;
        const auto shifted =
            hstar_vector(standard_family(StandardFamily::shifted_power, n), n).entries;
        const auto doubled =
            hstar_vector(standard_family(StandardFamily::double_shifted, n), n).entries;
        for (int i = 0; i <= n; ++i) {
            CHECK(power[i] == Rational(eulerian(n, i)));
            CHECK(shifted[i] == Rational(eulerian(n, i + 1)));
            CHECK(doubled[i] == Rational(macmahon(n + 1, i + 1)));
        }
    }
}

TEST_CASE("hstar linearity for equal and dropped degrees") {
    std::mt19937 rng(777);
    for (int trial = 0; trial < 200; ++trial) {
        std::uniform_int_distribution<int> deg(1, 8);
        const int d = deg(rng);
        const ExactPolynomial p = random_poly_of_degree(rng, d);

        // part 1: deg(p+q) = d
        const ExactPolynomial q = random_poly_of_degree(rng, d);
        if ((p + q).degree() == d) {
            const auto lhs = hstar_vector(p + q, d).entries;
            const auto hp = hstar_vector(p, d).entries;
            const auto hq = hstar_vector(q, d).entries;
            for (int i = 0; i <= d; ++i) CHECK(lhs[i] == hp[i] + hq[i]);
        }

        // part 2: force deg(p+q) = d-1 via q = -p + (degree d-1 part)
        const ExactPolynomial low = random_poly_of_degree(rng, d - 1);
        const ExactPolynomial q2 = low - p;
        REQUIRE((p + q2).degree() == low.degree());
        if (low.degree() == d - 1) {
            const auto lhs = hstar_vector(low, d - 1).entries;
            const auto hp = hstar_vector(p, d).entries;
            const auto hq = hstar_vector(q2, d).entries;
            Rational prefix = 0;
            for (int i = 0; i <= d - 1; ++i) {
                prefix += hp[i] + hq[i];
                CHECK(lhs[i] == prefix);
            }
        }
    }
}
