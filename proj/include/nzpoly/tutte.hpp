#pragma once

#include "nzpoly/graph.hpp"
#include "nzpoly/polynomial.hpp"

#include <map>
#include <utility>

namespace nzpoly {

/// Tutte polynomial T(x, y) with nonnegative integer coefficients keyed by
/// (x-power, y-power).
struct TuttePolynomial {
    std::map<std::pair<int, int>, BigInt> coefficients;

    BigInt evaluate(const BigInt& x, const BigInt& y) const;
    /// Substitute polynomials for x and y.
    ExactPolynomial evaluate(const ExactPolynomial& x, const ExactPolynomial& y) const;
};

/// Deletion-contraction recursion: edgeless -> 1, loop -> y T(G-e),
/// bridge -> x T(G/e), else T(G-e) + T(G/e). Guarded at |E| <= 16.
TuttePolynomial tutte_polynomial(const Graph& g);

struct ModularPolynomials {
    ExactPolynomial mflow;     // (-1)^(|E|-|V|+c) T(0, 1-k)
    ExactPolynomial mtension;  // (-1)^(|V|-c)     T(1-k, 0)
    ExactPolynomial chromatic; // k^c * mtension
};

ModularPolynomials modular_polys_from_tutte(const Graph& g);

} // namespace nzpoly
