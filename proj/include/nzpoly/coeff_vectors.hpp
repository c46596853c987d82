#pragma once

#include "nzpoly/polynomial.hpp"

#include <string>
#include <vector>

namespace nzpoly {

enum class VectorKind { f, h, hstar };

std::string to_string(VectorKind kind);
VectorKind vector_kind_from_string(const std::string& s);

/// An f-, h-, or h*-vector of a polynomial, always relative to an explicit
/// reference degree d (never inferred from the polynomial's own degree).
/// Lengths: d+1 for f and hstar, d+2 for h (entry 0 is forced to 1).
struct CoeffVector {
    VectorKind kind;
    int ref_degree = 0;
    std::vector<Rational> entries;
};

/// Unique (h*_0..h*_d) with p(k) = sum_i h*_i C(k+d-i, d).
CoeffVector hstar_vector(const ExactPolynomial& p, int d);

/// Unique (1, h_1..h_{d+1}) with p(k) = C(k+d, d) + sum_{i>=1} h_i C(k+d-i, d).
CoeffVector h_vector(const ExactPolynomial& p, int d);

/// Unique (f_0..f_d) with p(k) = sum_i f_i C(k-1, i).
CoeffVector f_vector(const ExactPolynomial& p, int d);

/// Inverse of the matching forward transform.
ExactPolynomial vector_to_poly(const CoeffVector& v);

/// Eulerian number A(n, i) for 1 <= n, 0 <= i <= n+1 (A(n,0) = A(n,n+1) = 0).
BigInt eulerian(int n, int i);

/// MacMahon number B(n, i) for 1 <= n, 0 <= i <= n (B(n,0) = 0).
BigInt macmahon(int n, int i);

} // namespace nzpoly
