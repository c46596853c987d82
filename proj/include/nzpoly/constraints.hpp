#pragma once

#include "nzpoly/numeric.hpp"

#include <optional>
#include <span>
#include <string>

namespace nzpoly {

/// Macaulay pseudopower h^<i> for h >= 1, i >= 1: decompose
/// h = C(a_i,i) + ... + C(a_j,j) with a_i > ... > a_j >= j >= 1 (greedy,
/// unique) and shift every binomial up by one in both arguments.
BigInt macaulay_pseudopower(const BigInt& h, int i);

struct MVectorResult {
    bool ok = false;
    // First failing index and what failed, when !ok.
    std::optional<int> index;
    std::string description;
};

/// Macaulay growth test: v_0 = 1, all entries >= 0, v_{i+1} <= v_i^<i>.
MVectorResult is_m_vector(std::span<const BigInt> v);

struct GConstraintReport {
    bool monotone_ok = false;  // h_0 <= ... <= h_floor(d/2)
    bool symmetry_ok = false;  // h_i <= h_{d-i} for i <= d/2
    bool m_vector_ok = false;  // first differences up to ceil(d/2) form an M-vector
    std::optional<int> first_violation_index;
    std::string first_violation;

    bool pass() const { return monotone_ok && symmetry_ok && m_vector_ok; }
};

/// Evaluates the three g-constraints on v = (h_0..h_d), d = v.size()-1.
/// Non-integral entries fail closed (all three flags false).
GConstraintReport g_constraints(std::span<const Rational> v);

bool is_palindromic(std::span<const Rational> v);

} // namespace nzpoly
