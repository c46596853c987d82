#pragma once

#include "nzpoly/numeric.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace nzpoly {

/// Univariate polynomial in k with exact rational coefficients.
/// Coefficients are stored in ascending powers with no trailing zeros;
/// the zero polynomial has an empty coefficient list and degree -1.
class ExactPolynomial {
public:
    ExactPolynomial() = default;
    explicit ExactPolynomial(std::vector<Rational> coeffs);

    static ExactPolynomial constant(Rational c);
    /// The monomial k.
    static ExactPolynomial variable();

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    Rational evaluate(const Rational& k) const;
    Rational operator()(std::int64_t k) const { return evaluate(Rational(k)); }

    ExactPolynomial operator+(const ExactPolynomial& o) const;
    ExactPolynomial operator-(const ExactPolynomial& o) const;
    ExactPolynomial operator*(const ExactPolynomial& o) const;
    ExactPolynomial operator-() const;

    bool operator==(const ExactPolynomial& o) const = default;

    /// Human-readable form, e.g. "3k^2 + 3k + 1" or "(4k^3 + 8k)/3 + ...".
    std::string to_string() const;

private:
    std::vector<Rational> coeffs_;
    void normalize();
};

/// Unique polynomial of degree < samples.size() through all (k, value) pairs.
/// Throws std::invalid_argument on empty input or duplicate abscissae.
ExactPolynomial interpolate(std::span<const std::pair<std::int64_t, BigInt>> samples);

enum class PolyOp { add, subtract, multiply };

ExactPolynomial combine(const ExactPolynomial& p, const ExactPolynomial& q, PolyOp op);

enum class StandardFamily {
    shifted_power,  // (k+1)^d
    double_shifted, // (2k+1)^d
    power,          // k^d
};

ExactPolynomial standard_family(StandardFamily family, int d);
/// Name-keyed variant: "shifted_power" | "double_shifted" | "power".
ExactPolynomial standard_family(const std::string& name, int d);

/// C(k + shift, d) expanded as a polynomial in k.
ExactPolynomial binomial_basis(std::int64_t shift, int d);

/// Non-negative integer power p^e.
ExactPolynomial poly_pow(const ExactPolynomial& p, int e);

} // namespace nzpoly
