#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace nzpoly {

// All arithmetic in this project is exact. Counts fit in int64 by the
// enumeration guards; polynomial coefficients and number-triangle values
// do not, so they live in arbitrary-precision integers/rationals.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Binomial coefficient C(n, k) for integer n (possibly negative) and k >= 0,
/// i.e. the polynomial binomial n(n-1)...(n-k+1)/k!.
BigInt binomial(const BigInt& n, int k);

BigInt ipow(const BigInt& base, int exp);

bool is_integer(const Rational& r);

/// Numerator of an integral rational; throws std::invalid_argument otherwise.
BigInt to_integer(const Rational& r);

/// Serialized form used everywhere in JSON output: "num/den", e.g. "-5/3", "7/1".
std::string rational_to_string(const Rational& r);

/// Accepts "num/den" and bare "num".
Rational rational_from_string(const std::string& s);

} // namespace nzpoly
