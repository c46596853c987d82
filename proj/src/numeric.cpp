#include "nzpoly/numeric.hpp"

#include <stdexcept>

namespace nzpoly {

BigInt binomial(const BigInt& n, int k) {
    if (k < 0) {
        throw std::invalid_argument("binomial: negative k");
    }
    BigInt num = 1;
    BigInt den = 1;
    for (int t = 0; t < k; ++t) {
        num *= n - t;
        den *= t + 1;
    }
    return num / den; // exact: den | num for the falling factorial
}

BigInt ipow(const BigInt& base, int exp) {
    if (exp < 0) {
        throw std::invalid_argument("ipow: negative exponent");
    }
    BigInt r = 1;
    BigInt b = base;
    while (exp > 0) {
        if (exp & 1) r *= b;
        b *= b;
        exp >>= 1;
    }
    return r;
}

bool is_integer(const Rational& r) {
    return boost::multiprecision::denominator(r) == 1;
}

BigInt to_integer(const Rational& r) {
    if (!is_integer(r)) {
        throw std::invalid_argument("to_integer: rational is not integral");
    }
    return boost::multiprecision::numerator(r);
}

std::string rational_to_string(const Rational& r) {
    return boost::multiprecision::numerator(r).str() + "/" +
           boost::multiprecision::denominator(r).str();
}

Rational rational_from_string(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) {
        return Rational(BigInt(s));
    }
    BigInt num(s.substr(0, slash));
    BigInt den(s.substr(slash + 1));
    if (den == 0) {
        throw std::invalid_argument("rational_from_string: zero denominator");
    }
    return Rational(num, den);
}

} // namespace nzpoly
