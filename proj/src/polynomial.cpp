#include "nzpoly/polynomial.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace nzpoly {

ExactPolynomial::ExactPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    normalize();
}

void ExactPolynomial::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) {
        coeffs_.pop_back();
    }
}

ExactPolynomial ExactPolynomial::constant(Rational c) {
    return ExactPolynomial({std::move(c)});
}

ExactPolynomial ExactPolynomial::variable() {
    return ExactPolynomial({Rational(0), Rational(1)});
}

Rational ExactPolynomial::evaluate(const Rational& k) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * k + *it;
    }
    return acc;
}

ExactPolynomial ExactPolynomial::operator+(const ExactPolynomial& o) const {
    std::vector<Rational> out(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) out[i] += o.coeffs_[i];
    return ExactPolynomial(std::move(out));
}

ExactPolynomial ExactPolynomial::operator-(const ExactPolynomial& o) const {
    return *this + (-o);
}

ExactPolynomial ExactPolynomial::operator-() const {
    std::vector<Rational> out = coeffs_;
    for (auto& c : out) c = -c;
    return ExactPolynomial(std::move(out));
}

ExactPolynomial ExactPolynomial::operator*(const ExactPolynomial& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
            out[i + j] += coeffs_[i] * o.coeffs_[j];
        }
    }
    return ExactPolynomial(std::move(out));
}

std::string ExactPolynomial::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = coeffs_[i];
        if (c == 0) continue;
        Rational a = c;
        if (!first) {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) a = -c;
        } else if (c < 0) {
            os << "-";
            a = -c;
        }
        first = false;
        bool unit = (a == 1) && i > 0;
        if (!unit) {
            os << boost::multiprecision::numerator(a).str();
            if (boost::multiprecision::denominator(a) != 1) {
                os << "/" << boost::multiprecision::denominator(a).str();
            }
        }
        if (i >= 1) {
            os << "k";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

ExactPolynomial interpolate(std::span<const std::pair<std::int64_t, BigInt>> samples) {
    if (samples.empty()) {
        throw std::invalid_argument("interpolate: no samples");
    }
    std::set<std::int64_t> seen;
    for (const auto& [x, y] : samples) {
        if (!seen.insert(x).second) {
            throw std::invalid_argument("interpolate: duplicate abscissa k=" + std::to_string(x));
        }
    }
    // Newton divided differences.
    const std::size_t n = samples.size();
    std::vector<Rational> dd(n);
    for (std::size_t i = 0; i < n; ++i) dd[i] = Rational(samples[i].second);
    std::vector<Rational> newton(n); // newton[j] = f[x_0..x_j]
    newton[0] = dd[0];
    for (std::size_t level = 1; level < n; ++level) {
        for (std::size_t i = n - 1; i >= level; --i) {
            dd[i] = (dd[i] - dd[i - 1]) / Rational(samples[i].first - samples[i - level].first);
        }
        newton[level] = dd[level];
    }
    // Expand sum_j newton[j] * prod_{i<j} (k - x_i).
    ExactPolynomial result;
    ExactPolynomial basis = ExactPolynomial::constant(1);
    for (std::size_t j = 0; j < n; ++j) {
        result = result + basis * ExactPolynomial::constant(newton[j]);
        basis = basis * ExactPolynomial({Rational(-samples[j].first), Rational(1)});
    }
    return result;
}

ExactPolynomial combine(const ExactPolynomial& p, const ExactPolynomial& q, PolyOp op) {
    switch (op) {
        case PolyOp::add: return p + q;
        case PolyOp::subtract: return p - q;
        case PolyOp::multiply: return p * q;
    }
    throw std::invalid_argument("combine: unknown op");
}

ExactPolynomial poly_pow(const ExactPolynomial& p, int e) {
    if (e < 0) throw std::invalid_argument("poly_pow: negative exponent");
    ExactPolynomial r = ExactPolynomial::constant(1);
    for (int i = 0; i < e; ++i) r = r * p;
    return r;
}

ExactPolynomial standard_family(StandardFamily family, int d) {
    if (d < 0) throw std::invalid_argument("standard_family: negative degree");
    switch (family) {
        case StandardFamily::shifted_power:
            return poly_pow(ExactPolynomial({Rational(1), Rational(1)}), d);
        case StandardFamily::double_shifted:
            return poly_pow(ExactPolynomial({Rational(1), Rational(2)}), d);
        case StandardFamily::power:
            return poly_pow(ExactPolynomial::variable(), d);
    }
    throw std::invalid_argument("standard_family: unknown family");
}

ExactPolynomial standard_family(const std::string& name, int d) {
    if (name == "shifted_power") return standard_family(StandardFamily::shifted_power, d);
    if (name == "double_shifted") return standard_family(StandardFamily::double_shifted, d);
    if (name == "power") return standard_family(StandardFamily::power, d);
    throw std::invalid_argument("standard_family: unknown name '" + name + "'");
}

ExactPolynomial binomial_basis(std::int64_t shift, int d) {
    if (d < 0) throw std::invalid_argument("binomial_basis: negative d");
    // (k + shift)(k + shift - 1)...(k + shift - d + 1) / d!
    ExactPolynomial num = ExactPolynomial::constant(1);
    Rational fact = 1;
    for (int t = 0; t < d; ++t) {
        num = num * ExactPolynomial({Rational(shift - t), Rational(1)});
        fact *= t + 1;
    }
    return num * ExactPolynomial::constant(Rational(1) / fact);
}

} // namespace nzpoly
