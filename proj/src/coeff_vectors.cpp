#include "nzpoly/coeff_vectors.hpp"

#include <stdexcept>

namespace nzpoly {

std::string to_string(VectorKind kind) {
    switch (kind) {
        case VectorKind::f: return "f";
        case VectorKind::h: return "h";
        case VectorKind::hstar: return "hstar";
    }
    throw std::invalid_argument("bad VectorKind");
}

VectorKind vector_kind_from_string(const std::string& s) {
    if (s == "f") return VectorKind::f;
    if (s == "h") return VectorKind::h;
    if (s == "hstar") return VectorKind::hstar;
    throw std::invalid_argument("unknown vector kind '" + s + "'");
}

namespace {

// C(m, d) for integer m (possibly negative), as a Rational.
Rational binom_at(std::int64_t m, int d) {
    return Rational(binomial(BigInt(m), d));
}

void require_degree(const ExactPolynomial& p, int d, const char* op) {
    if (d < 0) throw std::invalid_argument(std::string(op) + ": negative reference degree");
    if (p.degree() > d) {
        throw std::invalid_argument(std::string(op) + ": polynomial degree " +
                                    std::to_string(p.degree()) + " exceeds reference degree " +
                                    std::to_string(d));
    }
}

} // namespace

CoeffVector hstar_vector(const ExactPolynomial& p, int d) {
    require_degree(p, d, "hstar_vector");
    // In the basis C(k+d-i, d), evaluating at k = m kills every i > m,
    // so the system over k = 0..d is unitriangular; forward-substitute.
    std::vector<Rational> h;
    h.reserve(d + 1);
    for (int m = 0; m <= d; ++m) {
        Rational rhs = p(m);
        for (int i = 0; i < static_cast<int>(h.size()); ++i) {
            rhs -= h[i] * binom_at(m + d - i, d);
        }
        h.push_back(rhs); // own coefficient C(d, d) = 1
    }
    return CoeffVector{VectorKind::hstar, d, std::move(h)};
}

CoeffVector h_vector(const ExactPolynomial& p, int d) {
    require_degree(p, d, "h_vector");
    std::vector<Rational> h(d + 2, Rational(0));
    h[0] = 1;
    // At k = 0 only i = 0 and i = d+1 survive: p(0) = 1 + (-1)^d h_{d+1}.
    h[d + 1] = (p(0) - 1) * ((d % 2 == 0) ? 1 : -1);
    for (int m = 1; m <= d; ++m) {
        Rational rhs = p(m) - binom_at(m + d, d);
        for (int i = 1; i < m; ++i) {
            rhs -= h[i] * binom_at(m + d - i, d);
        }
        h[m] = rhs;
    }
    return CoeffVector{VectorKind::h, d, std::move(h)};
}

CoeffVector f_vector(const ExactPolynomial& p, int d) {
    require_degree(p, d, "f_vector");
    // Evaluate at k = m+1: C(m, i) vanishes for i > m.
    std::vector<Rational> f;
    f.reserve(d + 1);
    for (int m = 0; m <= d; ++m) {
        Rational rhs = p(m + 1);
        for (int i = 0; i < static_cast<int>(f.size()); ++i) {
            rhs -= f[i] * binom_at(m, i);
        }
        f.push_back(rhs);
    }
    return CoeffVector{VectorKind::f, d, std::move(f)};
}

ExactPolynomial vector_to_poly(const CoeffVector& v) {
    const int d = v.ref_degree;
    switch (v.kind) {
        case VectorKind::hstar: {
            if (static_cast<int>(v.entries.size()) != d + 1) {
                throw std::invalid_argument("vector_to_poly: hstar vector must have d+1 entries");
            }
            ExactPolynomial p;
            for (int i = 0; i <= d; ++i) {
                p = p + binomial_basis(d - i, d) * ExactPolynomial::constant(v.entries[i]);
            }
            return p;
        }
        case VectorKind::h: {
            if (static_cast<int>(v.entries.size()) != d + 2) {
                throw std::invalid_argument("vector_to_poly: h vector must have d+2 entries");
            }
            if (v.entries[0] != 1) {
                throw std::invalid_argument("vector_to_poly: h vector entry 0 must equal 1");
            }
            ExactPolynomial p = binomial_basis(d, d);
            for (int i = 1; i <= d + 1; ++i) {
                p = p + binomial_basis(d - i, d) * ExactPolynomial::constant(v.entries[i]);
            }
            return p;
        }
        case VectorKind::f: {
            if (static_cast<int>(v.entries.size()) != d + 1) {
                throw std::invalid_argument("vector_to_poly: f vector must have d+1 entries");
            }
            ExactPolynomial p;
            for (int i = 0; i <= d; ++i) {
                p = p + binomial_basis(-1, i) * ExactPolynomial::constant(v.entries[i]);
            }
            return p;
        }
    }
    throw std::invalid_argument("vector_to_poly: bad kind");
}

BigInt eulerian(int n, int i) {
    if (n < 1 || i < 0 || i > n + 1) {
        throw std::invalid_argument("eulerian: need n >= 1 and 0 <= i <= n+1");
    }
    if (i == 0 || i == n + 1) return 0;
    BigInt acc = 0;
    for (int j = 0; j <= i; ++j) {
        BigInt term = binomial(BigInt(n + 1), j) * ipow(BigInt(i - j), n);
        acc += (j % 2 == 0) ? term : -term;
    }
    return acc;
}

BigInt macmahon(int n, int i) {
    if (n < 1 || i < 0 || i > n) {
        throw std::invalid_argument("macmahon: need n >= 1 and 0 <= i <= n");
    }
    BigInt acc = 0;
    for (int j = 1; j <= i; ++j) {
        BigInt term = binomial(BigInt(n), i - j) * ipow(BigInt(2 * j - 1), n - 1);
        acc += ((i - j) % 2 == 0) ? term : -term;
    }
    return acc;
}

} // namespace nzpoly
