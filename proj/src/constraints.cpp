#include "nzpoly/constraints.hpp"

#include <cassert>
#include <stdexcept>
#include <vector>

namespace nzpoly {

namespace {

// Greedy binomial decomposition of h at level i; returns pairs (a_m, m)
// with m descending from i.
std::vector<std::pair<BigInt, int>> macaulay_decompose(const BigInt& h, int i) {
    std::vector<std::pair<BigInt, int>> terms;
    BigInt rest = h;
    int m = i;
    while (rest > 0) {
        if (m < 1) throw std::logic_error("macaulay_decompose: ran out of levels");
        // largest a with C(a, m) <= rest, found by growing C incrementally:
        // C(a+1, m) = C(a, m) * (a+1) / (a+1-m)
        BigInt a = m;
        BigInt current = 1; // C(m, m)
        while (true) {
            BigInt next = current * (a + 1) / (a + 1 - m);
            if (next > rest) break;
            current = next;
            ++a;
        }
        terms.emplace_back(a, m);
        rest -= current;
        --m;
    }
    return terms;
}

} // namespace

BigInt macaulay_pseudopower(const BigInt& h, int i) {
    if (h <= 0 || i <= 0) {
        throw std::invalid_argument("macaulay_pseudopower: need h >= 1 and i >= 1");
    }
    auto terms = macaulay_decompose(h, i);
    // The decomposition must be strictly decreasing with a_m >= m >= 1 and
    // reconstruct h; check before shifting.
    BigInt back = 0;
    for (std::size_t t = 0; t < terms.size(); ++t) {
        back += binomial(terms[t].first, terms[t].second);
        if ((t > 0 && terms[t].first >= terms[t - 1].first) ||
            terms[t].first < terms[t].second) {
            throw std::logic_error("macaulay_pseudopower: malformed decomposition");
        }
    }
    if (back != h) {
        throw std::logic_error("macaulay_pseudopower: decomposition does not reconstruct input");
    }
    BigInt out = 0;
    for (const auto& [a, m] : terms) {
        out += binomial(a + 1, m + 1);
    }
    return out;
}

MVectorResult is_m_vector(std::span<const BigInt> v) {
    if (v.empty()) {
        return {false, std::nullopt, "empty vector"};
    }
    if (v[0] != 1) {
        return {false, 0, "entry 0 must equal 1"};
    }
    for (int i = 0; i < static_cast<int>(v.size()); ++i) {
        if (v[i] < 0) {
            return {false, i, "negative entry"};
        }
    }
    for (int i = 1; i + 1 < static_cast<int>(v.size()); ++i) {
        BigInt bound = (v[i] == 0) ? BigInt(0) : macaulay_pseudopower(v[i], i);
        if (v[i + 1] > bound) {
            return {false, i,
                    "growth bound violated: v[" + std::to_string(i + 1) + "] = " +
                        v[i + 1].str() + " > " + bound.str()};
        }
    }
    return {true, std::nullopt, ""};
}

GConstraintReport g_constraints(std::span<const Rational> v) {
    GConstraintReport rep;
    if (v.empty()) {
        rep.first_violation = "empty vector";
        return rep;
    }
    const int d = static_cast<int>(v.size()) - 1;

    std::vector<BigInt> h(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!is_integer(v[i])) {
            rep.first_violation_index = static_cast<int>(i);
            rep.first_violation = "non-integral entry " + rational_to_string(v[i]);
            return rep; // fails closed: M-vectors are integer sequences
        }
        h[i] = to_integer(v[i]);
    }

    auto note = [&rep](int idx, const std::string& what) {
        if (!rep.first_violation_index) {
            rep.first_violation_index = idx;
            rep.first_violation = what;
        }
    };

    rep.monotone_ok = true;
    for (int i = 0; i + 1 <= d / 2; ++i) {
        if (h[i] > h[i + 1]) {
            rep.monotone_ok = false;
            note(i, "condition 1: h[" + std::to_string(i) + "] > h[" + std::to_string(i + 1) + "]");
            break;
        }
    }

    rep.symmetry_ok = true;
    for (int i = 0; 2 * i <= d; ++i) {
        if (h[i] > h[d - i]) {
            rep.symmetry_ok = false;
            note(i, "condition 2: h[" + std::to_string(i) + "] > h[" + std::to_string(d - i) + "]");
            break;
        }
    }

    const int mid = (d + 1) / 2; // ceil(d/2)
    std::vector<BigInt> diff;
    diff.push_back(h[0]);
    for (int i = 1; i <= mid; ++i) {
        diff.push_back(h[i] - h[i - 1]);
    }
    MVectorResult mres = is_m_vector(diff);
    rep.m_vector_ok = mres.ok;
    if (!mres.ok) {
        note(mres.index.value_or(0), "condition 3: difference vector is not an M-vector (" +
                                         mres.description + ")");
    }
    return rep;
}

bool is_palindromic(std::span<const Rational> v) {
    const std::size_t n = v.size();
    for (std::size_t i = 0; 2 * i < n; ++i) {
        if (v[i] != v[n - 1 - i]) return false;
    }
    return true;
}

} // namespace nzpoly
