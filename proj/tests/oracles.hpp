#pragma once

// Brute-force oracles used to cross-check the parameterized counters.
// These deliberately avoid the forest parameterization: flows are tested
// against the incidence matrix over the full space Z_k^E (or the integer
// box), tensions against orthogonality to every fundamental-cycle sign
// vector. Test-only code.

#include "nzpoly/graph.hpp"

#include <cstdint>
#include <vector>

namespace nzpoly::oracles {

// all vectors in {0..k-1}^E with nowhere-zero entries and A f = 0 mod k
inline std::int64_t modular_flows(const Graph& g, std::int64_t k) {
    const int m = g.edge_count();
    if (k < 2) return m == 0 ? 1 : 0;
    std::vector<std::int64_t> f(m, 1);
    std::int64_t count = 0;
    while (true) {
        bool ok = true;
        for (int v = 0; v < g.vertex_count() && ok; ++v) {
            std::int64_t s = 0;
            for (int e = 0; e < m; ++e) {
                if (g.is_loop(e)) continue;
                if (g.edge(e).head == v) s += f[e];
                if (g.edge(e).tail == v) s -= f[e];
            }
            ok = (s % k) == 0;
        }
        if (ok) ++count;
        int j = 0;
        while (j < m && ++f[j] == k) {
            f[j] = 1;
            ++j;
        }
        if (j == m) break;
        if (m == 0) break;
    }
    if (m == 0) return 1;
    return count;
}

inline std::int64_t modular_tensions(const Graph& g, std::int64_t k) {
    const int m = g.edge_count();
    if (k < 2) return m == 0 ? 1 : 0;
    const SpanningForestData forest = spanning_forest(g);
    std::vector<std::int64_t> t(m, 1);
    std::int64_t count = 0;
    while (true) {
        bool ok = true;
        for (const auto& sig : forest.sign_vectors) {
            std::int64_t s = 0;
            for (int e = 0; e < m; ++e) s += sig[e] * t[e];
            if (s % k != 0) {
                ok = false;
                break;
            }
        }
        if (ok) ++count;
        int j = 0;
        while (j < m && ++t[j] == k) {
            t[j] = 1;
            ++j;
        }
        if (j == m) break;
        if (m == 0) break;
    }
    if (m == 0) return 1;
    return count;
}

// all nowhere-zero vectors in {-k+1..k-1}^E with A f = 0 over Z
inline std::int64_t integral_flows(const Graph& g, std::int64_t k) {
    const int m = g.edge_count();
    if (m == 0) return 1;
    if (k < 2) return 0;
    std::vector<std::int64_t> f(m, -(k - 1));
    std::int64_t count = 0;
    auto bump = [&f, k](int j) {
        ++f[j];
        if (f[j] == 0) ++f[j];
        return f[j] <= k - 1;
    };
    while (true) {
        bool ok = true;
        for (int v = 0; v < g.vertex_count() && ok; ++v) {
            std::int64_t s = 0;
            for (int e = 0; e < m; ++e) {
                if (g.is_loop(e)) continue;
                if (g.edge(e).head == v) s += f[e];
                if (g.edge(e).tail == v) s -= f[e];
            }
            ok = s == 0;
        }
        if (ok) ++count;
        int j = 0;
        while (j < m && !bump(j)) {
            f[j] = -(k - 1);
            ++j;
        }
        if (j == m) break;
    }
    return count;
}

inline std::int64_t integral_tensions(const Graph& g, std::int64_t k) {
    const int m = g.edge_count();
    if (m == 0) return 1;
    if (k < 2) return 0;
    const SpanningForestData forest = spanning_forest(g);
    std::vector<std::int64_t> t(m, -(k - 1));
    std::int64_t count = 0;
    auto bump = [&t, k](int j) {
        ++t[j];
        if (t[j] == 0) ++t[j];
        return t[j] <= k - 1;
    };
    while (true) {
        bool ok = true;
        for (const auto& sig : forest.sign_vectors) {
            std::int64_t s = 0;
            for (int e = 0; e < m; ++e) s += sig[e] * t[e];
            if (s != 0) {
                ok = false;
                break;
            }
        }
        if (ok) ++count;
        int j = 0;
        while (j < m && !bump(j)) {
            t[j] = -(k - 1);
            ++j;
        }
        if (j == m) break;
    }
    return count;
}

} // namespace nzpoly::oracles
