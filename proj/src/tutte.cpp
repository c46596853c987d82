#include "nzpoly/tutte.hpp"

#include "nzpoly/errors.hpp"

#include <algorithm>
#include <numeric>

namespace nzpoly {

BigInt TuttePolynomial::evaluate(const BigInt& x, const BigInt& y) const {
    BigInt acc = 0;
    for (const auto& [powers, c] : coefficients) {
        acc += c * ipow(x, powers.first) * ipow(y, powers.second);
    }
    return acc;
}

ExactPolynomial TuttePolynomial::evaluate(const ExactPolynomial& x,
                                          const ExactPolynomial& y) const {
    ExactPolynomial acc;
    for (const auto& [powers, c] : coefficients) {
        ExactPolynomial term = ExactPolynomial::constant(Rational(c));
        term = term * poly_pow(x, powers.first) * poly_pow(y, powers.second);
        acc = acc + term;
    }
    return acc;
}

namespace {

// Recursion state: a multigraph on contracted vertex classes.
struct WorkGraph {
    int n = 0;
    std::vector<Edge> edges;
};

int component_count(const WorkGraph& g) {
    std::vector<int> parent(g.n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&parent](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    int comps = g.n;
    for (const Edge& e : g.edges) {
        int a = find(e.tail), b = find(e.head);
        if (a != b) {
            parent[a] = b;
            --comps;
        }
    }
    return comps;
}

WorkGraph deleted(const WorkGraph& g, std::size_t idx) {
    WorkGraph out{g.n, {}};
    out.edges.reserve(g.edges.size() - 1);
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        if (i != idx) out.edges.push_back(g.edges[i]);
    }
    return out;
}

WorkGraph contracted(const WorkGraph& g, std::size_t idx) {
    const int keep = std::min(g.edges[idx].tail, g.edges[idx].head);
    const int drop = std::max(g.edges[idx].tail, g.edges[idx].head);
    WorkGraph out{g.n - 1, {}};
    out.edges.reserve(g.edges.size() - 1);
    auto remap = [keep, drop](int v) {
        if (v == drop) v = keep;
        return v > drop ? v - 1 : v;
    };
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        if (i == idx) continue;
        out.edges.push_back({remap(g.edges[i].tail), remap(g.edges[i].head)});
    }
    return out;
}

void accumulate(WorkGraph cur, int xpow, int ypow,
                std::map<std::pair<int, int>, BigInt>& coeffs) {
    while (true) {
        // peel loops: each contributes a factor y
        std::size_t i = 0;
        while (i < cur.edges.size()) {
            if (cur.edges[i].tail == cur.edges[i].head) {
                cur = deleted(cur, i);
                ++ypow;
            } else {
                ++i;
            }
        }
        if (cur.edges.empty()) {
            coeffs[{xpow, ypow}] += 1;
            return;
        }
        // branch on the first remaining edge
        WorkGraph del = deleted(cur, 0);
        if (component_count(del) > component_count(cur)) {
            // bridge: factor x, continue on the contraction
            cur = contracted(cur, 0);
            ++xpow;
            continue;
        }
        accumulate(std::move(del), xpow, ypow, coeffs);
        cur = contracted(cur, 0); // tail call on the contraction branch
    }
}

} // namespace

TuttePolynomial tutte_polynomial(const Graph& g) {
    if (g.edge_count() > 16) {
        throw GuardExceeded("tutte_polynomial: " + std::to_string(g.edge_count()) +
                            " edges exceeds the deletion-contraction guard (16)");
    }
    WorkGraph w{g.vertex_count(), g.edges()};
    TuttePolynomial t;
    accumulate(w, 0, 0, t.coefficients);
    // drop explicit zeros for a canonical map
    std::erase_if(t.coefficients, [](const auto& kv) { return kv.second == 0; });
    return t;
}

ModularPolynomials modular_polys_from_tutte(const Graph& g) {
    const TuttePolynomial t = tutte_polynomial(g);
    const GraphClassification cls = classify(g);
    const int r = cls.cyclomatic_number;
    const int rank = g.vertex_count() - cls.component_count;

    const ExactPolynomial zero;
    const ExactPolynomial one_minus_k({Rational(1), Rational(-1)});

    ModularPolynomials out;
    ExactPolynomial flow_raw = t.evaluate(zero, one_minus_k);
    out.mflow = (r % 2 == 0) ? flow_raw : -flow_raw;
    ExactPolynomial tension_raw = t.evaluate(one_minus_k, zero);
    out.mtension = (rank % 2 == 0) ? tension_raw : -tension_raw;
    out.chromatic = poly_pow(ExactPolynomial::variable(), cls.component_count) * out.mtension;
    return out;
}

} // namespace nzpoly
