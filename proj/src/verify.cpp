#include "nzpoly/verify.hpp"

#include "nzpoly/constraints.hpp"
#include "nzpoly/errors.hpp"
#include "nzpoly/tutte.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace nzpoly {

std::string to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::skipped: return "skipped";
    }
    throw std::invalid_argument("bad CheckStatus");
}

const std::vector<std::string>& all_check_names() {
    static const std::vector<std::string> names = {
        "bounds_modular_flow", "bounds_modular_tension", "bounds_integral_flow",
        "bounds_integral_tension", "palindromic_flow", "palindromic_tension",
        "reflexive_flow", "reflexive_tension", "tension_sandwich",
        "flow_sandwich", "chromatic_identity", "tutte_consistency",
    };
    return names;
}

const CheckResult* TheoremReport::find(const std::string& name) const {
    for (const auto& [n, r] : checks) {
        if (n == name) return &r;
    }
    return nullptr;
}

bool TheoremReport::all_passed() const {
    return std::none_of(checks.begin(), checks.end(), [](const auto& c) {
        return c.second.status == CheckStatus::fail;
    });
}

std::int64_t count_proper_colorings(const Graph& g, std::int64_t k) {
    if (k < 0) throw std::invalid_argument("count_proper_colorings: negative k");
    if (k == 0) return 0;
    const int n = g.vertex_count();
    std::vector<std::int64_t> color(n, 0);
    std::int64_t count = 0;
    while (true) {
        bool proper = true;
        for (const Edge& e : g.edges()) {
            if (color[e.tail] == color[e.head]) {
                proper = false;
                break;
            }
        }
        if (proper) ++count;
        int v = 0;
        while (v < n && ++color[v] == k) {
            color[v] = 0;
            ++v;
        }
        if (v == n) break;
    }
    return count;
}

namespace {

std::string entries_to_string(std::span<const Rational> v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ", ";
        if (is_integer(v[i])) {
            os << to_integer(v[i]).str();
        } else {
            os << rational_to_string(v[i]);
        }
    }
    os << ")";
    return os.str();
}

void guard_power(std::int64_t base, int dim, std::int64_t guard) {
    double total = 1.0;
    for (int i = 0; i < dim; ++i) {
        total *= static_cast<double>(base);
        if (total > static_cast<double>(guard)) {
            throw GuardExceeded(std::to_string(base) + "^" + std::to_string(dim) +
                                " candidates exceed the configured guard");
        }
    }
}

struct Context {
    const Graph& g;
    const VerifyOptions& opt;
    GraphClassification cls;
    SpanningForestData forest;
    int rank; // |V| - c, the tension dimension
};

CheckResult skipped(const std::string& reason) {
    return {CheckStatus::skipped, reason};
}

CheckResult passfail(bool ok, const std::string& details) {
    return {ok ? CheckStatus::pass : CheckStatus::fail, details};
}

// g-constraints of h((k+1)^d - p, d-1), the modular bound.
CheckResult check_bounds_modular(const Context& ctx, bool flow,
                                 const std::optional<CountingPolynomial>& p) {
    if (flow && ctx.cls.has_bridge) return skipped("bridge");
    if (!flow && ctx.cls.has_loop) return skipped("loop");
    const int d = flow ? ctx.cls.cyclomatic_number : ctx.rank;
    if (d == 0) return skipped("degree zero");
    if (!p) return skipped("guard");
    const ExactPolynomial diff = standard_family(StandardFamily::shifted_power, d) - p->poly;
    const CoeffVector h = h_vector(diff, d - 1);
    const GConstraintReport rep = g_constraints(h.entries);
    std::string details = "h = " + entries_to_string(h.entries) + " at ref degree " +
                          std::to_string(d - 1);
    if (!rep.pass()) details += "; " + rep.first_violation;
    return passfail(rep.pass(), details);
}

// g-constraints of h(L_P - p, dim-1), the integral bound.
CheckResult check_bounds_integral(const Context& ctx, bool flow,
                                  const std::optional<ExactPolynomial>& ehr,
                                  const std::optional<CountingPolynomial>& p) {
    if (flow && ctx.cls.has_bridge) return skipped("bridge");
    if (!flow && ctx.cls.has_loop) return skipped("loop");
    const int d = flow ? ctx.cls.cyclomatic_number : ctx.rank;
    if (d == 0) return skipped("degree zero");
    if (!ehr || !p) return skipped("guard");
    const ExactPolynomial diff = *ehr - p->poly;
    // the reference degree is fixed to dim - 1 even when deg(L_P - p) drops
    const CoeffVector h = h_vector(diff, d - 1);
    const GConstraintReport rep = g_constraints(h.entries);
    std::string details = "h = " + entries_to_string(h.entries) + " at ref degree " +
                          std::to_string(d - 1);
    if (!rep.pass()) details += "; " + rep.first_violation;
    return passfail(rep.pass(), details);
}

CheckResult check_palindromic(const Context& ctx, bool flow,
                              const std::optional<CoeffVector>& hstar) {
    if (flow && ctx.cls.has_bridge) return skipped("bridge");
    if (!flow && ctx.cls.has_loop) return skipped("loop");
    if (!hstar) return skipped("guard");
    return passfail(is_palindromic(hstar->entries),
                    "h* = " + entries_to_string(hstar->entries));
}

CheckResult check_reflexive(const Context& ctx, bool flow) {
    if (flow && ctx.cls.has_bridge) return skipped("bridge");
    if (!flow && ctx.cls.has_loop) return skipped("loop");
    const HPolytope poly =
        flow ? flow_polytope(ctx.g, ctx.forest) : tension_polytope(ctx.g, ctx.forest);
    guard_power(2 * (ctx.opt.k_max + 1) * poly.box_bound + 1, poly.dim, ctx.opt.guard);
    const bool ok = reflexivity_check(poly, ctx.opt.k_max);
    return passfail(ok, "verified up to k_max = " + std::to_string(ctx.opt.k_max));
}

// Entrywise h* bounds; theorem hypotheses hold per connected component, so
// disconnected graphs are checked component by component.
CheckResult check_sandwich(const Context& ctx, bool flow) {
    if (flow && ctx.cls.has_bridge) return skipped("bridge");
    if (!flow && ctx.cls.has_loop) return skipped("loop");
    std::vector<Graph> comps = split_components(ctx.g);
    std::ostringstream details;
    bool ok = true;
    for (std::size_t ci = 0; ci < comps.size(); ++ci) {
        const Graph& comp = comps[ci];
        const SpanningForestData forest = spanning_forest(comp);
        const int n = comp.vertex_count();
        const int d = flow ? forest.cycle_rank() : forest.forest_size();
        const HPolytope poly =
            flow ? flow_polytope(comp, forest) : tension_polytope(comp, forest);
        guard_power(2 * (poly.dim + 1) * poly.box_bound + 1, poly.dim, ctx.opt.guard);
        const CoeffVector hstar = hstar_vector(ehrhart_polynomial(poly), d);
        std::vector<Rational> lower(d + 1), upper(d + 1);
        for (int i = 0; i <= d; ++i) {
            if (flow) {
                lower[i] = Rational(binomial(BigInt(d), i));
                upper[i] = Rational(macmahon(d + 1, i + 1));
            } else {
                lower[i] = Rational(eulerian(n, i + 1));
                upper[i] = Rational(macmahon(n, i + 1));
            }
        }
        bool comp_ok = true;
        for (int i = 0; i <= d && comp_ok; ++i) {
            comp_ok = lower[i] <= hstar.entries[i] && hstar.entries[i] <= upper[i];
        }
        if (comps.size() > 1) details << "component " << ci + 1 << ": ";
        details << entries_to_string(lower) << " <= h* = " << entries_to_string(hstar.entries)
                << " <= " << entries_to_string(upper) << (comp_ok ? "" : " VIOLATED");
        if (ci + 1 < comps.size()) details << "; ";
        ok = ok && comp_ok;
    }
    return passfail(ok, details.str());
}

CheckResult check_chromatic(const Context& ctx, const std::optional<CountingPolynomial>& mten) {
    if (!mten) return skipped("guard");
    if (ctx.g.vertex_count() > 6) return skipped("brute-force coloring limited to 6 vertices");
    const ExactPolynomial chromatic =
        poly_pow(ExactPolynomial::variable(), ctx.cls.component_count) * mten->poly;
    for (std::int64_t k = 1; k <= 4; ++k) {
        const Rational predicted = chromatic(k);
        const std::int64_t actual = count_proper_colorings(ctx.g, k);
        if (predicted != Rational(actual)) {
            return passfail(false, "k = " + std::to_string(k) + ": k^c * mtension = " +
                                       rational_to_string(predicted) + " but coloring count = " +
                                       std::to_string(actual));
        }
    }
    return passfail(true, "matches proper-coloring counts for k = 1..4");
}

CheckResult check_tutte(const Context& ctx, const std::optional<CountingPolynomial>& mflow,
                        const std::optional<CountingPolynomial>& mten) {
    if (!mflow || !mten) return skipped("guard");
    if (ctx.g.edge_count() > 16) return skipped("deletion-contraction limited to 16 edges");
    const ModularPolynomials from_tutte = modular_polys_from_tutte(ctx.g);
    const bool flow_ok = from_tutte.mflow == mflow->poly;
    const bool tension_ok = from_tutte.mtension == mten->poly;
    std::string details;
    if (!flow_ok) {
        details += "mflow: tutte gives " + from_tutte.mflow.to_string() + ", enumeration gives " +
                   mflow->poly.to_string();
    }
    if (!tension_ok) {
        if (!details.empty()) details += "; ";
        details += "mtension: tutte gives " + from_tutte.mtension.to_string() +
                   ", enumeration gives " + mten->poly.to_string();
    }
    if (flow_ok && tension_ok) details = "tutte evaluations match enumeration";
    return passfail(flow_ok && tension_ok, details);
}

} // namespace

TheoremReport verify_graph(const Graph& g, const VerifyOptions& options) {
    Context ctx{g, options, classify(g), spanning_forest(g), 0};
    ctx.rank = g.vertex_count() - ctx.cls.component_count;

    TheoremReport rep{options.graph_id, g, ctx.cls, {}, {}, {}, {}, {}, {}, {}, {}, {}};

    auto fit = [&](CountKind kind, bool modular) -> std::optional<CountingPolynomial> {
        const int d = is_flow_kind(kind) ? ctx.cls.cyclomatic_number : ctx.rank;
        const int dim = is_flow_kind(kind) ? ctx.forest.cycle_rank() : ctx.forest.forest_size();
        try {
            guard_power(modular ? d + 1 : 2 * (d + 1), dim, options.guard);
            return polynomial_of(g, ctx.forest, kind);
        } catch (const GuardExceeded&) {
            return std::nullopt;
        }
    };
    rep.mflow = fit(CountKind::modular_flow, true);
    rep.mtension = fit(CountKind::modular_tension, true);
    rep.iflow = fit(CountKind::integral_flow, false);
    rep.itension = fit(CountKind::integral_tension, false);

    auto fit_ehrhart = [&](bool flow) -> std::optional<ExactPolynomial> {
        const HPolytope poly =
            flow ? flow_polytope(g, ctx.forest) : tension_polytope(g, ctx.forest);
        try {
            guard_power(2 * (poly.dim + 1) * poly.box_bound + 1, poly.dim, options.guard);
            return ehrhart_polynomial(poly);
        } catch (const GuardExceeded&) {
            return std::nullopt;
        }
    };
    rep.ehrhart_flow = fit_ehrhart(true);
    rep.ehrhart_tension = fit_ehrhart(false);
    if (rep.ehrhart_flow) {
        rep.hstar_flow = hstar_vector(*rep.ehrhart_flow, ctx.forest.cycle_rank());
    }
    if (rep.ehrhart_tension) {
        rep.hstar_tension = hstar_vector(*rep.ehrhart_tension, ctx.forest.forest_size());
    }

    auto requested = [&options](const std::string& name) {
        return options.checks.empty() ||
               std::find(options.checks.begin(), options.checks.end(), name) !=
                   options.checks.end();
    };
    auto run = [&rep, &requested](const std::string& name, auto&& fn) {
        if (!requested(name)) return;
        CheckResult result;
        try {
            result = fn();
        } catch (const GuardExceeded& e) {
            result = skipped(std::string("guard: ") + e.what());
        } catch (const std::exception& e) {
            result = passfail(false, std::string("internal error: ") + e.what());
        }
        rep.checks.emplace_back(name, std::move(result));
    };

    run("bounds_modular_flow", [&] { return check_bounds_modular(ctx, true, rep.mflow); });
    run("bounds_modular_tension", [&] { return check_bounds_modular(ctx, false, rep.mtension); });
    run("bounds_integral_flow",
        [&] { return check_bounds_integral(ctx, true, rep.ehrhart_flow, rep.iflow); });
    run("bounds_integral_tension",
        [&] { return check_bounds_integral(ctx, false, rep.ehrhart_tension, rep.itension); });
    run("palindromic_flow", [&] { return check_palindromic(ctx, true, rep.hstar_flow); });
    run("palindromic_tension", [&] { return check_palindromic(ctx, false, rep.hstar_tension); });
    run("reflexive_flow", [&] { return check_reflexive(ctx, true); });
    run("reflexive_tension", [&] { return check_reflexive(ctx, false); });
    run("tension_sandwich", [&] { return check_sandwich(ctx, false); });
    run("flow_sandwich", [&] { return check_sandwich(ctx, true); });
    run("chromatic_identity", [&] { return check_chromatic(ctx, rep.mtension); });
    run("tutte_consistency", [&] { return check_tutte(ctx, rep.mflow, rep.mtension); });
    return rep;
}

} // namespace nzpoly
