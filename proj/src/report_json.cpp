#include "nzpoly/report_json.hpp"

#include <sstream>

namespace nzpoly {

using nlohmann::json;

json polynomial_to_json(const ExactPolynomial& p) {
    json arr = json::array();
    for (const Rational& c : p.coefficients()) {
        arr.push_back(rational_to_string(c));
    }
    return arr;
}

ExactPolynomial polynomial_from_json(const json& j) {
    std::vector<Rational> coeffs;
    for (const auto& s : j) {
        coeffs.push_back(rational_from_string(s.get<std::string>()));
    }
    return ExactPolynomial(std::move(coeffs));
}

json coeff_vector_to_json(const CoeffVector& v) {
    json entries = json::array();
    for (const Rational& e : v.entries) entries.push_back(rational_to_string(e));
    return json{{"kind", to_string(v.kind)}, {"d", v.ref_degree}, {"entries", entries}};
}

CoeffVector coeff_vector_from_json(const json& j) {
    CoeffVector v;
    v.kind = vector_kind_from_string(j.at("kind").get<std::string>());
    v.ref_degree = j.at("d").get<int>();
    for (const auto& s : j.at("entries")) {
        v.entries.push_back(rational_from_string(s.get<std::string>()));
    }
    return v;
}

json polytope_to_json(const HPolytope& p) {
    json rows = json::array();
    for (const auto& [a, b] : p.rows) {
        json normal = json::array();
        for (std::int64_t v : a) normal.push_back(std::to_string(v));
        rows.push_back(json::array({normal, std::to_string(b)}));
    }
    return json{{"dim", p.dim}, {"rows", rows}, {"box_bound", std::to_string(p.box_bound)}};
}

HPolytope polytope_from_json(const json& j) {
    HPolytope p;
    p.dim = j.at("dim").get<int>();
    p.box_bound = std::stoll(j.at("box_bound").get<std::string>());
    for (const auto& row : j.at("rows")) {
        std::vector<std::int64_t> a;
        for (const auto& v : row.at(0)) a.push_back(std::stoll(v.get<std::string>()));
        p.rows.emplace_back(std::move(a), std::stoll(row.at(1).get<std::string>()));
    }
    return p;
}

json g_constraint_report_to_json(const GConstraintReport& report) {
    json j{{"monotone_ok", report.monotone_ok},
           {"symmetry_ok", report.symmetry_ok},
           {"m_vector_ok", report.m_vector_ok},
           {"pass", report.pass()}};
    if (report.first_violation_index) {
        j["first_violation"] = json{{"index", *report.first_violation_index},
                                    {"description", report.first_violation}};
    } else {
        j["first_violation"] = nullptr;
    }
    return j;
}

namespace {

json optional_polynomial(const std::optional<CountingPolynomial>& p) {
    if (!p) return nullptr;
    return polynomial_to_json(p->poly);
}

} // namespace

json report_to_json(const TheoremReport& report) {
    json edges = json::array();
    for (const Edge& e : report.graph.edges()) {
        edges.push_back(json::array({report.graph.label(e.tail), report.graph.label(e.head)}));
    }
    json checks = json::object();
    for (const auto& [name, result] : report.checks) {
        checks[name] = json{{"status", to_string(result.status)}, {"details", result.details}};
    }
    return json{
        {"graph", json{{"spec", report.graph_id}, {"edges", edges}}},
        {"classification",
         json{{"component_count", report.classification.component_count},
              {"cyclomatic_number", report.classification.cyclomatic_number},
              {"has_bridge", report.classification.has_bridge},
              {"has_loop", report.classification.has_loop}}},
        {"polynomials",
         json{{"mflow", optional_polynomial(report.mflow)},
              {"mtension", optional_polynomial(report.mtension)},
              {"iflow", optional_polynomial(report.iflow)},
              {"itension", optional_polynomial(report.itension)}}},
        {"hstar",
         json{{"flow", report.hstar_flow ? coeff_vector_to_json(*report.hstar_flow) : json(nullptr)},
              {"tension", report.hstar_tension ? coeff_vector_to_json(*report.hstar_tension)
                                               : json(nullptr)}}},
        {"checks", checks},
    };
}

std::string report_to_table(const TheoremReport& report) {
    std::ostringstream os;
    os << "graph " << report.graph_id << ": " << report.graph.vertex_count() << " vertices, "
       << report.graph.edge_count() << " edges, c = " << report.classification.component_count
       << ", r = " << report.classification.cyclomatic_number
       << (report.classification.has_bridge ? ", has bridge" : "")
       << (report.classification.has_loop ? ", has loop" : "") << "\n";
    auto poly_line = [&os](const char* name, const std::optional<CountingPolynomial>& p) {
        os << "  " << name << ": ";
        if (!p) {
            os << "(guard exceeded)";
        } else {
            os << p->poly.to_string() << (p->degenerate ? "  [degenerate]" : "");
        }
        os << "\n";
    };
    poly_line("modular flow   ", report.mflow);
    poly_line("modular tension", report.mtension);
    poly_line("integral flow  ", report.iflow);
    poly_line("integral tension", report.itension);
    auto hstar_line = [&os](const char* name, const std::optional<CoeffVector>& v) {
        os << "  " << name << ": ";
        if (!v) {
            os << "(guard exceeded)";
        } else {
            os << "(";
            for (std::size_t i = 0; i < v->entries.size(); ++i) {
                if (i) os << ", ";
                if (is_integer(v->entries[i])) {
                    os << to_integer(v->entries[i]).str();
                } else {
                    os << rational_to_string(v->entries[i]);
                }
            }
            os << ")";
        }
        os << "\n";
    };
    hstar_line("h*(F)", report.hstar_flow);
    hstar_line("h*(T)", report.hstar_tension);
    os << "  checks:\n";
    for (const auto& [name, result] : report.checks) {
        os << "    " << name << ": " << to_string(result.status);
        if (!result.details.empty()) os << "  (" << result.details << ")";
        os << "\n";
    }
    return os.str();
}

} // namespace nzpoly
