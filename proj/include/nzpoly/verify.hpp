#pragma once

#include "nzpoly/coeff_vectors.hpp"
#include "nzpoly/counting.hpp"
#include "nzpoly/graph.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace nzpoly {

enum class CheckStatus { pass, fail, skipped };

std::string to_string(CheckStatus s);

struct CheckResult {
    CheckStatus status = CheckStatus::skipped;
    std::string details;
};

/// Names of all per-graph theorem checks, in report order.
const std::vector<std::string>& all_check_names();

struct TheoremReport {
    std::string graph_id;
    Graph graph;
    GraphClassification classification;

    // absent when the enumeration guard refused the computation
    std::optional<CountingPolynomial> mflow, mtension, iflow, itension;
    std::optional<ExactPolynomial> ehrhart_flow, ehrhart_tension;
    std::optional<CoeffVector> hstar_flow, hstar_tension;

    std::vector<std::pair<std::string, CheckResult>> checks;

    const CheckResult* find(const std::string& name) const;
    bool all_passed() const; // no check failed (skips allowed)
};

struct VerifyOptions {
    int k_max = 3;                    // reflexivity dilate bound
    std::int64_t guard = 100'000'000; // per-computation candidate budget
    std::vector<std::string> checks;  // empty = run all
    std::string graph_id;             // label echoed into the report
};

/// Runs every requested theorem check on g: g-constraint bounds for the
/// modular and integral polynomials, palindromicity and reflexivity of the
/// flow/tension polytopes, the h* sandwich bounds, the chromatic-polynomial
/// identity, and Tutte-vs-enumeration consistency.
TheoremReport verify_graph(const Graph& g, const VerifyOptions& options = {});

/// Proper colorings of g with k colors by direct enumeration (k^|V|
/// candidates); loops make the count 0.
std::int64_t count_proper_colorings(const Graph& g, std::int64_t k);

} // namespace nzpoly
