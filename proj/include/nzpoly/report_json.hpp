#pragma once

#include "nzpoly/coeff_vectors.hpp"
#include "nzpoly/constraints.hpp"
#include "nzpoly/polynomial.hpp"
#include "nzpoly/polytope.hpp"
#include "nzpoly/verify.hpp"

#include <json.hpp>

#include <string>

namespace nzpoly {

// All numbers are serialized as decimal strings ("num/den" for rationals)
// so consumers never face 64-bit overflow.

nlohmann::json polynomial_to_json(const ExactPolynomial& p);
ExactPolynomial polynomial_from_json(const nlohmann::json& j);

nlohmann::json coeff_vector_to_json(const CoeffVector& v);
CoeffVector coeff_vector_from_json(const nlohmann::json& j);

nlohmann::json polytope_to_json(const HPolytope& p);
HPolytope polytope_from_json(const nlohmann::json& j);

nlohmann::json g_constraint_report_to_json(const GConstraintReport& report);

nlohmann::json report_to_json(const TheoremReport& report);

/// Plain-text rendering of a report for terminal use.
std::string report_to_table(const TheoremReport& report);

} // namespace nzpoly
