#pragma once

#include <string>

#include "torica/coxring.hpp"

namespace torica {

/// {"dim": d, "rays": [[...], ...], "max_cones": [[0-based], ...]}.
/// Rays must already be primitive (NonPrimitiveRay otherwise).
Fan fan_from_json(const std::string& text);
std::string fan_to_json(const Fan& fan);

/// {"degree_divisor": [b_1, ...], "terms": [{"exponents": [...], "coeff": "p/q"}, ...]}.
/// Every term must have the class of the degree divisor (DegreeMismatch).
GradedPolynomial polynomial_from_json(const ToricVariety& X, const std::string& text);
/// Writes the canonical representative of deg f as the degree divisor.
std::string polynomial_to_json(const ToricVariety& X, const GradedPolynomial& f);

/// "3,0,0" or "3 0 0" -> (3, 0, 0).
IntVector parse_divisor(const std::string& text);

/// Whole file as a string; InvalidInput if it cannot be read.
std::string read_file(const std::string& path);

}  // namespace torica
