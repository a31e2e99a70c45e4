#pragma once

#include "curvop/algebra.hpp"

#include <string>

namespace curvop {

/// JSON algebra manifest:
///   { "kind": "cAinf" | "cLinf",
///     "basis": [{"name": "x", "degree": 0}, ...],
///     "differential": [{"inputs": ["x"], "output": "y", "coefficient": "1/2"}, ...],
///     "ops": {"0": [{"inputs": [], "output": "y", "coefficient": "2"}], "2": [...]},
///     "nilpotency_bound": 2,
///     "elements": {"mc": {"x": "1"}} }
/// Coefficients are integers or rational strings. Throws ParseError.
AlgebraStructure parse_algebra_manifest(const std::string& text);
AlgebraStructure load_algebra_manifest(const std::string& path);

/// Deterministic serialization (entries in basis order, arities ascending).
std::string write_algebra_manifest(const AlgebraStructure& s);

}  // namespace curvop
