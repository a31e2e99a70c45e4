#pragma once

#include "curvop/derivation.hpp"
#include "curvop/presets.hpp"

namespace curvop {

/// d^2 = 0 on every generator of arity <= arity, computed in the preset
/// truncated at arity + 2 so that every term of d^2 is available.
Report verify_preset(PresetKind kind, int arity, Mode t_mode = Mode::nonsymmetric);

/// d(eta(g)) = eta(d g) for the structure generators of arity <= arity,
/// compared on terms with at most `alpha` alphas. The morphism is built one
/// alpha and one arity beyond the compared window.
Report verify_eta(Mode mode, int arity, int alpha);

/// Rough upper estimates of the number of terms manipulated by the checks.
double estimate_preset_size(PresetKind kind, int arity);
double estimate_eta_size(Mode mode, int arity, int alpha);

}  // namespace curvop
