#include "curvop/checks.hpp"

#include "curvop/errors.hpp"
#include "curvop/twisting.hpp"

#include <cmath>

namespace curvop {

Report verify_preset(PresetKind kind, int arity, Mode t_mode) {
    if (arity < 0) throw InvalidArgument("arity must be non-negative");
    const Presentation p = build_preset(kind, arity + 2, t_mode);
    return check_square_zero(p.d, arity, p.filter());
}

Report verify_eta(Mode mode, int arity, int alpha) {
    if (arity < 0 || alpha < 0) throw InvalidArgument("bounds must be non-negative");
    const Morphism f = eta_morphism(mode, arity + 1, alpha + 1);
    const Presentation src = eta_source(mode, arity + 1);
    const Presentation tgt = eta_target(mode, arity + 1, alpha + 1);
    return verify_chain_map(f, src.d, tgt.d, arity);
}

namespace {

double factorial(int n) { return std::tgamma(n + 1.0); }

double binomial(int n, int k) { return factorial(n) / (factorial(k) * factorial(n - k)); }

}  // namespace

double estimate_preset_size(PresetKind kind, int arity) {
    const bool sym = preset_mode(kind) == Mode::symmetric;
    double total = 0;
    for (int n = 0; n <= arity + 2; ++n) {
        const double d = sym ? std::pow(2.0, n) * (n + 1) : (n + 1.0) * (n + 2.0) / 2;
        total += d * d;
    }
    return total;
}

double estimate_eta_size(Mode mode, int arity, int alpha) {
    const bool sym = mode == Mode::symmetric;
    double total = 0;
    for (int n = 0; n <= arity + 1; ++n)
        for (int k = 0; k <= alpha + 1; ++k) {
            const int m = n + k;
            const double terms = sym ? 1 : binomial(m, k);
            const double d = sym ? std::pow(2.0, m) * (m + 1) : (m + 1.0) * (m + 2.0) / 2;
            total += terms * d * (m + 1);
        }
    return total;
}

}  // namespace curvop
