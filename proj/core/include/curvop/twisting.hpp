#pragma once

#include "curvop/curv.hpp"

#include <map>
#include <string>
#include <vector>

namespace curvop {

inline constexpr std::string_view kKappaHat = "kappa_hat";

/// eta(mu_n) truncated at `precision` alphas; n = 0 includes kappa_T.
Element eta_cAinf(int n, int precision);
/// eta(ell_n) with 1/k! weights.
Element eta_cLinf(int n, int precision);
Element eta(Mode mode, int n, int precision);

/// Presentation P v T hosting eta: P is cAinf/cLinf with generators up to
/// arity_bound + precision + 2 so that its differential is exact where used.
Presentation eta_target(Mode mode, int arity_bound, int precision);
/// The structure operad (cAinf or cLinf) on generators of arity <= arity_bound.
Presentation eta_source(Mode mode, int arity_bound);
/// eta on generators of arity <= arity_bound.
Morphism eta_morphism(Mode mode, int arity_bound, int precision);

/// P -> P v T, every generator to itself.
Morphism section_sigma(const Presentation& p, int precision);
/// P v T -> P: identity on P, alpha and kappa_T to zero.
Morphism counit(const Presentation& p);

/// The d_T derivation (alpha -> kappa_T) over the given generators, which
/// must include alpha and kappa_T.
Derivation d_T_over(const std::vector<Generator>& gens);

/// sum_k w_k f(mu_k)(alpha, ..., alpha), w_k = 1 (nonsymmetric) or 1/k!.
Element mu0_alpha(const Morphism& f, int precision);

/// R(P) for a structure morphism f: cAinf/cLinf -> P. The distinguished
/// generator kappa_hat stands for kappa_T + mu0_alpha(f).
CurvObject apply_R(const Presentation& p, const Morphism& f, int precision);

/// rho with d_T rho = lambda for closed lambda of kappa_T-weight one; zero
/// for lambda = 0. Throws NotClosed, or NotInImage for weight-0 (or >1) parts.
Element solve_dT(const Element& lambda, const std::vector<Generator>& gens);

/// A morphism into P v T together with its alpha-graded pieces.
struct UnitMorphism {
    Morphism phi;
    /// pieces[k][name] = Phi^k(name).
    std::vector<std::map<std::string, Element>> pieces;
};

/// Phi: Q -> P v T extending a chain map f: Q -> P, built alpha-degree by
/// alpha-degree. Generators of Q up to arity_bound + precision must be
/// present (with exact differentials); P's differential must be exact up to
/// arity arity_bound + precision + 1.
UnitMorphism construct_unit(const CurvObject& q, const Presentation& p, const Morphism& f, int precision,
                            int arity_bound);

/// The identity Q -> Q as a plain presentation morphism.
Presentation underlying_presentation(const CurvObject& q);
Morphism identity_morphism(const Presentation& p);

/// d(Phi(g)) - Phi(d g) on generators of arity <= arity_bound, compared on
/// terms with fewer than precision alphas (the exact range of a truncated Phi).
Report verify_chain_map(const Morphism& phi, const Derivation& d_source, const Derivation& d_target,
                        int arity_bound);

}  // namespace curvop
