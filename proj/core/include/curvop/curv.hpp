#pragma once

#include "curvop/morphism.hpp"
#include "curvop/presets.hpp"

#include <string>
#include <vector>

namespace curvop {

/// A presentation (Q, d, kappa, Q0): generators of Q0 plus one distinguished
/// arity-0 degree -1 generator, with d = d0 + d1 split by kappa-weight.
struct CurvObject {
    std::string name;
    Mode mode = Mode::nonsymmetric;
    std::vector<Generator> generators;
    std::string kappa;
    Derivation d0;
    Derivation d1;
    /// Largest generator arity present (-1: unbounded / not applicable).
    int arity_bound = -1;
    /// Alpha truncation of completed objects (-1: none).
    int alpha_truncation = -1;

    Derivation d() const { return sum(d0, d1); }
    std::vector<Generator> q0_generators() const;
    const Generator& kappa_generator() const;
    Element kappa_element() const;
    TermFilter filter() const;
};

/// Splits a presentation's differential by weight around its distinguished generator.
CurvObject curv_from_presentation(const Presentation& p);
/// The quadruple of a preset with a distinguished generator (cAinf, cLinf, T).
CurvObject curv_preset(PresetKind kind, int arity_bound, Mode t_mode = Mode::nonsymmetric);

/// Checks the defining conditions up to arity_bound: kappa is a nullary
/// degree -1 generator, d1(kappa) = 0, d0 preserves and d1 raises kappa-weight
/// by one, and d0^2 = d0 d1 + d1 d0 = d1^2 = 0. In alpha-truncated objects the
/// square identities are compared on terms with at most alpha_truncation-2 alphas.
Report validate_curv(const CurvObject& q, int arity_bound);

/// One step of the contracting homotopy for [-, kappa]: every kappa vertex in
/// turn becomes a new external leaf, signed so that grafting kappa back gives
/// the original tree. Nonsymmetric: the leaf keeps its planar position.
/// Symmetric: the leaf gets the largest label.
Element kappa_homotopy(const Element& x, const Generator& kappa);

/// Returns q with [q, kappa] = p for closed p of positive arity.
Element solve_bracket_kappa(const Element& p, const Generator& kappa);

/// Returns the S_{n+1}-invariant nu with nu o_1 kappa = x (symmetric mode).
Element solve_compose_kappa(const Element& x, const Generator& kappa);

struct InitialMorphism {
    /// nu_0 .. nu_bound.
    std::vector<Element> nu;
    /// mu_j (resp. ell_j) -> nu_j.
    Morphism morphism;
};

/// The unique morphism from cAinf (nonsymmetric) or cLinf (symmetric) into q,
/// built degree by degree and checked against the structure relations.
InitialMorphism construct_initial_morphism(const CurvObject& q, int arity_bound);

/// The morphism q -> T: kappa -> kappa, nullary degree-0 nu with d1 nu = c kappa
/// goes to c alpha, everything else to zero.
Morphism terminal_morphism(const CurvObject& q);

}  // namespace curvop
