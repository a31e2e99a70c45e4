#pragma once

#include "curvop/derivation.hpp"

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <string_view>

namespace curvop {

enum class PresetKind { Ainf, AinfPlus, cAinf, Linf, LinfPlus, cLinf, T };

PresetKind parse_preset_kind(std::string_view name);
std::string_view to_string(PresetKind k);
Mode preset_mode(PresetKind k);
/// Least generator arity of the family (2, 1 or 0); T has only nullary generators.
int preset_min_arity(PresetKind k);

/// A free operad with a differential, possibly truncated in arity and in the
/// number of alpha vertices.
struct Presentation {
    std::string name;
    Derivation d;
    /// Generators of arity above this bound are absent; -1 means unbounded.
    int arity_bound = -1;
    /// Distinguished arity-0 degree -1 generator, if any.
    std::optional<std::string> kappa;
    /// Elements keep at most this many alpha vertices; -1 means no truncation.
    int alpha_truncation = -1;
    /// Generators whose differential lost terms to the arity bound.
    std::set<std::string> inexact;

    Mode mode() const { return d.mode(); }
    const std::vector<Generator>& generators() const { return d.generators(); }
    /// Drops terms exceeding the alpha truncation (identity if untruncated).
    TermFilter filter() const;
    Element truncate(const Element& x) const;
};

Generator mu_generator(int n);
Generator ell_generator(int n);
Generator alpha_generator();
/// kappa-like generator (arity 0, degree -1).
Generator kappa_generator(std::string name = "kappa");

inline constexpr std::string_view kAlpha = "alpha";
inline constexpr std::string_view kKappaT = "kappa_T";

/// Structure-relation right-hand sides. `op(k)` supplies the element standing
/// for the arity-k operation or nullopt if unavailable; such terms are skipped
/// and reported through `truncated`.
///   A-type: -sum_{p+q+r=n} op(p+1+r) o_{p+1} op(q)
///   L-type: -sum_{p+q=n} sum_{shuffles} (op(p+1) o_1 op(q))^sigma
/// Index ranges follow `variant` (Ainf/AinfPlus/cAinf resp. Linf/LinfPlus/cLinf).
using OpLookup = std::function<std::optional<Element>(int)>;
Element ainf_formula(PresetKind variant, int n, const OpLookup& op, bool* truncated = nullptr);
Element linf_formula(PresetKind variant, int n, const OpLookup& op, bool* truncated = nullptr);
/// Dispatches on the mode of the variant.
Element structure_formula(PresetKind variant, int n, const OpLookup& op, bool* truncated = nullptr);

/// Generators up to arity_bound. T ignores the bound and takes `t_mode`.
Presentation build_preset(PresetKind kind, int arity_bound, Mode t_mode = Mode::nonsymmetric);
Presentation build_preset(std::string_view name, int arity_bound, Mode t_mode = Mode::nonsymmetric);

/// P v T with d = d_P + d_T (d alpha = kappa_T), truncated at alpha_trunc alphas.
Presentation coproduct_with_T(const Presentation& p, int alpha_trunc);

/// Names of the structure generators mu_n / ell_n.
std::string op_name(Mode mode, int n);

}  // namespace curvop
