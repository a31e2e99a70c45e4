#include "curvop/presets.hpp"

#include "curvop/errors.hpp"

namespace curvop {

PresetKind parse_preset_kind(std::string_view name) {
    if (name == "Ainf") return PresetKind::Ainf;
    if (name == "AinfPlus") return PresetKind::AinfPlus;
    if (name == "cAinf") return PresetKind::cAinf;
    if (name == "Linf") return PresetKind::Linf;
    if (name == "LinfPlus") return PresetKind::LinfPlus;
    if (name == "cLinf") return PresetKind::cLinf;
    if (name == "T") return PresetKind::T;
    throw InvalidArgument("unknown preset '" + std::string(name) + "'");
}

std::string_view to_string(PresetKind k) {
    switch (k) {
        case PresetKind::Ainf: return "Ainf";
        case PresetKind::AinfPlus: return "AinfPlus";
        case PresetKind::cAinf: return "cAinf";
        case PresetKind::Linf: return "Linf";
        case PresetKind::LinfPlus: return "LinfPlus";
        case PresetKind::cLinf: return "cLinf";
        case PresetKind::T: return "T";
    }
    return "?";
}

Mode preset_mode(PresetKind k) {
    switch (k) {
        case PresetKind::Linf:
        case PresetKind::LinfPlus:
        case PresetKind::cLinf: return Mode::symmetric;
        default: return Mode::nonsymmetric;
    }
}

int preset_min_arity(PresetKind k) {
    switch (k) {
        case PresetKind::Ainf:
        case PresetKind::Linf: return 2;
        case PresetKind::AinfPlus:
        case PresetKind::LinfPlus: return 1;
        default: return 0;
    }
}

TermFilter Presentation::filter() const {
    if (alpha_truncation < 0) return {};
    const int cap = alpha_truncation;
    return [cap](const Tree& t) { return t.count(kAlpha) <= cap; };
}

Element Presentation::truncate(const Element& x) const {
    return alpha_truncation < 0 ? x : truncate_count(x, kAlpha, alpha_truncation);
}

Generator mu_generator(int n) { return {"mu_" + std::to_string(n), n, -1, Symmetry::planar}; }
Generator ell_generator(int n) { return {"ell_" + std::to_string(n), n, -1, Symmetry::invariant}; }
Generator alpha_generator() { return {std::string(kAlpha), 0, 0, Symmetry::planar}; }
Generator kappa_generator(std::string name) { return {std::move(name), 0, -1, Symmetry::planar}; }

std::string op_name(Mode mode, int n) { return (mode == Mode::symmetric ? "ell_" : "mu_") + std::to_string(n); }

Element ainf_formula(PresetKind variant, int n, const OpLookup& op, bool* truncated) {
    const int qmin = preset_min_arity(variant);
    Element r(Mode::nonsymmetric, n);
    for (int q = qmin; q <= n; ++q) {
        for (int p = 0; p + q <= n; ++p) {
            const int rr = n - p - q;
            if (variant == PresetKind::Ainf && p + rr < 1) continue;
            const int outer = p + 1 + rr;
            auto x = op(outer);
            auto y = op(q);
            if (!x || !y) {
                if (truncated) *truncated = true;
                continue;
            }
            r -= compose(*x, p + 1, *y);
        }
    }
    return r;
}

Element linf_formula(PresetKind variant, int n, const OpLookup& op, bool* truncated) {
    const int qmin = preset_min_arity(variant);
    const int pmin = variant == PresetKind::Linf ? 1 : 0;
    Element r(Mode::symmetric, n);
    for (int q = qmin; q <= n; ++q) {
        const int p = n - q;
        if (p < pmin) continue;
        auto x = op(p + 1);
        auto y = op(q);
        if (!x || !y) {
            if (truncated) *truncated = true;
            continue;
        }
        const Element c = compose(*x, 1, *y);
        // The inner block occupies leaves 1..q; sum over its possible images.
        for (const Permutation& inv : enumerate_inverse_shuffles(q, p)) r -= act(inv.inverse(), c);
    }
    return r;
}

Element structure_formula(PresetKind variant, int n, const OpLookup& op, bool* truncated) {
    if (variant == PresetKind::T) throw InvalidArgument("T has no structure formula");
    return preset_mode(variant) == Mode::symmetric ? linf_formula(variant, n, op, truncated)
                                                   : ainf_formula(variant, n, op, truncated);
}

Presentation build_preset(PresetKind kind, int arity_bound, Mode t_mode) {
    if (arity_bound < 0) throw InvalidArgument("arity bound must be non-negative");
    Presentation p;
    p.name = std::string(to_string(kind));
    if (kind == PresetKind::T) {
        p.d = Derivation(t_mode, {alpha_generator(), kappa_generator()});
        p.d.set_value(std::string(kAlpha), Element::generator(t_mode, kappa_generator()));
        p.kappa = "kappa";
        return p;
    }
    const Mode mode = preset_mode(kind);
    const int lo = preset_min_arity(kind);
    std::vector<Generator> gens;
    for (int n = lo; n <= arity_bound; ++n)
        gens.push_back(mode == Mode::symmetric ? ell_generator(n) : mu_generator(n));
    p.d = Derivation(mode, gens);
    p.arity_bound = arity_bound;
    auto op = [&](int k) -> std::optional<Element> {
        if (k < lo || k > arity_bound) return std::nullopt;
        return Element::generator(mode, gens[static_cast<std::size_t>(k - lo)]);
    };
    for (const Generator& g : gens) {
        bool truncated = false;
        p.d.set_value(g.name, structure_formula(kind, g.arity, op, &truncated));
        if (truncated) p.inexact.insert(g.name);
    }
    if (kind == PresetKind::cAinf || kind == PresetKind::cLinf) p.kappa = op_name(mode, 0);
    return p;
}

Presentation build_preset(std::string_view name, int arity_bound, Mode t_mode) {
    return build_preset(parse_preset_kind(name), arity_bound, t_mode);
}

Presentation coproduct_with_T(const Presentation& p, int alpha_trunc) {
    if (alpha_trunc < 0) throw InvalidArgument("alpha truncation must be non-negative");
    if (p.d.has_generator(kAlpha) || p.d.has_generator(kKappaT))
        throw NameCollision("presentation already has a generator named alpha or kappa_T");
    Presentation r = p;
    r.name = p.name + "vT";
    const Generator kt = kappa_generator(std::string(kKappaT));
    r.d.add_generator(kt);
    r.d.add_generator(alpha_generator(), Element::generator(p.mode(), kt));
    r.alpha_truncation = alpha_trunc;
    r.kappa.reset();
    return r;
}

}  // namespace curvop
