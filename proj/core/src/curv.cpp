#include "curvop/curv.hpp"

#include "curvop/errors.hpp"

#include <algorithm>
#include <numeric>

namespace curvop {

std::vector<Generator> CurvObject::q0_generators() const {
    std::vector<Generator> out;
    for (const Generator& g : generators)
        if (g.name != kappa) out.push_back(g);
    return out;
}

const Generator& CurvObject::kappa_generator() const {
    for (const Generator& g : generators)
        if (g.name == kappa) return g;
    throw UnknownGenerator("distinguished generator '" + kappa + "' is not among the generators");
}

Element CurvObject::kappa_element() const { return Element::generator(mode, kappa_generator()); }

TermFilter CurvObject::filter() const {
    if (alpha_truncation < 0) return {};
    const int cap = alpha_truncation;
    return [cap](const Tree& t) { return t.count(kAlpha) <= cap; };
}

CurvObject curv_from_presentation(const Presentation& p) {
    if (!p.kappa) throw InvalidArgument("presentation " + p.name + " has no distinguished generator");
    CurvObject q;
    q.name = p.name;
    q.mode = p.mode();
    q.generators = p.generators();
    q.kappa = *p.kappa;
    auto w = split_by_weight(p.d, q.kappa);
    q.d0 = std::move(w.d0);
    q.d1 = std::move(w.d1);
    q.arity_bound = p.arity_bound;
    q.alpha_truncation = p.alpha_truncation;
    return q;
}

CurvObject curv_preset(PresetKind kind, int arity_bound, Mode t_mode) {
    return curv_from_presentation(build_preset(kind, arity_bound, t_mode));
}

Report validate_curv(const CurvObject& q, int arity_bound) {
    Report rep;
    const Generator* k = nullptr;
    for (const Generator& g : q.generators)
        if (g.name == q.kappa) k = &g;
    if (!k) {
        rep.add_failure("kappa", "distinguished generator missing");
        return rep;
    }
    if (k->arity != 0 || k->degree != -1) {
        rep.add_failure("kappa", "distinguished generator must have arity 0 and degree -1");
        return rep;
    }
    rep.add("d1(" + q.kappa + ")", q.d1.value(q.kappa), "d1 must vanish on the distinguished generator");

    for (const Generator& g : q.generators) {
        if (g.arity > arity_bound) continue;
        const int own = g.name == q.kappa ? 1 : 0;
        for (int which = 0; which < 2; ++which) {
            const Element v = (which == 0 ? q.d0 : q.d1).value(g.name);
            Element wrong(q.mode, g.arity);
            for (const auto& [t, c] : v.terms())
                if (t.count(q.kappa) != own + which) wrong.add_canonical(t, c);
            rep.add((which == 0 ? "weight d0(" : "weight d1(") + g.name + ")", wrong, "weight grading");
        }
    }

    const TermFilter keep = q.filter();
    const int cmp = q.alpha_truncation < 0 ? -1 : q.alpha_truncation - 2;
    auto cut = [&](const Element& x) { return cmp < 0 ? x : truncate_count(x, kAlpha, cmp); };
    for (const Generator& g : q.generators) {
        if (g.arity > arity_bound) continue;
        const Element x = Element::generator(q.mode, g);
        const Element a0 = apply(q.d0, x, keep), a1 = apply(q.d1, x, keep);
        rep.add("d0d0(" + g.name + ")", cut(apply(q.d0, a0, keep)));
        rep.add("d0d1+d1d0(" + g.name + ")", cut(apply(q.d0, a1, keep) + apply(q.d1, a0, keep)));
        rep.add("d1d1(" + g.name + ")", cut(apply(q.d1, a1, keep)));
    }
    return rep;
}

namespace {

// t with its target-th kappa vertex (depth-first) turned into an external leaf.
// Nonsymmetric: labels are renumbered in planar order. Symmetric: the new leaf
// is labelled arity+1. Also reports the label of the new leaf.
Tree open_kappa(const Tree& t, const std::string& kappa, int target, Mode mode, int arity, int& new_label) {
    int counter = 0, index = 0;
    std::function<Tree(const Tree&)> go = [&](const Tree& u) -> Tree {
        if (u.is_leaf()) return mode == Mode::nonsymmetric ? Tree::leaf(++counter) : u;
        if (u.generator().name == kappa && index++ == target) {
            new_label = mode == Mode::nonsymmetric ? ++counter : arity + 1;
            return Tree::leaf(new_label);
        }
        std::vector<Tree> kids;
        for (const Tree& c : u.children()) kids.push_back(go(c));
        return Tree::vertex(u.generator(), std::move(kids));
    };
    return go(t);
}

}  // namespace

Element kappa_homotopy(const Element& x, const Generator& kappa) {
    const Mode mode = x.mode();
    Element r(mode, x.arity() + 1);
    const Element k = Element::generator(mode, kappa);
    for (const auto& [t, c] : x.terms()) {
        const int total = t.count(kappa.name);
        for (int target = 0; target < total; ++target) {
            int pos = 0;
            const Tree u = open_kappa(t, kappa.name, target, mode, x.arity(), pos);
            const Element ue = Element::from_tree(mode, u);
            if (ue.is_zero()) continue;
            // Sign making (u o_pos kappa) = t.
            const Element back = compose(ue, pos, k);
            const Rational s = back.coefficient(t) / ue.terms().begin()->second;
            if (s != 1 && s != -1)
                throw ConsistencyFailure("homotopy step did not recompose to " + t.to_string());
            r += (c * s) * ue;
        }
    }
    return r;
}

namespace {

// Groups terms by arity + number of kappas, the quantity preserved by [-, kappa].
std::map<int, Element> split_by_size(const Element& x, const std::string& kappa) {
    std::map<int, Element> out;
    for (const auto& [t, c] : x.terms()) {
        auto [it, ins] = out.try_emplace(x.arity() + t.count(kappa), x.mode(), x.arity());
        it->second.add_canonical(t, c);
    }
    return out;
}

std::vector<Permutation> all_permutations(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    std::vector<Permutation> out;
    do out.emplace_back(v);
    while (std::next_permutation(v.begin(), v.end()));
    return out;
}

}  // namespace

Element solve_bracket_kappa(const Element& p, const Generator& kappa) {
    if (p.arity() < 1) throw InvalidArgument("solve_bracket_kappa needs positive arity");
    const Element k = Element::generator(p.mode(), kappa);
    if (p.is_zero()) return Element(p.mode(), p.arity() + 1);
    if (!bracket(p, k).is_zero()) throw NotClosed("[p, kappa] != 0 for p = " + p.to_string());
    Element q(p.mode(), p.arity() + 1);
    for (const auto& [n, part] : split_by_size(p, kappa.name)) q += Rational(1, n) * kappa_homotopy(part, kappa);
    if (bracket(q, k) != p) throw NotSolvable("no q with [q, kappa] = " + p.to_string());
    return q;
}

Element solve_compose_kappa(const Element& x, const Generator& kappa) {
    if (x.mode() != Mode::symmetric) throw ModeMismatch("solve_compose_kappa is for symmetric operads");
    const int m = x.arity();
    const Element k = Element::generator(x.mode(), kappa);
    Element result(x.mode(), m + 1);
    if (x.is_zero()) return result;
    if (!bracket(x, k).is_zero()) throw NotClosed("[x, kappa] != 0 for x = " + x.to_string());
    Element h(x.mode(), m + 1);
    for (const auto& [n, part] : split_by_size(x, kappa.name))
        h += Rational(m + 1, n) * kappa_homotopy(part, kappa);
    const auto perms = all_permutations(m + 1);
    for (const Permutation& s : perms) result += act(s, h);
    result *= Rational(1, static_cast<long>(perms.size()));
    if (compose(result, 1, k) != x) throw NotSolvable("no invariant nu with nu o_1 kappa = " + x.to_string());
    return result;
}

InitialMorphism construct_initial_morphism(const CurvObject& q, int arity_bound) {
    if (arity_bound < 0) throw InvalidArgument("arity bound must be non-negative");
    const Mode mode = q.mode;
    const Generator& kg = q.kappa_generator();
    const TermFilter keep = q.filter();
    InitialMorphism out;
    out.nu.push_back(q.kappa_element());
    const Element d0k = apply(q.d0, out.nu[0], keep);
    // d0 kappa = -nu_1(kappa): strip the kappa by the homotopy (exactly one kappa per term).
    if (arity_bound >= 1) {
        Element nu1 = mode == Mode::symmetric ? solve_compose_kappa(-d0k, kg) : -kappa_homotopy(d0k, kg);
        if (compose(nu1, 1, out.nu[0]) != -d0k)
            throw ConsistencyFailure("d0(kappa) is not of the form -nu_1(kappa)");
        out.nu.push_back(std::move(nu1));
    }
    for (int k = 1; k < arity_bound; ++k) {
        const Element rhs = -apply(q.d1, out.nu[static_cast<std::size_t>(k)], keep);
        Element next = mode == Mode::symmetric ? solve_compose_kappa(rhs, kg) : solve_bracket_kappa(rhs, kg);
        out.nu.push_back(std::move(next));
    }
    // In an alpha-truncated object nu_j is exact only up to trunc - j alphas.
    const int trunc = q.alpha_truncation;
    if (trunc >= 0)
        for (std::size_t j = 1; j < out.nu.size(); ++j)
            out.nu[j] = truncate_count(out.nu[j], kAlpha, std::max(trunc - static_cast<int>(j), -1));

    auto lookup = [&](int j) -> std::optional<Element> {
        if (j < 0 || j >= static_cast<int>(out.nu.size())) return std::nullopt;
        return out.nu[static_cast<std::size_t>(j)];
    };
    const PresetKind plus = mode == Mode::symmetric ? PresetKind::LinfPlus : PresetKind::AinfPlus;
    for (int j = 1; j <= arity_bound; ++j) {
        const Element& nu = out.nu[static_cast<std::size_t>(j)];
        Element diff = apply(q.d0, nu, keep) - structure_formula(plus, j, lookup);
        if (trunc >= 0) diff = truncate_count(diff, kAlpha, trunc - j - 1);
        if (!diff.is_zero())
            throw ConsistencyFailure("d0(nu_" + std::to_string(j) + ") violates the structure relation: " +
                                     diff.to_string());
        if (mode == Mode::symmetric)
            for (int a = 1; a < j; ++a)
                if (act(Permutation::transposition(j, a, a + 1), nu) != nu)
                    throw ConsistencyFailure("nu_" + std::to_string(j) + " is not invariant");
    }

    std::vector<Generator> source;
    for (int j = 0; j <= arity_bound; ++j)
        source.push_back(mode == Mode::symmetric ? ell_generator(j) : mu_generator(j));
    out.morphism = Morphism(mode, source, q.generators, q.alpha_truncation);
    for (int j = 0; j <= arity_bound; ++j)
        out.morphism.set_image(source[static_cast<std::size_t>(j)].name, out.nu[static_cast<std::size_t>(j)]);
    return out;
}

Morphism terminal_morphism(const CurvObject& q) {
    const Mode mode = q.mode;
    const Presentation t = build_preset(PresetKind::T, 0, mode);
    const Generator& tk = t.d.generator("kappa");
    const Generator& ta = t.d.generator(kAlpha);
    Morphism f(mode, q.generators, t.generators());
    const Element qk = q.kappa_element();
    for (const Generator& g : q.generators) {
        if (g.name == q.kappa) {
            f.set_image(g.name, Element::generator(mode, tk));
        } else if (g.arity == 0 && g.degree == 0) {
            const Rational c = q.d1.value(g.name).coefficient(qk.terms().begin()->first);
            f.set_image(g.name, Element::generator(mode, ta, c));
        }
    }
    int bound = 0;
    for (const Generator& g : q.generators) bound = std::max(bound, g.arity);
    const Report r = check_chain_map(f, q.d(), t.d, bound);
    if (!r.ok()) throw ConsistencyFailure("terminal assignment is not a chain map:\n" + r.to_string());
    return f;
}

}  // namespace curvop
