#include "curvop/twisting.hpp"

#include "curvop/errors.hpp"

namespace curvop {

namespace {

Element alpha_element(Mode mode) { return Element::generator(mode, alpha_generator()); }

Tree alphas_then(const Generator& g, const std::vector<int>& gaps) {
    // gaps[j] alphas precede leaf j+1 (the last entry trails the final leaf).
    std::vector<Tree> kids;
    const Tree a = Tree::vertex(alpha_generator());
    int leaf = 1;
    for (std::size_t j = 0; j < gaps.size(); ++j) {
        for (int i = 0; i < gaps[j]; ++i) kids.push_back(a);
        if (j + 1 < gaps.size()) kids.push_back(Tree::leaf(leaf++));
    }
    return Tree::vertex(g, std::move(kids));
}

// All compositions of `total` into `parts` non-negative summands.
void compositions(int total, int parts, std::vector<int>& cur, const std::function<void()>& emit) {
    if (static_cast<int>(cur.size()) == parts - 1) {
        cur.push_back(total);
        emit();
        cur.pop_back();
        return;
    }
    for (int i = 0; i <= total; ++i) {
        cur.push_back(i);
        compositions(total - i, parts, cur, emit);
        cur.pop_back();
    }
}

int degree_before(const Tree& t, std::string_view name) {
    int sum = 0;
    bool found = false;
    t.for_each_vertex([&](const Tree& v) {
        if (found) return;
        if (v.generator().name == name) {
            found = true;
            return;
        }
        sum += v.generator().degree;
    });
    return sum;
}

Element dT_chase(const Element& part, const Derivation& dT) {
    Element rho(part.mode(), part.arity());
    Element rem = part;
    std::size_t budget = 4 * part.size() + 4;
    while (!rem.is_zero()) {
        if (budget-- == 0) throw NotInImage("d_T leaf chasing did not terminate");
        const Tree t = rem.terms().begin()->first;
        const Rational c = rem.terms().begin()->second;
        const Element lift = Element::from_tree(part.mode(), rename_vertices(t, kKappaT, alpha_generator()));
        const Element dl = apply(dT, lift);
        const Rational s = dl.coefficient(t);
        if (s == 0) throw NotInImage("no alpha preimage for " + t.to_string());
        const Rational k = c / s;
        rho += k * lift;
        rem -= k * dl;
    }
    return rho;
}

Element dT_closed_formula(const Element& part) {
    Element rho(part.mode(), part.arity());
    for (const auto& [t, c] : part.terms()) {
        Rational k = c / (t.count(kAlpha) + 1);
        if (degree_before(t, kKappaT) % 2 != 0) k = -k;
        rho.add_tree(rename_vertices(t, kKappaT, alpha_generator()), k);
    }
    return rho;
}

}  // namespace

Element eta_cAinf(int n, int precision) {
    const Mode mode = Mode::nonsymmetric;
    Element r(mode, n);
    if (n == 0) r += Element::generator(mode, kappa_generator(std::string(kKappaT)));
    for (int s = 0; s <= precision; ++s) {
        std::vector<int> cur;
        compositions(s, n + 1, cur, [&] { r.add_tree(alphas_then(mu_generator(n + s), cur), 1); });
    }
    return r;
}

Element eta_cLinf(int n, int precision) {
    const Mode mode = Mode::symmetric;
    Element r(mode, n);
    if (n == 0) r += Element::generator(mode, kappa_generator(std::string(kKappaT)));
    for (int k = 0; k <= precision; ++k) {
        std::vector<int> gaps(static_cast<std::size_t>(n) + 1, 0);
        gaps[0] = k;
        r.add_tree(alphas_then(ell_generator(n + k), gaps), factorial_inverse(k));
    }
    return r;
}

Element eta(Mode mode, int n, int precision) {
    return mode == Mode::nonsymmetric ? eta_cAinf(n, precision) : eta_cLinf(n, precision);
}

Presentation eta_source(Mode mode, int arity_bound) {
    return build_preset(mode == Mode::nonsymmetric ? PresetKind::cAinf : PresetKind::cLinf, arity_bound);
}

Presentation eta_target(Mode mode, int arity_bound, int precision) {
    return coproduct_with_T(eta_source(mode, arity_bound + precision + 2), precision);
}

Morphism eta_morphism(Mode mode, int arity_bound, int precision) {
    const Presentation src = eta_source(mode, arity_bound);
    const Presentation tgt = eta_target(mode, arity_bound, precision);
    Morphism f(mode, src.generators(), tgt.generators(), precision);
    for (const Generator& g : src.generators()) f.set_image(g.name, eta(mode, g.arity, precision));
    return f;
}

Morphism section_sigma(const Presentation& p, int precision) {
    const Presentation pt = coproduct_with_T(p, precision);
    Morphism f(p.mode(), p.generators(), pt.generators(), precision);
    for (const Generator& g : p.generators()) f.set_image(g.name, Element::generator(p.mode(), g));
    return f;
}

Morphism counit(const Presentation& p) {
    const Presentation pt = coproduct_with_T(p, 0);
    Morphism f(p.mode(), pt.generators(), p.generators());
    for (const Generator& g : p.generators()) f.set_image(g.name, Element::generator(p.mode(), g));
    return f;
}

Derivation d_T_over(const std::vector<Generator>& gens) {
    if (gens.empty()) throw InvalidArgument("d_T needs a generator list");
    Mode mode = Mode::nonsymmetric;
    for (const Generator& g : gens)
        if (g.symmetry == Symmetry::invariant) mode = Mode::symmetric;
    Derivation d(mode, gens);
    if (!d.has_generator(kAlpha) || !d.has_generator(kKappaT))
        throw UnknownGenerator("d_T needs generators alpha and kappa_T");
    d.set_value(std::string(kAlpha), Element::generator(mode, d.generator(kKappaT)));
    return d;
}

Element mu0_alpha(const Morphism& f, int precision) {
    const Mode mode = f.mode();
    const Element a = alpha_element(mode);
    Element r(mode, 0);
    for (int k = 0; k <= precision; ++k) {
        const std::string name = op_name(mode, k);
        bool present = false;
        for (const Generator& g : f.source()) present = present || g.name == name;
        if (!present) throw TruncationExceeded("structure morphism lacks " + name);
        Element x = f.image(name);
        for (int i = 0; i < k; ++i) x = compose(x, 1, a);
        r += mode == Mode::symmetric ? factorial_inverse(k) * x : x;
    }
    return r;
}

CurvObject apply_R(const Presentation& p, const Morphism& f, int precision) {
    if (precision < 1) throw InvalidArgument("R needs alpha precision at least 1");
    const Mode mode = p.mode();
    const Presentation pt = coproduct_with_T(p, precision);
    const Element m0 = mu0_alpha(f, precision);
    const Generator khat = kappa_generator(std::string(kKappaHat));
    if (p.d.has_generator(kKappaHat)) throw NameCollision("presentation already has a generator named kappa_hat");

    std::vector<Generator> rgens = p.generators();
    rgens.push_back(alpha_generator());
    rgens.push_back(khat);
    Morphism psi(mode, pt.generators(), rgens, precision);
    for (const Generator& g : p.generators()) psi.set_image(g.name, Element::generator(mode, g));
    psi.set_image(std::string(kAlpha), alpha_element(mode));
    psi.set_image(std::string(kKappaT), Element::generator(mode, khat) - m0);

    const TermFilter keep = [precision](const Tree& t) { return t.count(kAlpha) <= precision; };
    const TermFilter keep_exact = [precision](const Tree& t) { return t.count(kAlpha) < precision; };
    Derivation d(mode, rgens);
    for (const Generator& g : rgens) {
        if (g.name == khat.name) continue;
        d.set_value(g.name, apply(psi, apply(pt.d, Element::generator(mode, g), keep), keep));
    }
    // d(kappa_hat) = d(kappa_T + mu0_alpha); its top alpha layer is incomplete.
    d.set_value(khat.name, apply(psi, apply(pt.d, m0, keep_exact), keep_exact));

    Presentation rp;
    rp.name = "R(" + p.name + ")";
    rp.d = std::move(d);
    rp.arity_bound = p.arity_bound;
    rp.kappa = khat.name;
    rp.alpha_truncation = precision;
    return curv_from_presentation(rp);
}

Element solve_dT(const Element& lambda, const std::vector<Generator>& gens) {
    if (lambda.is_zero()) return lambda;
    const Derivation dT = d_T_over(gens);
    Element rho(lambda.mode(), lambda.arity());
    for (const auto& [w, part] : count_split(lambda, kKappaT)) {
        if (part.is_zero()) continue;
        if (!apply(dT, part).is_zero()) throw NotClosed("d_T(lambda) != 0 in kappa_T-weight " + std::to_string(w));
        if (w == 0) throw NotInImage("nonzero kappa_T-weight 0 part is not a d_T boundary: " + part.to_string());
        if (w > 1) throw NotInImage("kappa_T-weight " + std::to_string(w) + " is not supported");
        rho += lambda.mode() == Mode::nonsymmetric ? dT_chase(part, dT) : dT_closed_formula(part);
    }
    if (apply(dT, rho) != lambda) throw ConsistencyFailure("d_T(rho) != lambda after solving");
    return rho;
}

Presentation underlying_presentation(const CurvObject& q) {
    Presentation p;
    p.name = q.name;
    p.d = q.d();
    p.arity_bound = q.arity_bound;
    p.kappa = q.kappa;
    p.alpha_truncation = q.alpha_truncation;
    return p;
}

Morphism identity_morphism(const Presentation& p) {
    Morphism f(p.mode(), p.generators(), p.generators());
    for (const Generator& g : p.generators()) f.set_image(g.name, Element::generator(p.mode(), g));
    return f;
}

UnitMorphism construct_unit(const CurvObject& q, const Presentation& p, const Morphism& f, int precision,
                            int arity_bound) {
    if (precision < 0) throw InvalidArgument("precision must be non-negative");
    if (q.mode != p.mode()) throw ModeMismatch("unit: source and target modes differ");
    const Mode mode = q.mode;
    const Presentation pt = coproduct_with_T(p, precision);
    const int max_arity = arity_bound + precision;

    const InitialMorphism init = construct_initial_morphism(q, precision);
    const Morphism g = compose(f, init.morphism);
    const Element phi_kappa = Element::generator(mode, kappa_generator(std::string(kKappaT))) + mu0_alpha(g, precision);

    Derivation dP = p.d;
    dP.add_generator(kappa_generator(std::string(kKappaT)));
    dP.add_generator(alpha_generator());
    const Derivation dQ = q.d();
    const std::vector<Generator> q0 = q.q0_generators();

    UnitMorphism u;
    u.pieces.resize(static_cast<std::size_t>(precision) + 1);
    for (const Generator& v : q0) u.pieces[0].emplace(v.name, f.image(v.name));

    for (int k = 0; k < precision; ++k) {
        Morphism phik(mode, q.generators, pt.generators(), k);
        phik.set_image(q.kappa, truncate_count(phi_kappa, kAlpha, k));
        for (const Generator& v : q0) {
            Element img(mode, v.arity);
            for (int j = 0; j <= k; ++j) {
                auto it = u.pieces[static_cast<std::size_t>(j)].find(v.name);
                if (it != u.pieces[static_cast<std::size_t>(j)].end()) img += it->second;
            }
            phik.set_image(v.name, img);
        }
        for (const Generator& v : q0) {
            if (v.arity > max_arity - k - 1) continue;
            const Element image_of_d = apply(phik, apply(dQ, Element::generator(mode, v)));
            Element lambda = count_split(image_of_d, kAlpha)[k];
            lambda -= apply(dP, u.pieces[static_cast<std::size_t>(k)].at(v.name));
            Element rho;
            try {
                rho = solve_dT(lambda, pt.generators());
            } catch (const NotInImage& e) {
                throw NotInImage("unit at " + v.name + ", alpha-degree " + std::to_string(k + 1) + ": " + e.what());
            } catch (const NotClosed& e) {
                throw NotClosed("unit at " + v.name + ", alpha-degree " + std::to_string(k + 1) + ": " + e.what());
            }
            u.pieces[static_cast<std::size_t>(k) + 1].emplace(v.name, rho.is_zero() ? Element(mode, v.arity) : rho);
        }
    }

    u.phi = Morphism(mode, q.generators, pt.generators(), precision);
    u.phi.set_image(q.kappa, phi_kappa);
    for (const Generator& v : q0) {
        if (v.arity > arity_bound) continue;
        Element img(mode, v.arity);
        for (const auto& piece : u.pieces) {
            auto it = piece.find(v.name);
            if (it != piece.end()) img += it->second;
        }
        u.phi.set_image(v.name, img);
    }
    return u;
}

Report verify_chain_map(const Morphism& phi, const Derivation& d_source, const Derivation& d_target,
                        int arity_bound) {
    const int cmp = phi.precision() < 0 ? -1 : phi.precision() - 1;
    return check_chain_map(phi, d_source, d_target, arity_bound, cmp);
}

}  // namespace curvop
