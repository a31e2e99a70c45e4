#include "curvop/curv.hpp"
#include "curvop/errors.hpp"
#include "curvop/parse.hpp"

#include <gtest/gtest.h>

using namespace curvop;

namespace {

Element gen(Mode mode, const Generator& g) { return Element::generator(mode, g); }

CurvObject with_beta(Rational c) {
    // Q0 = <beta> (arity 0, degree 0) with d1 beta = c kappa.
    CurvObject q;
    q.name = "beta";
    q.mode = Mode::nonsymmetric;
    const Generator beta{"beta", 0, 0, Symmetry::planar};
    q.generators = {beta, kappa_generator()};
    q.kappa = "kappa";
    q.d0 = Derivation(q.mode, q.generators);
    q.d1 = Derivation(q.mode, q.generators);
    q.d1.set_value("beta", Element::generator(q.mode, kappa_generator(), c));
    return q;
}

}  // namespace

TEST(ValidateCurv, Presets) {
    EXPECT_TRUE(validate_curv(curv_preset(PresetKind::cAinf, 5), 3).ok());
    EXPECT_TRUE(validate_curv(curv_preset(PresetKind::cLinf, 5), 3).ok());
    EXPECT_TRUE(validate_curv(curv_preset(PresetKind::T, 0), 0).ok());
    EXPECT_TRUE(validate_curv(curv_preset(PresetKind::T, 0, Mode::symmetric), 0).ok());
}

TEST(ValidateCurv, DetectsConditionThree) {
    CurvObject q = curv_preset(PresetKind::T, 0);
    const Generator g{"g", 2, 0, Symmetry::planar};
    q.generators.push_back(g);
    q.d0.add_generator(g);
    q.d1.add_generator(g);
    q.d1.set_value("kappa", parse_element("g(kappa, kappa)", Mode::nonsymmetric, q.generators));
    Report r = validate_curv(q, 2);
    EXPECT_FALSE(r.ok());
    EXPECT_NE(r.to_string().find("d1(kappa) FAIL"), std::string::npos) << r.to_string();
}

TEST(ValidateCurv, DetectsWrongWeight) {
    CurvObject q = curv_preset(PresetKind::cAinf, 4);
    q.d0.set_value("mu_1", q.d0.value("mu_1") + q.d1.value("mu_1"));
    EXPECT_FALSE(validate_curv(q, 2).ok());
}

TEST(BracketSolver, RoundTrips) {
    Presentation p = build_preset(PresetKind::cAinf, 5);
    const Generator k = mu_generator(0);
    const Element kk = gen(Mode::nonsymmetric, k);
    const Element m2 = gen(Mode::nonsymmetric, mu_generator(2));
    EXPECT_EQ(solve_bracket_kappa(bracket(m2, kk), k), m2);
    EXPECT_TRUE(solve_bracket_kappa(Element(Mode::nonsymmetric, 1), k).is_zero());
    const Element m32 = compose(gen(Mode::nonsymmetric, mu_generator(3)), 1, m2);
    EXPECT_EQ(solve_bracket_kappa(bracket(m32, kk), k), m32);
    // Elements already containing kappa.
    const Element mixed = parse_element("mu_3(mu_0, 1, mu_2(2, 3)) - 2 * mu_4(1, 2, mu_0, mu_1(3))", Mode::nonsymmetric,
                                        p.generators());
    const Element b = bracket(mixed, kk);
    const Element q = solve_bracket_kappa(b, k);
    EXPECT_EQ(bracket(q, kk), b);
    EXPECT_THROW(solve_bracket_kappa(m2, k), NotClosed);
}

TEST(ComposeSolver, SymmetricRoundTrip) {
    const Generator k = ell_generator(0);
    const Element kk = gen(Mode::symmetric, k);
    for (int n = 1; n <= 4; ++n) {
        const Element l = gen(Mode::symmetric, ell_generator(n));
        EXPECT_EQ(solve_compose_kappa(compose(l, 1, kk), k), l);
    }
    // An invariant element with a kappa inside.
    const Element l2 = gen(Mode::symmetric, ell_generator(2));
    const Element nu = compose(gen(Mode::symmetric, ell_generator(3)), 3, kk);  // ell_3(-, -, kappa)
    const Element x = compose(nu, 1, kk);
    const Element solved = solve_compose_kappa(x, k);
    EXPECT_EQ(compose(solved, 1, kk), x);
    EXPECT_EQ(act(Permutation::transposition(2, 1, 2), solved), solved);
    (void)l2;
}

TEST(InitialMorphism, IdentityOnCurvedAinf) {
    CurvObject q = curv_preset(PresetKind::cAinf, 4);
    auto im = construct_initial_morphism(q, 4);
    ASSERT_EQ(im.nu.size(), 5u);
    for (int j = 0; j <= 4; ++j)
        EXPECT_EQ(im.nu[static_cast<std::size_t>(j)], gen(Mode::nonsymmetric, mu_generator(j))) << j;
}

TEST(InitialMorphism, IdentityOnCurvedLinf) {
    CurvObject q = curv_preset(PresetKind::cLinf, 4);
    auto im = construct_initial_morphism(q, 4);
    for (int j = 0; j <= 4; ++j)
        EXPECT_EQ(im.nu[static_cast<std::size_t>(j)], gen(Mode::symmetric, ell_generator(j))) << j;
}

TEST(InitialMorphism, IntoT) {
    for (Mode mode : {Mode::nonsymmetric, Mode::symmetric}) {
        CurvObject q = curv_preset(PresetKind::T, 0, mode);
        auto im = construct_initial_morphism(q, 4);
        EXPECT_EQ(im.nu[0], gen(mode, kappa_generator()));
        for (int j = 1; j <= 4; ++j) EXPECT_TRUE(im.nu[static_cast<std::size_t>(j)].is_zero());
    }
}

TEST(TerminalMorphism, Recipe) {
    CurvObject t = curv_preset(PresetKind::T, 0);
    Morphism f = terminal_morphism(t);
    EXPECT_EQ(f.image("alpha"), gen(Mode::nonsymmetric, alpha_generator()));
    EXPECT_EQ(f.image("kappa"), gen(Mode::nonsymmetric, kappa_generator()));

    Morphism g = terminal_morphism(curv_preset(PresetKind::cAinf, 4));
    EXPECT_EQ(g.image("mu_0"), gen(Mode::nonsymmetric, kappa_generator()));
    for (int n = 1; n <= 4; ++n) EXPECT_TRUE(g.image("mu_" + std::to_string(n)).is_zero());

    Morphism h = terminal_morphism(with_beta(3));
    EXPECT_EQ(h.image("beta"), Element::generator(Mode::nonsymmetric, alpha_generator(), 3));
}
