#include "curvop/errors.hpp"
#include "curvop/parse.hpp"
#include "curvop/presets.hpp"

#include <gtest/gtest.h>

using namespace curvop;

namespace {

Element parse_in(const Presentation& p, std::string_view s, int zero_arity = 0) {
    return parse_element(s, p.mode(), p.generators(), zero_arity);
}

// Sets the named generators to zero inside an element.
Element kill(const Element& x, const std::vector<std::string>& names) {
    return x.filter([&](const Tree& t) {
        for (const auto& n : names)
            if (t.contains(n)) return false;
        return true;
    });
}

}  // namespace

TEST(Presets, TGenerators) {
    Presentation t = build_preset(PresetKind::T, 0);
    ASSERT_EQ(t.generators().size(), 2u);
    EXPECT_EQ(t.d.generator("alpha").degree, 0);
    EXPECT_EQ(t.d.generator("kappa").degree, -1);
    EXPECT_EQ(t.d.value("alpha"), parse_in(t, "kappa"));
    EXPECT_TRUE(t.d.value("kappa").is_zero());
    EXPECT_TRUE(check_square_zero(t.d, 0).ok());
}

TEST(Presets, LowArityDifferentials) {
    Presentation c = build_preset(PresetKind::cAinf, 3);
    EXPECT_EQ(c.d.value("mu_0"), parse_in(c, "-mu_1(mu_0)"));
    EXPECT_EQ(c.d.value("mu_1"), parse_in(c, "-mu_1(mu_1(1)) - mu_2(mu_0, 1) - mu_2(1, mu_0)"));
    Presentation l = build_preset(PresetKind::cLinf, 3);
    EXPECT_EQ(l.d.value("ell_0"), parse_in(l, "-ell_1(ell_0)"));
    EXPECT_EQ(l.d.value("ell_1"), parse_in(l, "-ell_1(ell_1(1)) - ell_2(1, ell_0)"));
}

TEST(Presets, TruncationIsRecorded) {
    Presentation c2 = build_preset(PresetKind::cAinf, 2);
    Presentation c3 = build_preset(PresetKind::cAinf, 3);
    EXPECT_TRUE(c2.inexact.count("mu_2"));
    EXPECT_FALSE(c3.inexact.count("mu_2"));
    const Element full = c3.d.value("mu_2");
    const Element cut = c2.d.value("mu_2");
    EXPECT_EQ(full.size(), 6u);
    EXPECT_EQ(cut, full.filter([](const Tree& t) { return !t.contains("mu_3"); }));
    EXPECT_EQ(full, parse_in(c3,
                             "-mu_2(mu_1(1), 2) - mu_2(1, mu_1(2)) - mu_1(mu_2(1, 2))"
                             " - mu_3(mu_0, 1, 2) - mu_3(1, mu_0, 2) - mu_3(1, 2, mu_0)"));
}

TEST(Presets, UnknownName) { EXPECT_THROW(build_preset("bogus", 3), InvalidArgument); }

TEST(Presets, GeneratorsAndFlags) {
    Presentation l = build_preset(PresetKind::Linf, 4);
    ASSERT_EQ(l.generators().size(), 3u);
    for (const Generator& g : l.generators()) {
        EXPECT_EQ(g.degree, -1);
        EXPECT_EQ(g.symmetry, Symmetry::invariant);
    }
    EXPECT_EQ(build_preset(PresetKind::AinfPlus, 4).generators().front().name, "mu_1");
    EXPECT_EQ(build_preset(PresetKind::cAinf, 4).kappa, std::optional<std::string>("mu_0"));
}

class PresetSquareZero : public ::testing::TestWithParam<std::pair<PresetKind, int>> {};

TEST_P(PresetSquareZero, ExactOnCheckedArities) {
    const auto [kind, n] = GetParam();
    Presentation p = build_preset(kind, n + 2);
    Report r = check_square_zero(p.d, n);
    EXPECT_TRUE(r.ok()) << r.to_string();
    int checked = 0;
    for (const auto& l : r.lines) checked += l.pass ? 1 : 0;
    EXPECT_EQ(checked, n - preset_min_arity(kind) + 1);
}

INSTANTIATE_TEST_SUITE_P(
    All, PresetSquareZero,
    ::testing::Values(std::pair{PresetKind::cAinf, 5}, std::pair{PresetKind::AinfPlus, 5},
                      std::pair{PresetKind::Ainf, 5}, std::pair{PresetKind::cLinf, 4},
                      std::pair{PresetKind::LinfPlus, 4}, std::pair{PresetKind::Linf, 4}),
    [](const auto& info) { return std::string(to_string(info.param.first)); });

TEST(Presets, QuotientConsistency) {
    for (auto [curved, plus, plain, mode] :
         {std::tuple{PresetKind::cAinf, PresetKind::AinfPlus, PresetKind::Ainf, Mode::nonsymmetric},
          std::tuple{PresetKind::cLinf, PresetKind::LinfPlus, PresetKind::Linf, Mode::symmetric}}) {
        Presentation c = build_preset(curved, 5), pl = build_preset(plus, 5), a = build_preset(plain, 5);
        for (int n = 1; n <= 5; ++n) {
            const std::string g = op_name(mode, n);
            EXPECT_EQ(kill(c.d.value(g), {op_name(mode, 0)}), pl.d.value(g)) << g;
            if (n >= 2)
                EXPECT_EQ(kill(c.d.value(g), {op_name(mode, 0), op_name(mode, 1)}), a.d.value(g)) << g;
        }
    }
}

TEST(Presets, SymmetricDifferentialIsInvariant) {
    Presentation l = build_preset(PresetKind::cLinf, 5);
    for (int n = 2; n <= 4; ++n) {
        const Element v = l.d.value(op_name(Mode::symmetric, n));
        for (int a = 1; a < n; ++a) EXPECT_EQ(act(Permutation::transposition(n, a, a + 1), v), v);
    }
}

TEST(Presets, MutationDetected) {
    Presentation p = build_preset(PresetKind::cAinf, 5);
    const Element v = p.d.value("mu_2");
    for (const auto& [t, c] : v.terms()) {
        Element m = v;
        m.add_canonical(t, -2 * c);
        Presentation q = p;
        q.d.set_value("mu_2", m);
        EXPECT_FALSE(check_square_zero(q.d, 3).ok()) << "flipping " << t.to_string();
    }
}

TEST(Coproduct, WithT) {
    Presentation c = build_preset(PresetKind::cAinf, 4);
    Presentation pt = coproduct_with_T(c, 2);
    EXPECT_EQ(pt.alpha_truncation, 2);
    EXPECT_TRUE(pt.d.has_generator("alpha"));
    EXPECT_TRUE(pt.d.has_generator("kappa_T"));
    EXPECT_THROW(coproduct_with_T(pt, 2), NameCollision);
    // d(mu_2(alpha, -)) = d(mu_2) o_1 alpha + (-1)^{|mu_2|} mu_2(kappa_T, -).
    Element x = parse_in(pt, "mu_2(alpha, 1)");
    Element expected = compose(pt.d.value("mu_2"), 1, parse_in(pt, "alpha")) - parse_in(pt, "mu_2(kappa_T, 1)");
    EXPECT_EQ(apply(pt.d, x), expected);
    Presentation trivial{"empty", Derivation(Mode::nonsymmetric, {})};
    Presentation t = coproduct_with_T(trivial, 3);
    EXPECT_EQ(t.generators().size(), 2u);
    EXPECT_TRUE(check_square_zero(t.d, 0).ok());
}

TEST(DerivationExamples, SpecCases) {
    Presentation pt = coproduct_with_T(build_preset(PresetKind::cAinf, 4), 3);
    EXPECT_EQ(apply(pt.d, parse_in(pt, "mu_0")), parse_in(pt, "-mu_1(mu_0)"));
    Derivation dT(Mode::nonsymmetric, pt.generators());
    dT.set_value("alpha", parse_in(pt, "kappa_T"));
    EXPECT_EQ(apply(dT, parse_in(pt, "mu_2(alpha, alpha)")),
              parse_in(pt, "-mu_2(kappa_T, alpha) - mu_2(alpha, kappa_T)"));
    EXPECT_THROW(apply(dT, parse_element("nu", Mode::nonsymmetric, std::vector<Generator>{kappa_generator("nu")})),
                 UnknownGenerator);
}

TEST(Bracket, Examples) {
    Presentation p = build_preset(PresetKind::cAinf, 4);
    Element k = parse_in(p, "mu_0"), m1 = parse_in(p, "mu_1(1)"), m2 = parse_in(p, "mu_2(1,2)");
    EXPECT_TRUE(bracket(k, k).is_zero());
    EXPECT_EQ(bracket(m1, k), parse_in(p, "mu_1(mu_0)"));
    EXPECT_EQ(bracket(m2, k), parse_in(p, "mu_2(mu_0, 1) + mu_2(1, mu_0)"));
    // Antisymmetry.
    EXPECT_EQ(bracket(k, m2), bracket(m2, k));
    EXPECT_EQ(bracket(m2, m1), -(-bracket(m1, m2)));
}

TEST(WeightSplit, CurvedAinf) {
    Presentation p = build_preset(PresetKind::cAinf, 4);
    auto w = split_by_weight(p.d, "mu_0");
    const Element k = parse_in(p, "mu_0");
    EXPECT_TRUE(w.d1.value("mu_0").is_zero());
    EXPECT_EQ(w.d0.value("mu_0"), p.d.value("mu_0"));
    for (int n = 1; n <= 3; ++n) {
        const std::string g = op_name(Mode::nonsymmetric, n);
        EXPECT_EQ(w.d0.value(g) + w.d1.value(g), p.d.value(g));
        EXPECT_EQ(w.d1.value(g), -bracket(Element::generator(Mode::nonsymmetric, mu_generator(n + 1)), k)) << g;
    }
    Presentation t = build_preset(PresetKind::T, 0);
    auto wt = split_by_weight(t.d, "kappa");
    EXPECT_TRUE(wt.d0.values().empty());
    EXPECT_EQ(wt.d1.value("alpha"), parse_in(t, "kappa"));
    const Generator g{"g", 1, -2, Symmetry::planar};
    Derivation worse(Mode::nonsymmetric, {g, mu_generator(3), kappa_generator()});
    worse.set_value("g", parse_element("mu_3(kappa, 1, kappa)", Mode::nonsymmetric, worse.generators()));
    EXPECT_THROW(split_by_weight(worse, "kappa"), NonMixedDifferential);
}

TEST(Reports, Format) {
    Presentation p = build_preset(PresetKind::cAinf, 4);
    Presentation q = p;
    q.d.set_value("mu_1", -p.d.value("mu_1"));
    const std::string text = check_square_zero(q.d, 1).to_string();
    EXPECT_NE(text.find("mu_0 FAIL residue="), std::string::npos) << text;
    EXPECT_EQ(check_square_zero(p.d, 1).to_string(), "mu_0 PASS\nmu_1 PASS\n");
}
