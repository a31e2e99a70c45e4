#include "curvop/algebra.hpp"
#include "curvop/algebra_io.hpp"
#include "curvop/errors.hpp"
#include "curvop/parse.hpp"
#include "random_trees.hpp"

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

using namespace curvop;
using curvop::testing::TreeFactory;
using curvop::testing::test_generators;

namespace {

SpacePtr space(std::vector<BasisVector> b) { return std::make_shared<const GradedSpace>(std::move(b)); }

// Desuspension of T(x)/(x^3), |x| = -1: e_i = s x^i with mu_2(e_i, e_j) = (-1)^{|e_i|} e_{i+j}.
AlgebraStructure truncated_polynomial(bool curved, bool wrong_sign = false) {
    const SpacePtr sp = space({{"e0", 1}, {"e1", 0}, {"e2", -1}});
    AlgebraStructure s;
    s.space = sp;
    s.d_A = MultilinearMap(sp, 1, -1);
    s.nilpotency_bound = 2;
    MultilinearMap m(sp, 2, -1);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; i + j < 3; ++j) {
            const bool odd = wrong_sign ? false : sp->degree(i) % 2 != 0;
            m.add({i, j}, i + j, odd ? -1 : 1);
        }
    s.ops.emplace(2, m);
    if (curved) {
        MultilinearMap c(sp, 0, -1);
        c.add({}, 2, 5);
        s.ops.emplace(0, c);
    }
    return s;
}

AlgebraStructure symmetrized(const AlgebraStructure& a) {
    AlgebraStructure l = a;
    l.kind = AlgebraKind::cLinf;
    l.ops.clear();
    for (const auto& [n, f] : a.ops) {
        MultilinearMap g = f;
        if (n == 2) g += endo_act(Permutation({2, 1}), f);
        l.ops.emplace(n, g);
    }
    return l;
}

AlgebraStructure square_zero() {
    std::ifstream in(std::string(CURVOP_DATA_DIR) + "/square_zero.json");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_algebra_manifest(ss.str());
}

MultilinearMap random_map(const SpacePtr& sp, int arity, int degree, std::mt19937& rng) {
    MultilinearMap m(sp, arity, degree);
    std::uniform_int_distribution<int> coeff(-2, 2);
    MultilinearMap::Inputs in(static_cast<std::size_t>(arity), 0);
    while (true) {
        int deg = degree;
        for (std::size_t i : in) deg += sp->degree(i);
        for (std::size_t o = 0; o < sp->dim(); ++o)
            if (sp->degree(o) == deg) m.add(in, o, coeff(rng));
        std::size_t k = 0;
        while (k < in.size() && ++in[k] == sp->dim()) in[k++] = 0;
        if (k == in.size()) break;
    }
    return m;
}

Bindings random_bindings(const SpacePtr& sp, Mode mode, std::mt19937& rng) {
    Bindings b;
    for (const Generator& g : test_generators(mode)) {
        MultilinearMap m = random_map(sp, g.arity, g.degree, rng);
        if (g.symmetry == Symmetry::invariant) {
            std::vector<int> v(static_cast<std::size_t>(g.arity));
            std::iota(v.begin(), v.end(), 1);
            MultilinearMap sym(sp, g.arity, g.degree);
            do sym += endo_act(Permutation(v), m);
            while (std::next_permutation(v.begin(), v.end()));
            m = sym;
        }
        b.emplace(g.name, m);
    }
    return b;
}

}  // namespace

TEST(Endo, ComposeWithIdentity) {
    std::mt19937 rng(3);
    const SpacePtr sp = space({{"u", 1}, {"x", 0}, {"y", -1}});
    const MultilinearMap f = random_map(sp, 3, -1, rng);
    for (int i = 1; i <= 3; ++i) EXPECT_EQ(endo_compose(f, i, MultilinearMap::identity(sp)), f);
    EXPECT_EQ(endo_compose(MultilinearMap::identity(sp), 1, f), f);
    EXPECT_THROW(endo_compose(f, 4, f), PositionOutOfRange);
}

TEST(Endo, HandExpandedComposite) {
    const SpacePtr sp = space({{"u", 1}, {"x", 0}, {"y", -1}});
    const std::size_t u = 0, x = 1, y = 2;
    MultilinearMap f(sp, 2, -1), g(sp, 1, -1);
    f.add({u, x}, x, 1);
    f.add({u, u}, u, 1);
    f.add({x, x}, y, 1);
    g.add({u}, x, 1);
    g.add({x}, y, 1);
    MultilinearMap expect2(sp, 2, -2);
    expect2.add({u, u}, x, -1);  // g passes the odd input u
    expect2.add({x, u}, y, 1);
    EXPECT_EQ(endo_compose(f, 2, g), expect2);
    MultilinearMap expect1(sp, 2, -2);
    expect1.add({u, x}, y, 1);
    EXPECT_EQ(endo_compose(f, 1, g), expect1);
}

TEST(Endo, BoundaryOfChainMaps) {
    const SpacePtr sp = space({{"u", 1}, {"x", 0}, {"y", -1}});
    MultilinearMap d(sp, 1, -1);
    d.add({0}, 1, 1);
    EXPECT_TRUE(boundary(d, MultilinearMap::identity(sp)).is_zero());
    EXPECT_TRUE(boundary(d, d).is_zero());
    MultilinearMap f(sp, 1, 0);
    f.add({0}, 0, 1);
    EXPECT_FALSE(boundary(d, f).is_zero());
}

TEST(Realize, Basics) {
    const AlgebraStructure s = truncated_polynomial(false);
    const Mode ns = Mode::nonsymmetric;
    const auto gens = build_preset(PresetKind::cAinf, 3).generators();
    EXPECT_EQ(realize(s, parse_element("mu_2(1, 2)", ns, gens)), s.op(2));
    EXPECT_EQ(realize(s, parse_element("mu_2(mu_2(1, 2), 3)", ns, gens)), endo_compose(s.op(2), 1, s.op(2)));
    EXPECT_TRUE(realize(s, Element(ns, 2)).is_zero());
    EXPECT_THROW(realize(s.space, parse_element("mu_2(1, 2)", ns, gens), Bindings{}), UnboundGenerator);
}

class RealizeProperty : public ::testing::TestWithParam<Mode> {};

TEST_P(RealizeProperty, IsAnOperadMorphism) {
    const Mode mode = GetParam();
    TreeFactory fac(mode, 11);
    std::mt19937 rng(5);
    const SpacePtr sp = space({{"u", 1}, {"x", 0}, {"y", -1}});
    for (int trial = 0; trial < 40; ++trial) {
        const Bindings b = random_bindings(sp, mode, rng);
        const int n = 1 + trial % 3, m = trial % 3;
        const Element x = fac.element(n, 3), y = fac.element(m, 2);
        const int i = 1 + trial % n;
        EXPECT_EQ(realize(sp, compose(x, i, y), b), endo_compose(realize(sp, x, b), i, realize(sp, y, b))) << x << " o_"
                                                                                                          << i << " " << y;
        if (mode == Mode::symmetric) {
            const Permutation s = fac.permutation(n);
            EXPECT_EQ(realize(sp, act(s, x), b), endo_act(s, realize(sp, x, b)));
            // A raw representative realizes to the same map as its canonical form.
            const Tree raw = fac.shape(n, 3);
            Element direct(mode, n);
            direct.add_canonical(raw, 1);
            EXPECT_EQ(realize(sp, direct, b), realize(sp, Element::from_tree(mode, raw), b)) << raw.to_string();
        }
    }
}

INSTANTIATE_TEST_SUITE_P(Modes, RealizeProperty, ::testing::Values(Mode::nonsymmetric, Mode::symmetric));

TEST(CheckStructure, AssociativeAndCurvedExamples) {
    EXPECT_TRUE(check_structure(truncated_polynomial(false), 4).ok());
    EXPECT_TRUE(check_structure(truncated_polynomial(true), 4).ok());
    EXPECT_TRUE(check_structure(symmetrized(truncated_polynomial(true)), 4).ok());
    EXPECT_FALSE(check_structure(truncated_polynomial(false, true), 4).ok());
    AlgebraStructure zero;
    zero.space = space({{"x", 0}});
    zero.d_A = MultilinearMap(zero.space, 1, -1);
    EXPECT_TRUE(check_structure(zero, 4).ok());
    EXPECT_TRUE(check_structure(square_zero(), 4).ok());
}

TEST(CheckStructure, NonSymmetricLinfOpIsFlagged) {
    AlgebraStructure s = truncated_polynomial(false);
    s.kind = AlgebraKind::cLinf;
    EXPECT_FALSE(check_structure(s, 3).ok());
}

TEST(Curvature, Examples) {
    const AlgebraStructure s = square_zero();
    const GradedSpace& sp = *s.space;
    EXPECT_EQ(curvature_of(s, s.elements.at("zero")).coords, s.op(0).value().coords);
    for (int t = -3; t <= 4; ++t) {
        const AlgElement c = curvature_of(s, make_element(sp, {{"x", t}}));
        EXPECT_EQ(c.coords[sp.index("y")], Rational(2 - 3 * t + t * t)) << t;
        EXPECT_EQ(c.coords[sp.index("x")], 0);
    }
    EXPECT_TRUE(curvature_of(s, s.elements.at("mc")).is_zero());
    EXPECT_TRUE(curvature_of(s, s.elements.at("mc2")).is_zero());
    EXPECT_EQ(to_string(sp, curvature_of(s, s.elements.at("non_mc"))), "2 * y");

    AlgebraStructure flat = truncated_polynomial(false);
    EXPECT_TRUE(curvature_of(flat, make_element(*flat.space, {})).is_zero());
    EXPECT_THROW(curvature_of(s, make_element(sp, {{"y", 1}})), DegreeMismatch);
}

TEST(Twist, SquareZeroExample) {
    const AlgebraStructure s = square_zero();
    const GradedSpace& sp = *s.space;
    const std::size_t x = sp.index("x"), y = sp.index("y");

    const AlgebraStructure t0 = twist_algebra(s, s.elements.at("zero"));
    EXPECT_EQ(write_algebra_manifest(t0), write_algebra_manifest(s));

    const AlgebraStructure tm = twist_algebra(s, s.elements.at("mc"));
    EXPECT_EQ(tm.ops.count(0), 0u);
    EXPECT_TRUE(check_structure(tm, 4).ok());

    for (int t = -2; t <= 5; ++t) {
        const AlgElement a = make_element(sp, {{"x", t}});
        const AlgebraStructure tw = twist_algebra(s, a);
        EXPECT_EQ(tw.op(0).value().coords, curvature_of(s, a).coords);
        EXPECT_EQ(tw.op(1).coefficient({x}, y), Rational(-3 + 2 * t));
        EXPECT_EQ(tw.op(2), s.op(2));
        EXPECT_TRUE(check_structure(tw, 4).ok());
        EXPECT_EQ(write_algebra_manifest(twist_algebra(tw, s.elements.at("zero"))), write_algebra_manifest(tw));
        EXPECT_EQ(curvature_of(tw, s.elements.at("zero")).coords, curvature_of(s, a).coords);
    }
}

TEST(Twist, NontrivialCompositesBothModes) {
    for (const AlgebraStructure& s : {truncated_polynomial(true), symmetrized(truncated_polynomial(true))}) {
        for (int t : {-1, 2, 3}) {
            const AlgElement a = make_element(*s.space, {{"e1", t}});
            const AlgebraStructure tw = twist_algebra(s, a);
            const Report r = check_structure(tw, 4);
            EXPECT_TRUE(r.ok()) << r.to_string();
            EXPECT_EQ(tw.op(0).value().coords, curvature_of(s, a).coords);
        }
    }
}

TEST(Twist, NilpotencyIsEnforced) {
    AlgebraStructure s = square_zero();
    s.nilpotency_bound = 1;
    EXPECT_THROW(twist_algebra(s, s.elements.at("mc")), NilpotencyExceeded);
    EXPECT_THROW(curvature_of(s, s.elements.at("mc")), NilpotencyExceeded);
    EXPECT_NO_THROW(twist_algebra(s, s.elements.at("zero")));
}

TEST(AlgebraIO, RoundTripAndErrors) {
    const AlgebraStructure s = square_zero();
    const std::string text = write_algebra_manifest(s);
    EXPECT_EQ(write_algebra_manifest(parse_algebra_manifest(text)), text);
    EXPECT_THROW(parse_algebra_manifest("{"), ParseError);
    EXPECT_THROW(parse_algebra_manifest(R"({"basis": [{"name": "x", "degree": 0}],
        "ops": {"1": [{"inputs": ["x"], "output": "x", "coefficient": 1}]}})"),
                 DegreeMismatch);
    EXPECT_THROW(parse_algebra_manifest(R"({"kind": "weird", "basis": []})"), ParseError);
}
