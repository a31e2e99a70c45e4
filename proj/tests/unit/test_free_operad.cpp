#include "curvop/derivation.hpp"
#include "curvop/errors.hpp"
#include "curvop/parse.hpp"
#include "curvop/presets.hpp"
#include "random_trees.hpp"

#include <gtest/gtest.h>

using namespace curvop;
using curvop::testing::TreeFactory;

namespace {

const std::vector<Generator>& ns_gens() {
    static const std::vector<Generator> g = [] {
        std::vector<Generator> v;
        for (int n = 0; n <= 4; ++n) v.push_back(mu_generator(n));
        v.push_back(alpha_generator());
        v.push_back(kappa_generator());
        return v;
    }();
    return g;
}

const std::vector<Generator>& sym_gens() {
    static const std::vector<Generator> g = [] {
        std::vector<Generator> v;
        for (int n = 0; n <= 4; ++n) v.push_back(ell_generator(n));
        v.push_back(alpha_generator());
        v.push_back(kappa_generator());
        return v;
    }();
    return g;
}

Element ns(std::string_view s) { return parse_element(s, Mode::nonsymmetric, ns_gens()); }
Element sym(std::string_view s) { return parse_element(s, Mode::symmetric, sym_gens()); }

int degree_of(const Element& e) { return e.degree().value_or(0); }

// Block permutation sigma o_i id_m, describing how leaves of x o_i y move under sigma acting on x.
Permutation block_outer(const Permutation& sigma, int i, int m) {
    const int n = sigma.size();
    std::vector<int> img;
    auto pos = [&](int j) { return sigma(j) < sigma(i) ? sigma(j) : sigma(j) + m - 1; };
    for (int j = 1; j <= n; ++j) {
        if (j == i)
            for (int k = 1; k <= m; ++k) img.push_back(sigma(i) + k - 1);
        else
            img.push_back(pos(j));
    }
    return Permutation(img);
}

Permutation block_inner(int n, int i, const Permutation& tau) {
    std::vector<int> img;
    for (int j = 1; j <= n; ++j) {
        if (j == i)
            for (int k = 1; k <= tau.size(); ++k) img.push_back(i + tau(k) - 1);
        else
            img.push_back(j < i ? j : j + tau.size() - 1);
    }
    return Permutation(img);
}

std::vector<Permutation> all_permutations(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i + 1;
    std::vector<Permutation> out;
    do out.emplace_back(v);
    while (std::next_permutation(v.begin(), v.end()));
    return out;
}

}  // namespace

TEST(Compose, Examples) {
    EXPECT_EQ(compose(ns("mu_1(1)"), 1, ns("mu_0")), ns("mu_1(mu_0)"));
    Element c = compose(ns("mu_2(1,2)"), 2, ns("mu_0"));
    EXPECT_EQ(c, ns("mu_2(1, mu_0)"));
    EXPECT_EQ(c.arity(), 1);
    EXPECT_EQ(c.degree(), -2);
    EXPECT_THROW(compose(ns("mu_2(1,2)"), 3, ns("mu_0")), PositionOutOfRange);
    EXPECT_THROW(compose(ns("mu_2(1,2)"), 1, sym("ell_0")), ModeMismatch);
}

TEST(Compose, KoszulSignWhenOddVertexPassesOddOperand) {
    // mu_2(-, mu_0) o_1 mu_0: the inserted mu_0 moves in front of the existing one.
    EXPECT_EQ(compose(ns("mu_2(1, mu_0)"), 1, ns("mu_0")), -ns("mu_2(mu_0, mu_0)"));
    EXPECT_EQ(compose(ns("mu_2(mu_0, 1)"), 1, ns("mu_0")), ns("mu_2(mu_0, mu_0)"));
    EXPECT_EQ(compose(ns("mu_2(1, 2)"), 1, ns("mu_0")), ns("mu_2(mu_0, 1)"));
}

TEST(Compose, SymmetricTwoKappasVanish) {
    Element e = compose(compose(sym("ell_2(1,2)"), 1, sym("kappa")), 1, sym("kappa"));
    EXPECT_TRUE(e.is_zero());
    EXPECT_EQ(e.arity(), 0);
}

TEST(Canonical, SymmetricSorting) {
    EXPECT_EQ(sym("ell_2(2, 1)"), sym("ell_2(1, 2)"));
    EXPECT_EQ(sym("ell_2(ell_0, 1)"), sym("ell_2(1, ell_0)"));
    // Two odd subtrees swapped.
    EXPECT_EQ(sym("ell_2(ell_1(2), ell_1(1))"), -sym("ell_2(ell_1(1), ell_1(2))"));
    EXPECT_EQ(sym("ell_2(ell_1(2), ell_1(1))").to_string(), "-ell_2(ell_1(1), ell_1(2))");
    EXPECT_EQ(ns("mu_2(mu_0, 1)").to_string(), "mu_2(mu_0, 1)");
}

TEST(Canonical, Idempotent) {
    TreeFactory f(Mode::symmetric, 5);
    for (int trial = 0; trial < 300; ++trial) {
        Tree t = f.shape(trial % 4, 4);
        SignedTree a, b;
        if (!canonical_form(t, a)) continue;
        ASSERT_TRUE(canonical_form(a.tree, b));
        EXPECT_EQ(a.tree, b.tree);
        EXPECT_EQ(b.sign, Sign::plus());
    }
}

TEST(Canonical, MalformedTrees) {
    const Generator m2 = mu_generator(2);
    EXPECT_THROW(Tree::vertex(m2, {Tree::leaf(1)}), MalformedTree);
    EXPECT_THROW(Element::from_tree(Mode::nonsymmetric, Tree::vertex(m2, {Tree::leaf(2), Tree::leaf(1)})),
                 MalformedTree);
    EXPECT_THROW(Element::from_tree(Mode::symmetric, Tree::vertex(m2, {Tree::leaf(1), Tree::leaf(3)})),
                 MalformedTree);
}

TEST(Action, Examples) {
    Element l2 = sym("ell_2(1,2)");
    EXPECT_EQ(act(Permutation::identity(2), l2), l2);
    EXPECT_EQ(act(Permutation::transposition(2, 1, 2), l2), l2);
    Element t = sym("ell_2(ell_2(1,2), 3)");
    Element a = act(Permutation::transposition(3, 1, 3), t);
    EXPECT_EQ(a, sym("ell_2(1, ell_2(2, 3))"));
    EXPECT_THROW(act(Permutation::identity(2), ns("mu_2(1,2)")), ModeMismatch);
    EXPECT_THROW(act(Permutation::identity(3), l2), ArityMismatch);
}

TEST(Splits, ByCounts) {
    Element x = ns("mu_2(kappa, mu_0) + mu_1(mu_0)");
    auto w = kappa_weight_split(x);
    EXPECT_EQ(w.at(0), ns("mu_1(mu_0)"));
    EXPECT_EQ(w.at(1), ns("mu_2(kappa, mu_0)"));
    auto a = alpha_filtration_split(ns("mu_2(alpha, 1) + mu_3(alpha, alpha, 1)"));
    EXPECT_EQ(a.at(1), ns("mu_2(alpha, 1)"));
    EXPECT_EQ(a.at(2), ns("mu_3(alpha, alpha, 1)"));
    EXPECT_EQ(kappa_weight_split(ns("kappa")).at(1), ns("kappa"));
}

TEST(Parse, RoundTrip) {
    for (std::string s : {"mu_2(mu_0, 1)", "-mu_2(mu_0, 1)", "1/2 * mu_3(1, alpha, 2) - 3 * mu_2(1, 2)", "0"}) {
        Element e = ns(s);
        EXPECT_EQ(ns(e.to_string()), e) << s;
    }
    EXPECT_EQ(ns("-1 * mu_2(mu_0, 1)"), -ns("mu_2(mu_0,1)"));
    EXPECT_THROW(ns("nu_2(1,2)"), UnknownGenerator);
    EXPECT_THROW(ns("mu_2(1)"), ArityMismatch);
    EXPECT_THROW(ns("mu_2(1,2"), ParseError);
    EXPECT_THROW(ns("mu_2(1,2) + mu_1(1)"), ArityMismatch);
}

class OperadAxioms : public ::testing::TestWithParam<Mode> {};

TEST_P(OperadAxioms, SequentialAndParallel) {
    TreeFactory f(GetParam(), 17);
    std::uniform_int_distribution<int> ar(1, 3), ar0(0, 2);
    for (int trial = 0; trial < 150; ++trial) {
        Element x = f.element(ar(f.rng()));
        Element y = f.element(ar(f.rng()));
        Element z = f.element(ar0(f.rng()));
        const int n = x.arity(), m = y.arity(), l = z.arity();
        const int i = std::uniform_int_distribution<int>(1, n)(f.rng());
        // Nested: (x o_i y) o_{i+k-1} z = x o_i (y o_k z).
        const int k = std::uniform_int_distribution<int>(1, m)(f.rng());
        EXPECT_EQ(compose(compose(x, i, y), i + k - 1, z), compose(x, i, compose(y, k, z)));
        // Parallel: (x o_i y) o_j z with j < i versus (x o_j z) o_{i+l-1} y.
        if (i > 1) {
            const int j = std::uniform_int_distribution<int>(1, i - 1)(f.rng());
            Element lhs = compose(compose(x, i, y), j, z);
            Element rhs = compose(compose(x, j, z), i + l - 1, y);
            if (degree_of(y) % 2 != 0 && degree_of(z) % 2 != 0) rhs = -rhs;
            EXPECT_EQ(lhs, rhs) << x.to_string() << " | " << y.to_string() << " | " << z.to_string();
        }
        const int total = x.degree().value_or(0) + y.degree().value_or(0);
        Element c = compose(x, i, y);
        if (!c.is_zero()) EXPECT_EQ(c.degree(), total);
    }
}

TEST_P(OperadAxioms, Leibniz) {
    const Mode mode = GetParam();
    TreeFactory f(mode, 23);
    auto gens = curvop::testing::test_generators(mode);
    // A random derivation on the test generators.
    Derivation d(mode, gens);
    for (const Generator& g : gens) {
        Element v(mode, g.arity);
        for (int tries = 0; tries < 30 && v.size() < 2; ++tries) {
            Tree t = f.shape(g.arity, 2);
            if (t.degree() == g.degree - 1) v.add_tree(t, std::uniform_int_distribution<int>(1, 3)(f.rng()));
        }
        if (g.symmetry == Symmetry::invariant) {
            Element sym_v(mode, g.arity);
            for (const Permutation& s : all_permutations(g.arity)) sym_v += act(s, v);
            v = sym_v;
        }
        if (!v.is_zero()) d.set_value(g.name, v);
    }
    for (int trial = 0; trial < 150; ++trial) {
        Element x = f.element(std::uniform_int_distribution<int>(1, 3)(f.rng()));
        Element y = f.element(std::uniform_int_distribution<int>(0, 2)(f.rng()));
        const int i = std::uniform_int_distribution<int>(1, x.arity())(f.rng());
        Element lhs = apply(d, compose(x, i, y));
        Element rhs = compose(apply(d, x), i, y);
        Element second = compose(x, i, apply(d, y));
        if (degree_of(x) % 2 != 0) rhs -= second;
        else rhs += second;
        EXPECT_EQ(lhs, rhs) << x.to_string() << " o_" << i << " " << y.to_string();
        if (mode == Mode::symmetric) {
            Permutation s = f.permutation(x.arity());
            EXPECT_EQ(apply(d, act(s, x)), act(s, apply(d, x)));
        }
    }
}

TEST_P(OperadAxioms, Bookkeeping) {
    TreeFactory f(GetParam(), 31);
    for (int trial = 0; trial < 100; ++trial) {
        Element x = f.element(2), y = f.element(1);
        Element c = compose(x, 2, y);
        for (const auto& [t, coeff] : c.terms()) {
            const Tree& xt = x.terms().begin()->first;
            (void)xt;
            EXPECT_EQ(t.arity(), 2);
        }
        // Additivity of vertex counts for single trees.
        Element xs = Element::from_tree(GetParam(), x.terms().begin()->first);
        Element ys = Element::from_tree(GetParam(), y.terms().begin()->first);
        Element cs = compose(xs, 1, ys);
        if (!cs.is_zero()) {
            const Tree& t = cs.terms().begin()->first;
            EXPECT_EQ(t.vertex_count(), xs.terms().begin()->first.vertex_count() + ys.terms().begin()->first.vertex_count());
            EXPECT_EQ(t.count("k"), xs.terms().begin()->first.count("k") + ys.terms().begin()->first.count("k"));
        }
    }
}

INSTANTIATE_TEST_SUITE_P(BothModes, OperadAxioms, ::testing::Values(Mode::nonsymmetric, Mode::symmetric),
                         [](const auto& info) { return info.param == Mode::symmetric ? "sym" : "ns"; });

TEST(Equivariance, OuterAndInner) {
    TreeFactory f(Mode::symmetric, 41);
    for (int trial = 0; trial < 150; ++trial) {
        Element x = f.element(std::uniform_int_distribution<int>(1, 3)(f.rng()));
        Element y = f.element(std::uniform_int_distribution<int>(0, 2)(f.rng()));
        const int i = std::uniform_int_distribution<int>(1, x.arity())(f.rng());
        Permutation s = f.permutation(x.arity());
        EXPECT_EQ(compose(act(s, x), s(i), y), act(block_outer(s, i, y.arity()), compose(x, i, y)));
        Permutation t = f.permutation(y.arity());
        EXPECT_EQ(compose(x, i, act(t, y)), act(block_inner(x.arity(), i, t), compose(x, i, y)));
        Permutation u = f.permutation(x.arity());
        EXPECT_EQ(act(s, act(u, x)), act(s * u, x));
    }
}
