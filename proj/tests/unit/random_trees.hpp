#pragma once

#include "curvop/element.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace curvop::testing {

inline std::vector<Generator> test_generators(Mode mode) {
    const Symmetry inv = mode == Mode::symmetric ? Symmetry::invariant : Symmetry::planar;
    return {
        {"k", 0, -1, Symmetry::planar},  {"z", 0, 0, Symmetry::planar},    {"u", 1, -1, Symmetry::planar},
        {"v", 1, 0, Symmetry::planar},   {"b", 2, -1, inv},                {"c", 2, 0, Symmetry::planar},
        {"p", 2, -1, Symmetry::planar},  {"t", 3, -1, inv},
    };
}

class TreeFactory {
public:
    TreeFactory(Mode mode, unsigned seed) : mode_(mode), gens_(test_generators(mode)), rng_(seed) {}

    Mode mode() const { return mode_; }
    std::mt19937& rng() { return rng_; }

    /// A random tree of the given arity with at most `budget` vertices.
    Tree shape(int arity, int budget) {
        int next = 1;
        Tree t = build(arity, budget, next);
        if (mode_ == Mode::symmetric) {
            std::vector<int> labels(static_cast<std::size_t>(arity));
            std::iota(labels.begin(), labels.end(), 1);
            std::shuffle(labels.begin(), labels.end(), rng_);
            t = relabel(t, [&](int k) { return labels[static_cast<std::size_t>(k - 1)]; });
        }
        return t;
    }

    /// A random element with 1-3 terms of one degree.
    Element element(int arity, int budget = 3) {
        std::uniform_int_distribution<int> coeff(-3, 3), nterms(1, 3);
        Element e(mode_, arity);
        Tree first = shape(arity, budget);
        e.add_tree(first, 1 + std::abs(coeff(rng_)));
        while (e.is_zero()) {
            first = shape(arity, budget);
            e.add_tree(first, 1 + std::abs(coeff(rng_)));
        }
        const int n = nterms(rng_);
        for (int tries = 0; tries < 20 && static_cast<int>(e.size()) < n; ++tries) {
            Tree t = shape(arity, budget);
            if (t.degree() == first.degree()) e.add_tree(t, coeff(rng_));
        }
        return e.is_zero() ? element(arity, budget) : e;
    }

    Permutation permutation(int n) {
        std::vector<int> v(static_cast<std::size_t>(n));
        std::iota(v.begin(), v.end(), 1);
        std::shuffle(v.begin(), v.end(), rng_);
        return Permutation(v);
    }

private:
    Tree build(int arity, int budget, int& next) {
        std::vector<const Generator*> options;
        for (const Generator& g : gens_) {
            if (budget <= 1) {
                if (g.arity == arity) options.push_back(&g);
            } else if (g.arity >= 1 || arity == 0) {
                options.push_back(&g);
            }
        }
        if (arity == 1 && (budget <= 0 || std::uniform_int_distribution<int>(0, 3)(rng_) == 0))
            return Tree::leaf(next++);
        if (options.empty()) {
            for (const Generator& g : gens_)
                if (g.arity == arity) options.push_back(&g);
        }
        const Generator& g = *options[std::uniform_int_distribution<std::size_t>(0, options.size() - 1)(rng_)];
        // Distribute `arity` leaves over g.arity children.
        std::vector<int> parts(static_cast<std::size_t>(g.arity), 0);
        if (g.arity == 0) return Tree::vertex(g);
        if (budget <= 1 && g.arity == arity)
            std::fill(parts.begin(), parts.end(), 1);
        else
            for (int i = 0; i < arity; ++i)
                ++parts[std::uniform_int_distribution<std::size_t>(0, parts.size() - 1)(rng_)];
        std::vector<Tree> kids;
        const int sub = std::max(0, (budget - 1) / g.arity);
        for (int a : parts) kids.push_back(build(a, sub, next));
        return Tree::vertex(g, std::move(kids));
    }

    Mode mode_;
    std::vector<Generator> gens_;
    std::mt19937 rng_;
};

}  // namespace curvop::testing
