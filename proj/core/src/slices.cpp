#include "curvop/slices.hpp"

#include "curvop/errors.hpp"
#include "curvop/presets.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

namespace curvop {

namespace {

using Budget = std::vector<int>;
using Memo = std::map<std::pair<Budget, int>, std::vector<Tree>>;

// Planar trees with all leaves labelled 1, using exactly `budget` vertices of
// each generator and exactly `leaves` external leaves.
const std::vector<Tree>& skeletons(const std::vector<Generator>& gens, const Budget& budget, int leaves, Memo& memo);

void distribute(const std::vector<Generator>& gens, const Generator& g, std::size_t child, const Budget& rest,
                int leaves_left, std::vector<Tree>& kids, std::vector<Tree>& out, Memo& memo) {
    const std::size_t arity = static_cast<std::size_t>(g.arity);
    if (child + 1 == arity) {
        for (const Tree& t : skeletons(gens, rest, leaves_left, memo)) {
            kids.push_back(t);
            out.push_back(Tree::vertex(g, kids));
            kids.pop_back();
        }
        return;
    }
    // Enumerate every sub-budget for this child.
    Budget sub(rest.size(), 0);
    std::function<void(std::size_t)> pick = [&](std::size_t k) {
        if (k == rest.size()) {
            Budget remaining = rest;
            for (std::size_t i = 0; i < rest.size(); ++i) remaining[i] -= sub[i];
            for (int l = 0; l <= leaves_left; ++l) {
                const auto& opts = skeletons(gens, sub, l, memo);
                if (opts.empty()) continue;
                for (const Tree& t : opts) {
                    kids.push_back(t);
                    distribute(gens, g, child + 1, remaining, leaves_left - l, kids, out, memo);
                    kids.pop_back();
                }
            }
            return;
        }
        for (int v = 0; v <= rest[k]; ++v) {
            sub[k] = v;
            pick(k + 1);
        }
        sub[k] = 0;
    };
    pick(0);
}

const std::vector<Tree>& skeletons(const std::vector<Generator>& gens, const Budget& budget, int leaves, Memo& memo) {
    const auto key = std::make_pair(budget, leaves);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    std::vector<Tree> out;
    const bool empty = std::all_of(budget.begin(), budget.end(), [](int v) { return v == 0; });
    if (empty) {
        if (leaves == 1) out.push_back(Tree::leaf(1));
    } else {
        for (std::size_t i = 0; i < gens.size(); ++i) {
            if (budget[i] == 0) continue;
            Budget rest = budget;
            --rest[i];
            const Generator& g = gens[i];
            if (g.arity == 0) {
                if (leaves == 0 && std::all_of(rest.begin(), rest.end(), [](int v) { return v == 0; }))
                    out.push_back(Tree::vertex(g));
                continue;
            }
            std::vector<Tree> kids;
            distribute(gens, g, 0, rest, leaves, kids, out, memo);
        }
    }
    return memo.emplace(key, std::move(out)).first->second;
}

Tree label_leaves(const Tree& t, const std::vector<int>& labels) {
    std::size_t next = 0;
    return relabel(t, [&](int) { return labels[next++]; });
}

// Replaces the slot vertices (depth-first order) by alpha or kappa_T according to mask.
Tree fill_slots(const Tree& t, const std::string& slot, unsigned mask, const Generator& a, const Generator& k) {
    unsigned idx = 0;
    std::function<Tree(const Tree&)> go = [&](const Tree& u) -> Tree {
        if (u.is_leaf()) return u;
        if (u.generator().name == slot) return Tree::vertex((mask >> idx++) & 1u ? k : a);
        std::vector<Tree> kids;
        for (const Tree& c : u.children()) kids.push_back(go(c));
        return Tree::vertex(u.generator(), std::move(kids));
    };
    return go(t);
}

double binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    double r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

double catalan(int n) { return n < 0 ? 0 : binom(2 * n, n) / (n + 1); }

double factorial(int n) {
    double r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

Generator binary_generator(Mode mode) {
    return {"b", 2, -1, mode == Mode::symmetric ? Symmetry::invariant : Symmetry::planar};
}

}  // namespace

std::vector<Tree> enumerate_trees(Mode mode, const std::vector<Generator>& gens, int arity, const VertexCounts& counts) {
    for (const auto& [name, c] : counts) {
        if (c < 0) throw InvalidArgument("negative vertex count for " + name);
        if (std::none_of(gens.begin(), gens.end(), [&](const Generator& g) { return g.name == name; }))
            throw UnknownGenerator("'" + name + "' in vertex counts");
    }
    Budget budget;
    for (const Generator& g : gens) {
        auto it = counts.find(g.name);
        budget.push_back(it == counts.end() ? 0 : it->second);
    }
    Memo memo;
    const std::vector<Tree>& shapes = skeletons(gens, budget, arity, memo);
    std::set<Tree> out;
    std::vector<int> labels(static_cast<std::size_t>(arity));
    std::iota(labels.begin(), labels.end(), 1);
    for (const Tree& s : shapes) {
        if (mode == Mode::nonsymmetric) {
            out.insert(label_leaves(s, labels));
            continue;
        }
        std::vector<int> perm = labels;
        do {
            SignedTree st;
            if (canonical_form(label_leaves(s, perm), st)) out.insert(st.tree);
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return {out.begin(), out.end()};
}

BasisSlice::BasisSlice(Mode mode, int arity, std::string description, std::vector<Tree> trees)
    : mode_(mode), arity_(arity), description_(std::move(description)) {
    std::vector<std::pair<std::string, Tree>> keyed;
    for (Tree& t : trees) keyed.emplace_back(t.to_string(), std::move(t));
    std::sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    for (auto& [s, t] : keyed) {
        if (t.arity() != arity_) throw ArityMismatch("slice tree " + s + " has the wrong arity");
        if (!index_.emplace(t, trees_.size()).second) throw InvalidArgument("duplicate slice tree " + s);
        trees_.push_back(std::move(t));
    }
}

long BasisSlice::index_of(const Tree& t) const {
    auto it = index_.find(t);
    return it == index_.end() ? -1 : static_cast<long>(it->second);
}

Element BasisSlice::element(std::size_t i) const {
    Element e(mode_, arity_);
    e.add_canonical(trees_.at(i), 1);
    return e;
}

Element BasisSlice::element(const std::vector<Rational>& coords) const {
    if (coords.size() != trees_.size()) throw InvalidArgument("coordinate vector of the wrong size");
    Element e(mode_, arity_);
    for (std::size_t i = 0; i < coords.size(); ++i) e.add_canonical(trees_[i], coords[i]);
    return e;
}

BasisSlice make_slice(Mode mode, const std::vector<Generator>& gens, int arity, const VertexCounts& counts,
                      std::string description) {
    return BasisSlice(mode, arity, std::move(description), enumerate_trees(mode, gens, arity, counts));
}

RationalMatrix matrix_of(const LinearMap& map, const BasisSlice& domain, const BasisSlice& codomain) {
    RationalMatrix m(codomain.size(), domain.size());
    for (std::size_t j = 0; j < domain.size(); ++j) {
        const Element img = map(domain.element(j));
        for (const auto& [t, c] : img.terms()) {
            const long i = codomain.index_of(t);
            if (i < 0)
                throw ImageEscapesSlice(t.to_string() + " (image of " + domain[j].to_string() + ") is not in " +
                                        (codomain.description().empty() ? "the codomain slice" : codomain.description()));
            m(static_cast<std::size_t>(i), j) = c;
        }
    }
    return m;
}

bool HomologyReport::ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const SliceCheck& c) { return c.ok; });
}

std::string HomologyReport::to_string() const {
    std::ostringstream os;
    for (const SliceCheck& c : checks)
        os << c.name << " dim=" << c.dimension << " value=" << c.value << (c.ok ? " PASS" : " FAIL") << "\n";
    return os.str();
}

HomologyReport bracket_kappa_homology(int max_arity, int max_weight) {
    const Mode mode = Mode::nonsymmetric;
    const Generator b = binary_generator(Mode::nonsymmetric);
    const Generator k = kappa_generator();
    const std::vector<Generator> gens{b, k};
    const Element ke = Element::generator(mode, k);
    auto slice = [&](int arity, int weight) {
        // arity + weight = (number of b vertices) + 1.
        const int nb = arity + weight - 1;
        if (arity < 0 || weight < 0 || nb < 0) return BasisSlice(mode, std::max(arity, 0), {}, {});
        return make_slice(mode, gens, arity, {{"b", nb}, {"kappa", weight}},
                          "arity " + std::to_string(arity) + " weight " + std::to_string(weight));
    };
    const LinearMap d = [&](const Element& x) { return bracket(x, ke); };

    HomologyReport rep;
    for (int n = 1; n <= max_arity; ++n) {
        for (int w = 0; w <= max_weight; ++w) {
            const BasisSlice mid = slice(n, w);
            const BasisSlice in = slice(n + 1, w - 1);
            const BasisSlice out = slice(n - 1, w + 1);
            const RationalMatrix d_in = matrix_of(d, in, mid);
            const RationalMatrix d_out = matrix_of(d, mid, out);
            SliceCheck c;
            c.name = "bracket-kappa arity=" + std::to_string(n) +
                     " weight=" + std::to_string(w);
            c.dimension = mid.size();
            c.value = homology_dimension_blocked(d_in, d_out);
            c.ok = c.value == 0;
            rep.checks.push_back(std::move(c));
        }
    }
    return rep;
}

std::vector<Generator> dT_test_generators(Mode mode) {
    return {binary_generator(mode), alpha_generator(), kappa_generator(std::string(kKappaT))};
}

HomologyReport dT_homology(Mode mode, int max_arity, int max_alpha) {
    const std::vector<Generator> pt = dT_test_generators(mode);
    const Generator& b = pt[0];
    const Generator& a = pt[1];
    const Generator& k = pt[2];
    const Derivation dT(mode, pt, {{std::string(kAlpha), Element::generator(mode, k)}});
    const LinearMap d = [&](const Element& x) { return apply(dT, x); };
    const Generator slot{"slot", 0, 0, Symmetry::planar};

    HomologyReport rep;
    for (int n = 0; n <= max_arity; ++n) {
        // m = alpha + kappa_T count, preserved by d_T.
        for (int m = 1; m <= max_alpha + 1; ++m) {
            const int nb = n + m - 1;
            const std::vector<Tree> skel = enumerate_trees(mode, {b, slot}, n, {{"b", nb}, {"slot", m}});
            long kernel0 = 0, h1 = 0;
            std::size_t dim0 = 0, dim1 = 0;
            for (const Tree& s : skel) {
                // Trees of this skeleton, split by kappa_T-weight.
                std::vector<std::vector<Tree>> by_weight(3);
                for (unsigned mask = 0; mask < (1u << m); ++mask) {
                    const int w = std::popcount(mask);
                    if (w > 2) continue;
                    SignedTree st;
                    if (!canonicalize(mode, fill_slots(s, "slot", mask, a, k), st)) continue;
                    auto& bucket = by_weight[static_cast<std::size_t>(w)];
                    if (std::find(bucket.begin(), bucket.end(), st.tree) == bucket.end()) bucket.push_back(st.tree);
                }
                const BasisSlice s0(mode, n, {}, by_weight[0]), s1(mode, n, {}, by_weight[1]),
                    s2(mode, n, {}, by_weight[2]);
                const RationalMatrix d01 = matrix_of(d, s0, s1), d12 = matrix_of(d, s1, s2);
                if (m <= max_alpha) {
                    dim0 += s0.size();
                    kernel0 += static_cast<long>(kernel_rank(d01).kernel.size());
                }
                dim1 += s1.size();
                h1 += homology_dimension(d01, d12);
            }
            const std::string where = std::string(to_string(mode)) + " arity=" + std::to_string(n);
            if (m <= max_alpha)
                rep.checks.push_back({"dT-kernel-weight0 " + where + " alpha=" + std::to_string(m), dim0, kernel0,
                                      kernel0 == 0});
            rep.checks.push_back({"dT-homology-weight1 " + where + " alpha=" + std::to_string(m - 1), dim1, h1, h1 == 0});
        }
    }
    return rep;
}

double estimate_bracket_kappa_size(int max_arity, int max_weight) {
    double total = 0;
    for (int n = 0; n <= max_arity + 1; ++n)
        for (int w = 0; w <= max_weight + 1; ++w) total += catalan(n + w - 1) * binom(n + w, w);
    return total;
}

double estimate_dT_size(Mode mode, int max_arity, int max_alpha) {
    double total = 0;
    for (int n = 0; n <= max_arity; ++n)
        for (int m = 1; m <= max_alpha + 1; ++m)
            total += catalan(n + m - 1) * binom(n + m, m) * std::pow(2.0, m) * (mode == Mode::symmetric ? factorial(n) : 1);
    return total;
}

}  // namespace curvop
