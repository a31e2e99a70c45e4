#include "curvop/element.hpp"

#include "curvop/errors.hpp"

#include <algorithm>

namespace curvop {

namespace {

void validate_leaves(Mode mode, const Tree& t) {
    std::vector<int> labels = t.leaf_labels();
    if (mode == Mode::nonsymmetric) {
        for (std::size_t i = 0; i < labels.size(); ++i)
            if (labels[i] != static_cast<int>(i) + 1)
                throw MalformedTree("nonsymmetric tree " + t.to_string() + " must have leaves 1..n in planar order");
        return;
    }
    std::sort(labels.begin(), labels.end());
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (labels[i] != static_cast<int>(i) + 1)
            throw MalformedTree("leaf labels of " + t.to_string() + " are not exactly 1..n");
}

}  // namespace

bool canonicalize(Mode mode, const Tree& t, SignedTree& out) {
    if (mode == Mode::nonsymmetric) {
        out = {t, Sign::plus()};
        return true;
    }
    return canonical_form(t, out);
}

Element Element::generator(Mode mode, const Generator& g, Rational c) {
    std::vector<Tree> kids;
    for (int i = 1; i <= g.arity; ++i) kids.push_back(Tree::leaf(i));
    return from_tree(mode, Tree::vertex(g, std::move(kids)), std::move(c));
}

Element Element::from_tree(Mode mode, const Tree& t, Rational c) {
    validate_leaves(mode, t);
    Element e(mode, t.arity());
    e.add_tree(t, c);
    return e;
}

Rational Element::coefficient(const Tree& t) const {
    auto it = terms_.find(t);
    return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<int> Element::degree() const {
    std::optional<int> d;
    for (const auto& [t, c] : terms_) {
        if (d && *d != t.degree()) return std::nullopt;
        d = t.degree();
    }
    return d;
}

void Element::add_canonical(const Tree& t, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(t, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void Element::add_tree(const Tree& t, const Rational& c) {
    if (t.arity() != arity_)
        throw ArityMismatch("adding a tree of arity " + std::to_string(t.arity()) + " to an element of arity " +
                            std::to_string(arity_));
    SignedTree st;
    if (!canonicalize(mode_, t, st)) return;
    add_canonical(st.tree, st.sign.value() < 0 ? Rational(-c) : c);
}

void Element::check_compatible(const Element& o, const char* what) const {
    if (mode_ != o.mode_) throw ModeMismatch(std::string(what) + ": elements of different modes");
    if (arity_ != o.arity_)
        throw ArityMismatch(std::string(what) + ": arities " + std::to_string(arity_) + " and " +
                            std::to_string(o.arity_));
}

Element& Element::operator+=(const Element& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) {
        mode_ = o.mode_;
        arity_ = o.arity_;
    }
    check_compatible(o, "sum");
    for (const auto& [t, c] : o.terms_) add_canonical(t, c);
    return *this;
}

Element& Element::operator-=(const Element& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) {
        mode_ = o.mode_;
        arity_ = o.arity_;
    }
    check_compatible(o, "difference");
    for (const auto& [t, c] : o.terms_) add_canonical(t, -c);
    return *this;
}

Element& Element::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [t, v] : terms_) v *= c;
    return *this;
}

Element Element::operator-() const {
    Element r = *this;
    for (auto& [t, v] : r.terms_) v = -v;
    return r;
}

bool Element::operator==(const Element& o) const {
    if (is_zero() && o.is_zero()) return true;
    return mode_ == o.mode_ && arity_ == o.arity_ && terms_ == o.terms_;
}

std::string Element::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [t, c] : terms_) {
        Rational mag = abs(c);
        if (first) {
            if (c < 0) s += "-";
        } else {
            s += c < 0 ? " - " : " + ";
        }
        first = false;
        if (mag != 1) s += curvop::to_string(mag) + " * ";
        s += t.to_string();
    }
    return s;
}

std::ostream& operator<<(std::ostream& os, const Element& e) { return os << e.to_string(); }

Element Element::filter(const std::function<bool(const Tree&)>& pred) const {
    Element r(mode_, arity_);
    for (const auto& [t, c] : terms_)
        if (pred(t)) r.terms_.emplace(t, c);
    return r;
}

Element compose(const Element& x, int i, const Element& y) {
    if (x.mode() != y.mode()) throw ModeMismatch("compose: elements of different modes");
    if (i < 1 || i > x.arity())
        throw PositionOutOfRange("compose at position " + std::to_string(i) + " of an element of arity " +
                                 std::to_string(x.arity()));
    const int m = y.arity();
    Element r(x.mode(), x.arity() + m - 1);
    if (x.is_zero() || y.is_zero()) return r;
    std::vector<Tree> blocks;
    blocks.reserve(static_cast<std::size_t>(x.arity()));
    for (const auto& [yt, yc] : y.terms()) {
        Tree shifted = relabel(yt, [i](int k) { return k + i - 1; });
        blocks.clear();
        for (int j = 1; j <= x.arity(); ++j)
            blocks.push_back(j == i ? shifted : Tree::leaf(j < i ? j : j + m - 1));
        for (const auto& [xt, xc] : x.terms()) {
            SignedTree g = graft_all(xt, blocks);
            Rational c = xc * yc;
            if (g.sign.value() < 0) c = -c;
            r.add_tree(g.tree, c);
        }
    }
    return r;
}

Element act(const Permutation& sigma, const Element& x) {
    if (x.mode() != Mode::symmetric) throw ModeMismatch("the symmetric group acts only in symmetric mode");
    if (sigma.size() != x.arity())
        throw ArityMismatch("permutation of size " + std::to_string(sigma.size()) + " acting in arity " +
                            std::to_string(x.arity()));
    Element r(x.mode(), x.arity());
    for (const auto& [t, c] : x.terms()) r.add_tree(relabel(t, [&sigma](int k) { return sigma(k); }), c);
    return r;
}

std::map<int, Element> count_split(const Element& x, std::string_view name) {
    std::map<int, Element> out;
    for (const auto& [t, c] : x.terms()) {
        auto [it, inserted] = out.try_emplace(t.count(name), x.mode(), x.arity());
        it->second.add_canonical(t, c);
    }
    if (out.empty()) out.emplace(0, Element(x.mode(), x.arity()));
    return out;
}

std::map<int, Element> kappa_weight_split(const Element& x, std::string_view kappa) { return count_split(x, kappa); }

std::map<int, Element> alpha_filtration_split(const Element& x, std::string_view alpha) {
    return count_split(x, alpha);
}

Element truncate_count(const Element& x, std::string_view name, int max_count) {
    return x.filter([&](const Tree& t) { return t.count(name) <= max_count; });
}

}  // namespace curvop
