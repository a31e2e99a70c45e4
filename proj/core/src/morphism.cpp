#include "curvop/morphism.hpp"

#include "curvop/errors.hpp"
#include "curvop/presets.hpp"

namespace curvop {

Morphism::Morphism(Mode mode, std::vector<Generator> source, std::vector<Generator> target, int precision)
    : mode_(mode), source_(std::move(source)), target_(std::move(target)), precision_(precision) {}

const Generator& Morphism::source_generator(std::string_view name) const {
    for (const Generator& g : source_)
        if (g.name == name) return g;
    throw UnknownGenerator("'" + std::string(name) + "' is not a source generator");
}

Element Morphism::image(std::string_view name) const {
    const Generator& g = source_generator(name);
    auto it = images_.find(g.name);
    return it == images_.end() ? Element(mode_, g.arity) : it->second;
}

void Morphism::set_image(const std::string& name, Element v) {
    const Generator& g = source_generator(name);
    if (v.is_zero()) {
        images_.erase(name);
        return;
    }
    if (v.mode() != mode_) throw ModeMismatch("image of " + name);
    if (v.arity() != g.arity) throw ArityMismatch("image of " + name + " has arity " + std::to_string(v.arity()));
    for (const auto& [t, c] : v.terms()) {
        if (t.degree() != g.degree)
            throw DegreeMismatch("image of " + name + " contains " + t.to_string() + " of degree " +
                                 std::to_string(t.degree()));
        t.for_each_vertex([&](const Tree& u) {
            for (const Generator& tg : target_)
                if (tg.name == u.generator().name) return;
            throw UnknownGenerator("'" + u.generator().name + "' in the image of " + name + " is not a target generator");
        });
    }
    images_[name] = std::move(v);
}

TermFilter Morphism::filter() const {
    if (precision_ < 0) return {};
    const int cap = precision_;
    return [cap](const Tree& t) { return t.count(kAlpha) <= cap; };
}

namespace {

using TermMap = std::map<Tree, Rational>;

TermMap apply_rec(const Morphism& f, const Tree& t, const TermFilter& keep) {
    TermMap out;
    if (t.is_leaf()) {
        out.emplace(t, Rational(1));
        return out;
    }
    const Element img = f.image(t.generator().name);
    if (img.is_zero()) return out;
    std::vector<TermMap> kids;
    for (const Tree& c : t.children()) {
        kids.push_back(apply_rec(f, c, keep));
        if (kids.back().empty()) return out;
    }
    // Expand the product over children term by term.
    std::vector<TermMap::const_iterator> pos(kids.size());
    std::vector<Tree> blocks(kids.size());
    for (const auto& [e, ce] : img.terms()) {
        for (std::size_t i = 0; i < kids.size(); ++i) pos[i] = kids[i].begin();
        while (true) {
            Rational c = ce;
            for (std::size_t i = 0; i < kids.size(); ++i) {
                blocks[i] = pos[i]->first;
                c *= pos[i]->second;
            }
            SignedTree g = graft_all(e, blocks);
            if (!keep || keep(g.tree)) {
                if (g.sign.value() < 0) c = -c;
                auto [it, inserted] = out.try_emplace(std::move(g.tree), c);
                if (!inserted) {
                    it->second += c;
                    if (it->second == 0) out.erase(it);
                }
            }
            std::size_t i = 0;
            for (; i < kids.size(); ++i) {
                if (++pos[i] != kids[i].end()) break;
                pos[i] = kids[i].begin();
            }
            if (i == kids.size()) break;
        }
    }
    return out;
}

}  // namespace

Element apply(const Morphism& f, const Element& x, const TermFilter& keep) {
    TermFilter own = f.filter();
    TermFilter both = keep;
    if (own && keep) both = [own, keep](const Tree& t) { return own(t) && keep(t); };
    else if (own) both = own;
    Element r(f.mode(), x.arity());
    for (const auto& [t, c] : x.terms())
        for (const auto& [u, k] : apply_rec(f, t, both)) r.add_tree(u, c * k);
    return r;
}

Morphism compose(const Morphism& g, const Morphism& f) {
    Morphism r(f.mode(), f.source(), g.target(), g.precision());
    for (const Generator& s : f.source()) r.set_image(s.name, apply(g, f.image(s.name)));
    return r;
}

Report check_chain_map(const Morphism& f, const Derivation& d_source, const Derivation& d_target, int arity_bound,
                       int compare_alpha) {
    Report rep;
    const TermFilter keep = f.filter();
    for (const Generator& g : f.source()) {
        if (g.arity > arity_bound) continue;
        Element lhs = apply(d_target, f.image(g.name), keep);
        Element rhs = apply(f, apply(d_source, Element::generator(f.mode(), g)));
        Element diff = lhs - rhs;
        if (compare_alpha >= 0) diff = truncate_count(diff, kAlpha, compare_alpha);
        rep.add(g.name, diff);
    }
    return rep;
}

}  // namespace curvop
