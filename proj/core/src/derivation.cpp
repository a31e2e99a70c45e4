#include "curvop/derivation.hpp"

#include "curvop/errors.hpp"

namespace curvop {

Derivation::Derivation(Mode mode, std::vector<Generator> generators, std::map<std::string, Element> values)
    : mode_(mode), generators_(std::move(generators)) {
    std::set<std::string> names;
    for (const Generator& g : generators_)
        if (!names.insert(g.name).second) throw NameCollision("generator " + g.name + " listed twice");
    for (auto& [name, v] : values) set_value(name, std::move(v));
}

bool Derivation::has_generator(std::string_view name) const {
    for (const Generator& g : generators_)
        if (g.name == name) return true;
    return false;
}

const Generator& Derivation::generator(std::string_view name) const {
    for (const Generator& g : generators_)
        if (g.name == name) return g;
    throw UnknownGenerator("'" + std::string(name) + "'");
}

Element Derivation::value(std::string_view name) const {
    const Generator& g = generator(name);
    auto it = values_.find(g.name);
    return it == values_.end() ? Element(mode_, g.arity) : it->second;
}

void Derivation::set_value(const std::string& name, Element v) {
    const Generator& g = generator(name);
    if (v.is_zero()) {
        values_.erase(name);
        return;
    }
    if (v.mode() != mode_) throw ModeMismatch("value of " + name);
    if (v.arity() != g.arity)
        throw ArityMismatch("value of " + name + " has arity " + std::to_string(v.arity()));
    for (const auto& [t, c] : v.terms())
        if (t.degree() != g.degree - 1)
            throw DegreeMismatch("value of " + name + " contains " + t.to_string() + " of degree " +
                                 std::to_string(t.degree()) + ", expected " + std::to_string(g.degree - 1));
    values_[name] = std::move(v);
}

void Derivation::add_generator(const Generator& g, std::optional<Element> v) {
    if (has_generator(g.name)) throw NameCollision("generator " + g.name + " already present");
    generators_.push_back(g);
    if (v) set_value(g.name, std::move(*v));
}

namespace {

using TermList = std::vector<std::pair<Tree, Rational>>;

// All trees obtained from t by applying d at exactly one vertex, with signs.
TermList apply_rec(const Derivation& d, const Tree& t) {
    TermList out;
    if (t.is_leaf()) return out;
    const Generator& g = t.generator();
    if (!d.has_generator(g.name)) throw UnknownGenerator("'" + g.name + "' is not in the derivation's presentation");
    auto it = d.values().find(g.name);
    if (it != d.values().end()) {
        for (const auto& [e, c] : it->second.terms()) {
            SignedTree st = graft_all(e, t.children());
            out.emplace_back(std::move(st.tree), st.sign.value() < 0 ? Rational(-c) : c);
        }
    }
    long pre = g.degree;
    const auto& kids = t.children();
    for (std::size_t i = 0; i < kids.size(); ++i) {
        for (auto& [sub, c] : apply_rec(d, kids[i])) {
            std::vector<Tree> nk = kids;
            nk[i] = std::move(sub);
            out.emplace_back(Tree::vertex(g, std::move(nk)), pre % 2 != 0 ? Rational(-c) : c);
        }
        pre += kids[i].degree();
    }
    return out;
}

}  // namespace

Element apply(const Derivation& d, const Element& x, const TermFilter& keep) {
    Element r(x.mode(), x.arity());
    if (!x.is_zero() && x.mode() != d.mode()) throw ModeMismatch("derivation applied to an element of another mode");
    for (const auto& [t, c] : x.terms())
        for (auto& [u, k] : apply_rec(d, t))
            if (!keep || keep(u)) r.add_tree(u, c * k);
    return r;
}

Element bracket(const Element& x, const Element& y) {
    if (x.mode() != y.mode()) throw ModeMismatch("bracket of elements of different modes");
    Element r(x.mode(), std::max(0, x.arity() + y.arity() - 1));
    if (x.is_zero() || y.is_zero()) return r;
    const auto dx = x.degree(), dy = y.degree();
    if (!dx || !dy) throw DegreeMismatch("bracket needs degree-homogeneous operands");
    for (int i = 1; i <= x.arity(); ++i) r += compose(x, i, y);
    Element s(x.mode(), r.arity());
    for (int i = 1; i <= y.arity(); ++i) s += compose(y, i, x);
    if ((*dx % 2 != 0) && (*dy % 2 != 0)) r += s;
    else r -= s;
    return r;
}

WeightSplitDerivation split_by_weight(const Derivation& d, std::string_view kappa) {
    WeightSplitDerivation w{Derivation(d.mode(), d.generators()), Derivation(d.mode(), d.generators())};
    for (const auto& [name, v] : d.values()) {
        const int own = name == kappa ? 1 : 0;
        for (auto& [weight, part] : kappa_weight_split(v, kappa)) {
            if (part.is_zero()) continue;
            if (weight == own) w.d0.set_value(name, part);
            else if (weight == own + 1) w.d1.set_value(name, part);
            else
                throw NonMixedDifferential("d(" + name + ") has a component of kappa-weight " +
                                           std::to_string(weight) + ": " + part.to_string());
        }
    }
    return w;
}

bool Report::ok() const {
    for (const ReportLine& l : lines)
        if (!l.pass) return false;
    return true;
}

void Report::add(std::string name, Element residue, std::string note) {
    const bool pass = residue.is_zero();
    lines.push_back({std::move(name), pass, std::move(residue), std::move(note)});
}

void Report::add_failure(std::string name, std::string note) {
    lines.push_back({std::move(name), false, Element(), std::move(note)});
}

void Report::append(const Report& other, const std::string& prefix) {
    for (ReportLine l : other.lines) {
        l.name = prefix + l.name;
        lines.push_back(std::move(l));
    }
}

std::string Report::to_string() const {
    std::string s;
    for (const ReportLine& l : lines) {
        s += l.name;
        if (l.pass) {
            s += " PASS";
        } else {
            s += " FAIL";
            if (!l.residue.is_zero() || l.note.empty()) s += " residue=" + l.residue.to_string();
        }
        if (!l.note.empty()) s += " (" + l.note + ")";
        s += "\n";
    }
    return s;
}

Report check_square_zero(const Derivation& d, int arity_bound, const TermFilter& keep) {
    Report rep;
    for (const Generator& g : d.generators()) {
        if (g.arity > arity_bound) continue;
        const Element x = Element::generator(d.mode(), g);
        rep.add(g.name, apply(d, apply(d, x, keep), keep));
    }
    return rep;
}

Derivation sum(const Derivation& a, const Derivation& b) {
    if (a.mode() != b.mode()) throw ModeMismatch("sum of derivations of different modes");
    Derivation r = a;
    for (const Generator& g : b.generators()) {
        if (!r.has_generator(g.name)) {
            r.add_generator(g, b.value(g.name));
        } else {
            if (r.generator(g.name) != g) throw NameCollision("generator " + g.name + " declared differently");
            Element v = r.value(g.name);
            v += b.value(g.name);
            r.set_value(g.name, v);
        }
    }
    return r;
}

}  // namespace curvop
