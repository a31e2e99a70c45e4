#include "curvop/algebra.hpp"

#include "curvop/errors.hpp"
#include "curvop/twisting.hpp"

#include <algorithm>
#include <set>

namespace curvop {

GradedSpace::GradedSpace(std::vector<BasisVector> basis) : basis_(std::move(basis)) {
    std::set<std::string> seen;
    for (const BasisVector& b : basis_) {
        if (b.name.empty()) throw InvalidArgument("basis vectors need names");
        if (!seen.insert(b.name).second) throw NameCollision("basis name '" + b.name + "' repeated");
    }
}

std::size_t GradedSpace::index(const std::string& name) const {
    for (std::size_t i = 0; i < basis_.size(); ++i)
        if (basis_[i].name == name) return i;
    throw InvalidArgument("unknown basis vector '" + name + "'");
}

bool GradedSpace::operator==(const GradedSpace& o) const {
    if (basis_.size() != o.basis_.size()) return false;
    for (std::size_t i = 0; i < basis_.size(); ++i)
        if (basis_[i].name != o.basis_[i].name || basis_[i].degree != o.basis_[i].degree) return false;
    return true;
}

bool AlgElement::is_zero() const {
    return std::all_of(coords.begin(), coords.end(), [](const Rational& c) { return c == 0; });
}

AlgElement make_element(const GradedSpace& space, const std::map<std::string, Rational>& coords, int zero_degree) {
    AlgElement e{Vec(space.dim()), zero_degree};
    bool first = true;
    for (const auto& [name, c] : coords) {
        if (c == 0) continue;
        const std::size_t i = space.index(name);
        if (!first && space.degree(i) != e.degree)
            throw DegreeMismatch("element mixes degrees " + std::to_string(e.degree) + " and " +
                                 std::to_string(space.degree(i)));
        e.degree = space.degree(i);
        first = false;
        e.coords[i] = c;
    }
    return e;
}

MultilinearMap::MultilinearMap(SpacePtr space, int arity, int degree)
    : space_(std::move(space)), arity_(arity), degree_(degree) {
    if (!space_) throw InvalidArgument("multilinear map without a space");
    if (arity < 0) throw InvalidArgument("negative arity");
}

MultilinearMap MultilinearMap::identity(const SpacePtr& space) {
    MultilinearMap m(space, 1, 0);
    for (std::size_t i = 0; i < space->dim(); ++i) m.add({i}, i, 1);
    return m;
}

MultilinearMap MultilinearMap::constant(const SpacePtr& space, const AlgElement& value) {
    MultilinearMap m(space, 0, value.degree);
    for (std::size_t i = 0; i < value.coords.size(); ++i) m.add({}, i, value.coords[i]);
    return m;
}

void MultilinearMap::add(const Inputs& inputs, std::size_t out, const Rational& c) {
    if (c == 0) return;
    if (static_cast<int>(inputs.size()) != arity_) throw ArityMismatch("input tuple of the wrong length");
    int deg = degree_;
    for (std::size_t i : inputs) deg += space_->degree(i);
    if (space_->degree(out) != deg)
        throw DegreeMismatch("coefficient violates homogeneity: output " + space_->name(out) + " has degree " +
                             std::to_string(space_->degree(out)) + ", expected " + std::to_string(deg));
    auto& row = entries_[inputs];
    Rational& v = row[out];
    v += c;
    if (v == 0) {
        row.erase(out);
        if (row.empty()) entries_.erase(inputs);
    }
}

Rational MultilinearMap::coefficient(const Inputs& inputs, std::size_t out) const {
    auto it = entries_.find(inputs);
    if (it == entries_.end()) return 0;
    auto jt = it->second.find(out);
    return jt == it->second.end() ? Rational(0) : jt->second;
}

AlgElement MultilinearMap::evaluate(const std::vector<AlgElement>& args) const {
    if (static_cast<int>(args.size()) != arity_) throw ArityMismatch("wrong number of arguments");
    int deg = degree_;
    for (const AlgElement& a : args) deg += a.degree;
    AlgElement r{Vec(space_->dim()), deg};
    for (const auto& [in, row] : entries_) {
        Rational w = 1;
        for (std::size_t k = 0; k < in.size() && w != 0; ++k) w *= args[k].coords[in[k]];
        if (w == 0) continue;
        for (const auto& [out, c] : row) r.coords[out] += w * c;
    }
    return r;
}

AlgElement MultilinearMap::value() const {
    if (arity_ != 0) throw ArityMismatch("value() of a map of positive arity");
    return evaluate({});
}

MultilinearMap& MultilinearMap::operator+=(const MultilinearMap& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) {
        arity_ = o.arity_;
        degree_ = o.degree_;
        if (!space_) space_ = o.space_;
    }
    if (arity_ != o.arity_) throw ArityMismatch("sum of maps of different arity");
    if (degree_ != o.degree_) throw DegreeMismatch("sum of maps of different degree");
    for (const auto& [in, row] : o.entries_)
        for (const auto& [out, c] : row) add(in, out, c);
    return *this;
}

MultilinearMap& MultilinearMap::operator*=(const Rational& c) {
    if (c == 0) {
        entries_.clear();
        return *this;
    }
    for (auto& [in, row] : entries_)
        for (auto& [out, v] : row) v *= c;
    return *this;
}

MultilinearMap operator-(MultilinearMap a, const MultilinearMap& b) {
    MultilinearMap nb = b;
    nb *= -1;
    return a += nb;
}

bool MultilinearMap::operator==(const MultilinearMap& o) const {
    if (is_zero() && o.is_zero()) return true;
    return arity_ == o.arity_ && degree_ == o.degree_ && entries_ == o.entries_;
}

MultilinearMap endo_compose(const MultilinearMap& f, int i, const MultilinearMap& g) {
    if (i < 1 || i > f.arity())
        throw PositionOutOfRange("endo_compose at " + std::to_string(i) + " of arity " + std::to_string(f.arity()));
    const SpacePtr& sp = f.space_ptr();
    MultilinearMap r(sp, f.arity() + g.arity() - 1, f.degree() + g.degree());
    const std::size_t pos = static_cast<std::size_t>(i - 1);
    // g's outputs indexed for quick lookup.
    std::map<std::size_t, std::vector<std::pair<const MultilinearMap::Inputs*, Rational>>> by_out;
    for (const auto& [gin, row] : g.entries())
        for (const auto& [out, c] : row) by_out[out].emplace_back(&gin, c);
    for (const auto& [fin, row] : f.entries()) {
        auto it = by_out.find(fin[pos]);
        if (it == by_out.end()) continue;
        int before = 0;
        for (std::size_t k = 0; k < pos; ++k) before += sp->degree(fin[k]);
        const bool odd = (g.degree() % 2 != 0) && (before % 2 != 0);
        for (const auto& [gin, gc] : it->second) {
            MultilinearMap::Inputs in(fin.begin(), fin.begin() + static_cast<long>(pos));
            in.insert(in.end(), gin->begin(), gin->end());
            in.insert(in.end(), fin.begin() + static_cast<long>(pos) + 1, fin.end());
            for (const auto& [out, fc] : row) r.add(in, out, odd ? Rational(-(fc * gc)) : Rational(fc * gc));
        }
    }
    return r;
}

MultilinearMap endo_act(const Permutation& sigma, const MultilinearMap& f) {
    if (sigma.size() != f.arity()) throw ArityMismatch("permutation size differs from the map's arity");
    const SpacePtr& sp = f.space_ptr();
    MultilinearMap r(sp, f.arity(), f.degree());
    const std::size_t n = static_cast<std::size_t>(f.arity());
    for (const auto& [in, row] : f.entries()) {
        MultilinearMap::Inputs c(n);
        for (std::size_t k = 0; k < n; ++k) c[static_cast<std::size_t>(sigma(static_cast<int>(k) + 1) - 1)] = in[k];
        bool odd = false;
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t l = k + 1; l < n; ++l)
                if (sigma(static_cast<int>(k) + 1) > sigma(static_cast<int>(l) + 1) && sp->degree(in[k]) % 2 != 0 &&
                    sp->degree(in[l]) % 2 != 0)
                    odd = !odd;
        for (const auto& [out, v] : row) r.add(c, out, odd ? Rational(-v) : v);
    }
    return r;
}

MultilinearMap boundary(const MultilinearMap& d_A, const MultilinearMap& f) {
    MultilinearMap r = endo_compose(d_A, 1, f);
    MultilinearMap inner(f.space_ptr(), f.arity(), f.degree() + d_A.degree());
    for (int i = 1; i <= f.arity(); ++i) inner += endo_compose(f, i, d_A);
    if (f.degree() % 2 != 0) return r + inner;
    return r - inner;
}

MultilinearMap AlgebraStructure::op(int n) const {
    auto it = ops.find(n);
    return it == ops.end() ? MultilinearMap(space, n, -1) : it->second;
}

int AlgebraStructure::max_op_arity() const {
    int m = -1;
    for (const auto& [n, f] : ops)
        if (!f.is_zero()) m = std::max(m, n);
    return m;
}

Bindings structure_bindings(const AlgebraStructure& s, int max_arity) {
    Bindings b;
    for (int n = 0; n <= max_arity; ++n) b.emplace(op_name(s.mode(), n), s.op(n));
    return b;
}

namespace {

MultilinearMap realize_planar(const SpacePtr& space, const Tree& t, const Bindings& bindings) {
    if (t.is_leaf()) return MultilinearMap::identity(space);
    auto it = bindings.find(t.generator().name);
    if (it == bindings.end()) throw UnboundGenerator("no value bound to '" + t.generator().name + "'");
    if (it->second.arity() != t.generator().arity)
        throw ArityMismatch("value bound to '" + t.generator().name + "' has the wrong arity");
    MultilinearMap r = it->second;
    if (r.is_zero()) return MultilinearMap(space, t.arity(), t.degree());
    int pos = 1;
    for (const Tree& c : t.children()) {
        r = endo_compose(r, pos, realize_planar(space, c, bindings));
        pos += c.arity();
        if (r.is_zero()) return MultilinearMap(space, t.arity(), t.degree());
    }
    return r;
}

}  // namespace

MultilinearMap realize(const SpacePtr& space, const Element& x, const Bindings& bindings) {
    MultilinearMap r(space, x.arity(), x.degree().value_or(-1));
    for (const auto& [t, c] : x.terms()) {
        MultilinearMap m = realize_planar(space, t, bindings);
        if (x.mode() == Mode::symmetric) {
            const std::vector<int> labels = t.leaf_labels();
            m = endo_act(Permutation(labels), m);
        }
        m *= c;
        r += m;
    }
    return r;
}

MultilinearMap realize(const AlgebraStructure& s, const Element& x) {
    int bound = std::max(0, s.max_op_arity());
    for (const auto& [t, c] : x.terms())
        t.for_each_vertex([&](const Tree& v) { bound = std::max(bound, v.generator().arity); });
    return realize(s.space, x, structure_bindings(s, bound));
}

namespace {

std::string describe(const MultilinearMap& f) {
    std::string s;
    for (const auto& [in, row] : f.entries())
        for (const auto& [out, c] : row) {
            if (!s.empty()) s += ", ";
            s += "(";
            for (std::size_t k = 0; k < in.size(); ++k) s += (k ? "," : "") + f.space().name(in[k]);
            s += ")->" + curvop::to_string(c) + "*" + f.space().name(out);
        }
    return s;
}

}  // namespace

Report check_structure(const AlgebraStructure& s, int arity_bound) {
    Report rep;
    const PresetKind kind = s.kind == AlgebraKind::cAinf ? PresetKind::cAinf : PresetKind::cLinf;
    const Presentation p = build_preset(kind, std::max(arity_bound, s.max_op_arity()) + 2);
    const Bindings b = structure_bindings(s, p.arity_bound);
    for (const auto& [n, f] : s.ops) {
        if (f.arity() != n) rep.add_failure(op_name(s.mode(), n), "op stored under the wrong arity");
        if (f.degree() != -1) rep.add_failure(op_name(s.mode(), n), "ops must have degree -1");
    }
    if (s.d_A.arity() != 1 || s.d_A.degree() != -1) rep.add_failure("d_A", "differential must have arity 1, degree -1");
    const MultilinearMap dd = endo_compose(s.d_A, 1, s.d_A);
    if (!dd.is_zero()) rep.add_failure("d_A^2", "residue " + describe(dd));
    for (int n = 0; n <= arity_bound; ++n) {
        const std::string name = op_name(s.mode(), n);
        const MultilinearMap lhs = realize(s.space, p.d.value(name), b);
        const MultilinearMap rhs = boundary(s.d_A, s.op(n));
        const MultilinearMap diff = lhs - rhs;
        if (diff.is_zero())
            rep.add("structure(" + name + ")", Element());
        else
            rep.add_failure("structure(" + name + ")", "residue " + describe(diff));
        if (s.kind == AlgebraKind::cLinf) {
            const MultilinearMap f = s.op(n);
            bool symmetric = true;
            for (int a = 1; a < n; ++a) symmetric = symmetric && endo_act(Permutation::transposition(n, a, a + 1), f) == f;
            if (!symmetric) rep.add_failure("symmetry(" + name + ")", "op is not graded-symmetric");
        }
    }
    return rep;
}

namespace {

// Realizations of eta(op_n) split by the number of alphas, checked against the bound.
MultilinearMap twisted_op(const AlgebraStructure& s, int n, const Bindings& b) {
    const int top = std::max(0, s.max_op_arity() - n);
    const Element e = eta(s.mode(), n, top);
    MultilinearMap r(s.space, n, -1);
    for (const auto& [k, part] : alpha_filtration_split(e)) {
        const MultilinearMap m = realize(s.space, part, b);
        if (k > s.nilpotency_bound && !m.is_zero())
            throw NilpotencyExceeded("a term of " + op_name(s.mode(), n) + " with " + std::to_string(k) +
                                     " insertions is nonzero (bound " + std::to_string(s.nilpotency_bound) + ")");
        r += m;
    }
    return r;
}

Bindings twist_bindings(const AlgebraStructure& s, const AlgElement& a) {
    if (a.degree != 0 && !a.is_zero()) throw DegreeMismatch("twisting element must have degree 0");
    Bindings b = structure_bindings(s, std::max(0, s.max_op_arity()));
    AlgElement a0 = a;
    a0.degree = 0;
    b.emplace(std::string(kAlpha), MultilinearMap::constant(s.space, a0));
    AlgElement da = s.d_A.evaluate({a0});
    b.emplace(std::string(kKappaT), MultilinearMap::constant(s.space, da));
    return b;
}

}  // namespace

AlgElement curvature_of(const AlgebraStructure& s, const AlgElement& a) {
    if (a.degree != 0 && !a.is_zero()) throw DegreeMismatch("curvature needs a degree-0 element");
    AlgElement a0 = a;
    a0.degree = 0;
    AlgElement r = s.d_A.evaluate({a0});
    for (const auto& [k, f] : s.ops) {
        const AlgElement v = f.evaluate(std::vector<AlgElement>(static_cast<std::size_t>(k), a0));
        if (v.is_zero()) continue;
        if (k > s.nilpotency_bound)
            throw NilpotencyExceeded("op_" + std::to_string(k) + "(a, ..., a) is nonzero beyond the nilpotency bound");
        const Rational w = s.kind == AlgebraKind::cLinf ? factorial_inverse(k) : Rational(1);
        for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] += w * v.coords[i];
    }
    return r;
}

AlgebraStructure twist_algebra(const AlgebraStructure& s, const AlgElement& a) {
    const Bindings b = twist_bindings(s, a);
    AlgebraStructure r = s;
    r.ops.clear();
    for (int n = 0; n <= std::max(0, s.max_op_arity()); ++n) {
        MultilinearMap m = twisted_op(s, n, b);
        if (!m.is_zero()) r.ops.emplace(n, std::move(m));
    }
    return r;
}

std::string to_string(const GradedSpace& space, const AlgElement& e) {
    std::string s;
    for (std::size_t i = 0; i < e.coords.size(); ++i) {
        const Rational& c = e.coords[i];
        if (c == 0) continue;
        if (s.empty())
            s += c < 0 ? "-" : "";
        else
            s += c < 0 ? " - " : " + ";
        if (abs(c) != 1) s += curvop::to_string(Rational(abs(c))) + " * ";
        s += space.name(i);
    }
    return s.empty() ? "0" : s;
}

}  // namespace curvop
