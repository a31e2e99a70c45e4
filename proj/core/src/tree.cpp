#include "curvop/tree.hpp"

#include "curvop/errors.hpp"

#include <algorithm>

namespace curvop {

std::string_view to_string(Mode m) { return m == Mode::nonsymmetric ? "ns" : "sym"; }

Mode parse_mode(std::string_view s) {
    if (s == "ns" || s == "nonsymmetric") return Mode::nonsymmetric;
    if (s == "sym" || s == "symmetric") return Mode::symmetric;
    throw InvalidArgument("unknown mode '" + std::string(s) + "' (expected ns or sym)");
}

Tree Tree::leaf(int label) {
    if (label <= 0) throw MalformedTree("leaf labels must be positive");
    Tree t;
    t.label_ = label;
    t.arity_ = 1;
    t.min_leaf_ = label;
    return t;
}

Tree Tree::vertex(Generator g, std::vector<Tree> children) {
    if (static_cast<int>(children.size()) != g.arity)
        throw MalformedTree("generator " + g.name + " of arity " + std::to_string(g.arity) + " given " +
                            std::to_string(children.size()) + " children");
    Tree t;
    t.degree_ = g.degree;
    for (const Tree& c : children) {
        t.arity_ += c.arity_;
        t.degree_ += c.degree_;
        if (c.min_leaf_ && (!t.min_leaf_ || c.min_leaf_ < t.min_leaf_)) t.min_leaf_ = c.min_leaf_;
    }
    t.gen_ = std::move(g);
    t.children_ = std::move(children);
    return t;
}

int Tree::vertex_count() const {
    if (is_leaf()) return 0;
    int n = 1;
    for (const Tree& c : children_) n += c.vertex_count();
    return n;
}

int Tree::count(std::string_view generator_name) const {
    if (is_leaf()) return 0;
    int n = gen_.name == generator_name ? 1 : 0;
    for (const Tree& c : children_) n += c.count(generator_name);
    return n;
}

std::vector<int> Tree::leaf_labels() const {
    std::vector<int> out;
    std::function<void(const Tree&)> walk = [&](const Tree& t) {
        if (t.is_leaf()) {
            out.push_back(t.label());
            return;
        }
        for (const Tree& c : t.children()) walk(c);
    };
    walk(*this);
    return out;
}

void Tree::for_each_vertex(const std::function<void(const Tree&)>& f) const {
    if (is_leaf()) return;
    f(*this);
    for (const Tree& c : children_) c.for_each_vertex(f);
}

std::string Tree::to_string() const {
    if (is_leaf()) return std::to_string(label_);
    if (children_.empty()) return gen_.name;
    std::string s = gen_.name + "(";
    for (std::size_t i = 0; i < children_.size(); ++i) {
        if (i) s += ", ";
        s += children_[i].to_string();
    }
    return s + ")";
}

std::strong_ordering operator<=>(const Tree& a, const Tree& b) {
    if (a.is_leaf() != b.is_leaf()) return a.is_leaf() ? std::strong_ordering::less : std::strong_ordering::greater;
    if (a.is_leaf()) return a.label_ <=> b.label_;
    if (auto c = a.gen_ <=> b.gen_; c != 0) return c;
    // Same generator, hence same number of children.
    for (std::size_t i = 0; i < a.children_.size(); ++i)
        if (auto c = a.children_[i] <=> b.children_[i]; c != 0) return c;
    return std::strong_ordering::equal;
}

namespace {

struct GraftState {
    std::span<const Tree> blocks;
    std::vector<bool> placed;
    long placed_degree = 0;
    long odd_swaps = 0;
};

Tree graft_rec(const Tree& t, GraftState& st) {
    if (t.is_leaf()) {
        const int j = t.label();
        if (j > static_cast<int>(st.blocks.size()) || st.placed[static_cast<std::size_t>(j - 1)])
            throw MalformedTree("graft: leaf label " + std::to_string(j) + " out of range or repeated");
        const Tree& b = st.blocks[static_cast<std::size_t>(j - 1)];
        if (b.degree() % 2 != 0) {
            for (std::size_t k = static_cast<std::size_t>(j); k < st.blocks.size(); ++k)
                if (st.placed[k] && st.blocks[k].degree() % 2 != 0) ++st.odd_swaps;
        }
        st.placed[static_cast<std::size_t>(j - 1)] = true;
        st.placed_degree += b.degree();
        return b;
    }
    if (t.generator().degree % 2 != 0 && st.placed_degree % 2 != 0) ++st.odd_swaps;
    std::vector<Tree> kids;
    kids.reserve(t.children().size());
    for (const Tree& c : t.children()) kids.push_back(graft_rec(c, st));
    return Tree::vertex(t.generator(), std::move(kids));
}

}  // namespace

SignedTree graft_all(const Tree& outer, std::span<const Tree> blocks) {
    if (outer.arity() != static_cast<int>(blocks.size()))
        throw ArityMismatch("graft: tree of arity " + std::to_string(outer.arity()) + " given " +
                            std::to_string(blocks.size()) + " blocks");
    GraftState st{blocks, std::vector<bool>(blocks.size(), false)};
    Tree t = graft_rec(outer, st);
    return {std::move(t), Sign::parity(st.odd_swaps)};
}

Tree relabel(const Tree& t, const std::function<int(int)>& f) {
    if (t.is_leaf()) return Tree::leaf(f(t.label()));
    std::vector<Tree> kids;
    kids.reserve(t.children().size());
    for (const Tree& c : t.children()) kids.push_back(relabel(c, f));
    return Tree::vertex(t.generator(), std::move(kids));
}

Tree rename_vertices(const Tree& t, std::string_view from, const Generator& to) {
    if (t.is_leaf()) return t;
    std::vector<Tree> kids;
    kids.reserve(t.children().size());
    for (const Tree& c : t.children()) kids.push_back(rename_vertices(c, from, to));
    return Tree::vertex(t.generator().name == from ? to : t.generator(), std::move(kids));
}

namespace {

// Order of siblings under an invariant vertex.
bool sibling_before(const Tree& a, const Tree& b) {
    const bool a_nullary = a.min_leaf() == 0;
    const bool b_nullary = b.min_leaf() == 0;
    if (a_nullary != b_nullary) return !a_nullary;
    if (!a_nullary) return a.min_leaf() < b.min_leaf();
    return a < b;
}

}  // namespace

bool canonical_form(const Tree& t, SignedTree& out) {
    if (t.is_leaf()) {
        out = {t, Sign::plus()};
        return true;
    }
    Sign sign = Sign::plus();
    std::vector<Tree> kids;
    kids.reserve(t.children().size());
    for (const Tree& c : t.children()) {
        SignedTree sc;
        if (!canonical_form(c, sc)) return false;
        sign *= sc.sign;
        kids.push_back(std::move(sc.tree));
    }
    if (t.generator().symmetry == Symmetry::invariant && kids.size() > 1) {
        // Insertion sort by adjacent transpositions, each contributing its Koszul sign.
        for (std::size_t i = 1; i < kids.size(); ++i) {
            for (std::size_t j = i; j > 0 && sibling_before(kids[j], kids[j - 1]); --j) {
                if (kids[j].degree() % 2 != 0 && kids[j - 1].degree() % 2 != 0) sign *= Sign::minus();
                std::swap(kids[j], kids[j - 1]);
            }
        }
        for (std::size_t i = 1; i < kids.size(); ++i)
            if (kids[i].min_leaf() == 0 && kids[i].degree() % 2 != 0 && kids[i] == kids[i - 1]) return false;
    }
    out = {Tree::vertex(t.generator(), std::move(kids)), sign};
    return true;
}

}  // namespace curvop
