#pragma once

#include "curvop/permutation.hpp"
#include "curvop/rational.hpp"
#include "curvop/tree.hpp"

#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace curvop {

/// A finite rational combination of canonical trees of one arity in a free
/// (non)symmetric operad. Zero coefficients are never stored.
class Element {
public:
    using Terms = std::map<Tree, Rational>;

    Element() = default;
    Element(Mode mode, int arity) : mode_(mode), arity_(arity) {}

    /// The corolla on g with leaves 1..arity.
    static Element generator(Mode mode, const Generator& g, Rational c = 1);
    /// Validates and canonicalizes a raw tree.
    static Element from_tree(Mode mode, const Tree& t, Rational c = 1);

    Mode mode() const { return mode_; }
    int arity() const { return arity_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const Terms& terms() const { return terms_; }
    Rational coefficient(const Tree& t) const;
    /// Degree of the terms if they all agree (nullopt for zero or mixed degree).
    std::optional<int> degree() const;

    /// Adds c * t, where t is assumed canonical and of the right arity.
    void add_canonical(const Tree& t, const Rational& c);
    /// Adds c * t after canonicalizing t.
    void add_tree(const Tree& t, const Rational& c);

    Element& operator+=(const Element& o);
    Element& operator-=(const Element& o);
    Element& operator*=(const Rational& c);
    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    friend Element operator*(const Rational& c, Element a) { return a *= c; }
    Element operator-() const;

    bool operator==(const Element& o) const;

    /// Terms separated by " + " / " - "; "0" for the zero element.
    std::string to_string() const;

    /// Keeps the terms satisfying pred.
    Element filter(const std::function<bool(const Tree&)>& pred) const;

private:
    void check_compatible(const Element& o, const char* what) const;

    Mode mode_ = Mode::nonsymmetric;
    int arity_ = 0;
    Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const Element& e);

/// Applies the canonical form of the given mode; returns false if the tree is zero.
bool canonicalize(Mode mode, const Tree& t, SignedTree& out);

/// x ∘_i y. Leaves of y are inserted at position i; other leaves of x shift.
Element compose(const Element& x, int i, const Element& y);

/// x^sigma: leaf k is relabelled sigma(k). Symmetric mode only.
Element act(const Permutation& sigma, const Element& x);

/// Terms grouped by the number of vertices labelled `name`.
std::map<int, Element> count_split(const Element& x, std::string_view name);
std::map<int, Element> kappa_weight_split(const Element& x, std::string_view kappa = "kappa");
std::map<int, Element> alpha_filtration_split(const Element& x, std::string_view alpha = "alpha");

/// Drops every term with more than max_count vertices labelled `name`.
Element truncate_count(const Element& x, std::string_view name, int max_count);

}  // namespace curvop
