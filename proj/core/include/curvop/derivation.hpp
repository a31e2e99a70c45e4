#pragma once

#include "curvop/element.hpp"

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace curvop {

/// Predicate selecting the terms to keep; used for truncated arithmetic.
using TermFilter = std::function<bool(const Tree&)>;

/// A degree -1 derivation of a free operad, given by its values on generators
/// and extended by the Leibniz rule. Generators without a value map to zero.
class Derivation {
public:
    Derivation() = default;
    Derivation(Mode mode, std::vector<Generator> generators, std::map<std::string, Element> values = {});

    Mode mode() const { return mode_; }
    const std::vector<Generator>& generators() const { return generators_; }
    const Generator& generator(std::string_view name) const;
    bool has_generator(std::string_view name) const;
    const std::map<std::string, Element>& values() const { return values_; }

    /// Value on a generator (zero if unset). Throws UnknownGenerator.
    Element value(std::string_view name) const;
    void set_value(const std::string& name, Element v);
    void add_generator(const Generator& g, std::optional<Element> v = std::nullopt);

private:
    Mode mode_ = Mode::nonsymmetric;
    std::vector<Generator> generators_;
    std::map<std::string, Element> values_;
};

/// Leibniz extension: each vertex v in turn is replaced by its value, with
/// sign (-1)^(sum of degrees of the vertices before v in depth-first order).
Element apply(const Derivation& d, const Element& x, const TermFilter& keep = {});

/// [x, y] = sum_i x o_i y - (-1)^{|x||y|} sum_i y o_i x.
Element bracket(const Element& x, const Element& y);

/// Weight components of a derivation with respect to a distinguished arity-0 generator.
struct WeightSplitDerivation {
    Derivation d0;
    Derivation d1;
};

/// Splits values by kappa-weight relative to each generator's own weight.
/// Throws NonMixedDifferential when a component other than d0, d1 is nonzero.
WeightSplitDerivation split_by_weight(const Derivation& d, std::string_view kappa);

struct ReportLine {
    std::string name;
    bool pass = true;
    Element residue;
    std::string note;
};

struct Report {
    std::vector<ReportLine> lines;

    bool ok() const;
    void add(std::string name, Element residue, std::string note = {});
    void add_failure(std::string name, std::string note);
    void append(const Report& other, const std::string& prefix = {});
    /// One line per entry: `name PASS` or `name FAIL residue=<expr>`.
    std::string to_string() const;
};

/// d(d(g)) for every generator g of arity <= arity_bound.
Report check_square_zero(const Derivation& d, int arity_bound, const TermFilter& keep = {});

/// Pointwise sum of two derivations on the union of their generators.
Derivation sum(const Derivation& a, const Derivation& b);

}  // namespace curvop
