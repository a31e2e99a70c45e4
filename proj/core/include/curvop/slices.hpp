#pragma once

#include "curvop/derivation.hpp"
#include "curvop/linalg.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace curvop {

/// Exact number of vertices per generator name; generators not listed must not occur.
using VertexCounts = std::map<std::string, int>;

/// All canonical nonzero trees of the given arity built from exactly the
/// given vertex counts. Symmetric mode ranges over all leaf labellings.
std::vector<Tree> enumerate_trees(Mode mode, const std::vector<Generator>& gens, int arity,
                                  const VertexCounts& counts);

/// An ordered basis of canonical trees (sorted by serialized form).
class BasisSlice {
public:
    BasisSlice() = default;
    BasisSlice(Mode mode, int arity, std::string description, std::vector<Tree> trees);

    Mode mode() const { return mode_; }
    int arity() const { return arity_; }
    const std::string& description() const { return description_; }
    std::size_t size() const { return trees_.size(); }
    const std::vector<Tree>& trees() const { return trees_; }
    const Tree& operator[](std::size_t i) const { return trees_[i]; }
    /// Index of a canonical tree, or -1.
    long index_of(const Tree& t) const;

    Element element(std::size_t i) const;
    Element element(const std::vector<Rational>& coords) const;

private:
    Mode mode_ = Mode::nonsymmetric;
    int arity_ = 0;
    std::string description_;
    std::vector<Tree> trees_;
    std::map<Tree, std::size_t> index_;
};

BasisSlice make_slice(Mode mode, const std::vector<Generator>& gens, int arity, const VertexCounts& counts,
                      std::string description);

using LinearMap = std::function<Element(const Element&)>;

/// Column j holds the coordinates of map(domain[j]). Throws ImageEscapesSlice.
RationalMatrix matrix_of(const LinearMap& map, const BasisSlice& domain, const BasisSlice& codomain);

struct SliceCheck {
    std::string name;
    std::size_t dimension = 0;
    long value = 0;
    bool ok = true;
};

struct HomologyReport {
    std::vector<SliceCheck> checks;
    bool ok() const;
    /// One line per slice: `name dim=D value=V PASS|FAIL`.
    std::string to_string() const;
};

/// Nonsymmetric free operad on one binary degree -1 generator `b` and kappa:
/// homology of [-, kappa] in every slice with 1 <= arity <= max_arity and
/// kappa-weight <= max_weight.
HomologyReport bracket_kappa_homology(int max_arity, int max_weight);

/// P v T with P free on one binary degree -1 generator (invariant in
/// symmetric mode): the kernel of d_T in kappa_T-weight 0 with positive alpha
/// count, and the weight-1 homology, for arity <= max_arity and alpha count
/// <= max_alpha.
HomologyReport dT_homology(Mode mode, int max_arity, int max_alpha);

/// Generators b, alpha, kappa_T used by dT_homology.
std::vector<Generator> dT_test_generators(Mode mode);

/// Estimated number of trees the two drivers enumerate.
double estimate_bracket_kappa_size(int max_arity, int max_weight);
double estimate_dT_size(Mode mode, int max_arity, int max_alpha);

}  // namespace curvop
