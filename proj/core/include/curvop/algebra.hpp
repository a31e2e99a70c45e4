#pragma once

#include "curvop/derivation.hpp"
#include "curvop/presets.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace curvop {

struct BasisVector {
    std::string name;
    int degree = 0;
};

/// A finite-dimensional graded rational vector space given by a named basis.
class GradedSpace {
public:
    GradedSpace() = default;
    explicit GradedSpace(std::vector<BasisVector> basis);

    std::size_t dim() const { return basis_.size(); }
    const std::vector<BasisVector>& basis() const { return basis_; }
    int degree(std::size_t i) const { return basis_[i].degree; }
    const std::string& name(std::size_t i) const { return basis_[i].name; }
    /// Throws InvalidArgument for unknown names.
    std::size_t index(const std::string& name) const;

    bool operator==(const GradedSpace& o) const;

private:
    std::vector<BasisVector> basis_;
};

using SpacePtr = std::shared_ptr<const GradedSpace>;

/// Coordinates over a GradedSpace basis.
using Vec = std::vector<Rational>;

/// A homogeneous element of a graded space.
struct AlgElement {
    Vec coords;
    int degree = 0;

    bool is_zero() const;
};

/// Builds an element from name -> coefficient pairs; all nonzero coordinates
/// must share one degree (the degree of the zero element is `zero_degree`).
AlgElement make_element(const GradedSpace& space, const std::map<std::string, Rational>& coords, int zero_degree = 0);

/// A homogeneous multilinear map A^{(x)n} -> A: basis input tuple -> output vector.
class MultilinearMap {
public:
    using Inputs = std::vector<std::size_t>;

    MultilinearMap() = default;
    MultilinearMap(SpacePtr space, int arity, int degree);

    static MultilinearMap identity(const SpacePtr& space);
    /// The arity-0 map with the given value.
    static MultilinearMap constant(const SpacePtr& space, const AlgElement& value);

    const GradedSpace& space() const { return *space_; }
    const SpacePtr& space_ptr() const { return space_; }
    int arity() const { return arity_; }
    int degree() const { return degree_; }
    bool is_zero() const { return entries_.empty(); }
    const std::map<Inputs, std::map<std::size_t, Rational>>& entries() const { return entries_; }

    /// Adds c to the coefficient of basis `out` in f(inputs). Checks homogeneity.
    void add(const Inputs& inputs, std::size_t out, const Rational& c);
    Rational coefficient(const Inputs& inputs, std::size_t out) const;

    /// f(v_1, ..., v_n) for homogeneous arguments, with the Koszul sign of
    /// passing f over nothing (arguments are plugged in order).
    AlgElement evaluate(const std::vector<AlgElement>& args) const;
    /// The value of an arity-0 map.
    AlgElement value() const;

    MultilinearMap& operator+=(const MultilinearMap& o);
    MultilinearMap& operator*=(const Rational& c);
    friend MultilinearMap operator+(MultilinearMap a, const MultilinearMap& b) { return a += b; }
    friend MultilinearMap operator-(MultilinearMap a, const MultilinearMap& b);

    bool operator==(const MultilinearMap& o) const;

private:
    SpacePtr space_;
    int arity_ = 0;
    int degree_ = 0;
    std::map<Inputs, std::map<std::size_t, Rational>> entries_;
};

/// f o_i g with sign (-1)^{|g| (|x_1| + ... + |x_{i-1}|)}.
MultilinearMap endo_compose(const MultilinearMap& f, int i, const MultilinearMap& g);

/// f^sigma(x_1, ..., x_n) = (Koszul sign) f(x_sigma(1), ..., x_sigma(n)).
MultilinearMap endo_act(const Permutation& sigma, const MultilinearMap& f);

/// d_A f - (-1)^{|f|} sum_i f o_i d_A.
MultilinearMap boundary(const MultilinearMap& d_A, const MultilinearMap& f);

enum class AlgebraKind { cAinf, cLinf };

/// A cAinf / cLinf algebra: ops mu_n (resp. ell_n) of degree -1 on a graded space.
struct AlgebraStructure {
    AlgebraKind kind = AlgebraKind::cAinf;
    SpacePtr space;
    MultilinearMap d_A;
    /// n -> op; absent arities are zero.
    std::map<int, MultilinearMap> ops;
    /// Longest series of element insertions that may be nonzero.
    int nilpotency_bound = 0;
    /// Named elements carried along by manifests.
    std::map<std::string, AlgElement> elements;

    Mode mode() const { return kind == AlgebraKind::cAinf ? Mode::nonsymmetric : Mode::symmetric; }
    /// The op of arity n (zero map if absent).
    MultilinearMap op(int n) const;
    int max_op_arity() const;
};

/// Values of named operad generators in End(A).
using Bindings = std::map<std::string, MultilinearMap>;

/// Bindings of mu_n / ell_n to the structure's ops (including zero ops up to max_arity).
Bindings structure_bindings(const AlgebraStructure& s, int max_arity);

/// Evaluates an operad element in End(A). Throws UnboundGenerator.
MultilinearMap realize(const SpacePtr& space, const Element& x, const Bindings& bindings);
MultilinearMap realize(const AlgebraStructure& s, const Element& x);

/// realize(d mu_n) - boundary(realize(mu_n)) for n <= arity_bound. Also flags
/// ops that are not graded-symmetric in the cLinf case.
Report check_structure(const AlgebraStructure& s, int arity_bound);

/// d_A a + sum_k w_k op_k(a, ..., a), w_k = 1 (cAinf) or 1/k! (cLinf).
AlgElement curvature_of(const AlgebraStructure& s, const AlgElement& a);

/// The structure pulled back along eta with alpha -> a, kappa_T -> d_A a.
AlgebraStructure twist_algebra(const AlgebraStructure& s, const AlgElement& a);

std::string to_string(const GradedSpace& space, const AlgElement& e);

}  // namespace curvop
