#pragma once

#include "curvop/derivation.hpp"

#include <map>
#include <string>
#include <vector>

namespace curvop {

/// A degree-0 morphism of free operads, fixed by the images of the source
/// generators. Unassigned generators map to zero. `precision` >= 0 marks an
/// alpha-truncated target.
class Morphism {
public:
    Morphism() = default;
    Morphism(Mode mode, std::vector<Generator> source, std::vector<Generator> target, int precision = -1);

    Mode mode() const { return mode_; }
    const std::vector<Generator>& source() const { return source_; }
    const std::vector<Generator>& target() const { return target_; }
    int precision() const { return precision_; }
    void set_precision(int p) { precision_ = p; }
    const std::map<std::string, Element>& images() const { return images_; }

    const Generator& source_generator(std::string_view name) const;
    Element image(std::string_view name) const;
    void set_image(const std::string& name, Element v);

    /// Drops terms with more alphas than the precision.
    TermFilter filter() const;

private:
    Mode mode_ = Mode::nonsymmetric;
    std::vector<Generator> source_;
    std::vector<Generator> target_;
    std::map<std::string, Element> images_;
    int precision_ = -1;
};

/// Extends the assignment multiplicatively; terms failing `keep` (or the
/// morphism's own precision) are dropped as soon as they appear.
Element apply(const Morphism& f, const Element& x, const TermFilter& keep = {});

/// g o f on generators.
Morphism compose(const Morphism& g, const Morphism& f);

/// d_target(f(g)) - f(d_source(g)) for every source generator of arity <= bound,
/// restricted to terms with at most `compare_alpha` alphas when that is >= 0.
Report check_chain_map(const Morphism& f, const Derivation& d_source, const Derivation& d_target, int arity_bound,
                       int compare_alpha = -1);

}  // namespace curvop
