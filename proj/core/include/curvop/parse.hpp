#pragma once

#include "curvop/element.hpp"

#include <span>
#include <string_view>

namespace curvop {

const Generator* find_generator(std::span<const Generator> gens, std::string_view name);

/// Parses `coeff * tree (+|- coeff * tree)*`, trees written `gen(child, ...)`
/// with external leaves as positive integers. "0" is the zero element, whose
/// arity is taken from `zero_arity`. Symmetric input is canonicalized.
Element parse_element(std::string_view text, Mode mode, std::span<const Generator> gens, int zero_arity = 0);

Tree parse_tree(std::string_view text, std::span<const Generator> gens);

}  // namespace curvop
