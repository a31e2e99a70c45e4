#pragma once

#include "curvop/curv.hpp"
#include "curvop/morphism.hpp"
#include "curvop/presets.hpp"

#include <string>
#include <string_view>

namespace curvop {

/// Line-based text manifests. Header lines `key = value` come first, then
/// sections opened by a line `name:`. Generator sections hold lines
/// `name arity degree [planar|invariant]`; value sections hold lines
/// `generator = expression` in the element grammar. `#` starts a comment.
///
/// Presentation: name, mode, arity_bound, alpha_truncation, optional kappa and
/// inexact (comma separated); sections `generators:` and `d:`.
/// Curv object: the same header with a mandatory kappa; sections
/// `generators:`, `d0:` and `d1:`.
/// Morphism: mode and precision; sections `source:`, `target:`, `images:`.
std::string write_presentation(const Presentation& p);
Presentation parse_presentation(std::string_view text);

std::string write_curv(const CurvObject& q);
CurvObject parse_curv(std::string_view text);

std::string write_morphism(const Morphism& f);
Morphism parse_morphism(std::string_view text);

/// Whole file contents; throws InvalidArgument if the file cannot be read.
std::string read_text_file(const std::string& path);

}  // namespace curvop
