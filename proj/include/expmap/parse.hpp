#pragma once

#include <string_view>

#include "expmap/poly.hpp"

namespace expmap {

// Expression grammar (whitespace insignificant):
//   expr   := ['-'] term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := base ('^' nonneg-int)?
//   base   := integer | integer '/' integer | identifier | '(' expr ')'
// Identifiers are the ring variables; `x` is accepted only by
// parse_sigma_image. Errors are SyntaxError/UnknownVariable with a position.

MPoly parse_poly(std::string_view text, const RingPtr& ring);

/// Parses an element of A[x], e.g. the generator image `v + u*x`.
SigmaImage parse_sigma_image(std::string_view text, const RingPtr& ring);

}  // namespace expmap
