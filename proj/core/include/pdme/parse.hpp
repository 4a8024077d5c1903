#pragma once

#include <string_view>

#include "pdme/poly.hpp"

namespace pdme {

/// Parses the shared expression grammar:
///
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := atom ['^' ['-'] INT]
///   atom   := INT ['/' INT] | IDENT | '(' expr ')' | '-' atom
///
/// Integer literals may carry a denominator ("3/4"). '^' takes integer
/// exponents; a negative exponent requires the base to be a unit (a
/// monomial in invertible variables).
Poly parse_poly(std::string_view text, const RingPtr& ring);

} // namespace pdme
