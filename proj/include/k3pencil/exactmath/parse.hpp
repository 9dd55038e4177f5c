#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "k3pencil/exactmath/mpoly.hpp"

namespace k3pencil {

struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/**
 * Parse a polynomial in the plain-text grammar
 *
 *   expr   := term (('+'|'-') term)*
 *   term   := factor ('*' factor | '/' factor)*      divisor must be constant
 *   factor := ('-'|'+') factor | atom ('^' integer)?
 *   atom   := integer | identifier | '(' expr ')'
 *
 * Identifiers must be listed in `vars`, except `s` (the pencil parameter)
 * and `alpha` (the quadratic generator, in the extension given by
 * `alpha_kind`), which are coefficients when not listed in `vars`.
 */
MPoly parse_poly(std::string_view text, const std::vector<std::string>& vars,
                 AlphaSquare alpha_kind = AlphaSquare::s2_minus_s);

}  // namespace k3pencil
