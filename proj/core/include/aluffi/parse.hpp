#pragma once

#include "aluffi/polynomial.hpp"

#include <string_view>

namespace aluffi {

// Parses the textual polynomial grammar:
//
//   expr    := ['+'|'-'] term (('+'|'-') term)*
//   term    := power ('*' power)*
//   power   := primary ('^' uint)?
//   primary := uint ('/' uint)? | var | '(' expr ')'
//
// Variables must name ring variables.  Rational coefficients appear as
// "num/den".  Throws ParseError with the byte offset of the offending
// token; a missing operand is reported at its operator.
Polynomial parse_polynomial(std::string_view text, const RingPtr& ring);

} // namespace aluffi
