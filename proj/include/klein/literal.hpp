#pragma once

#include <string_view>

#include "klein/scalars.hpp"

namespace klein {

/// Parses an exact scalar literal. Grammar:
///
///   expr    := term (('+' | '-') term)*
///   term    := unary (('*' | '/')? unary)*      juxtaposition multiplies: "2i"
///   unary   := ('-' | '+') unary | power
///   power   := primary ('^' '-'? integer)?
///   primary := integer | 'i' | 'zeta(' N ',' k ')' | '(' expr ')'
///
/// Operands from different cyclotomic fields are promoted to the field of the
/// lcm of their conductors. Throws PreconditionError on malformed input.
Cyclotomic parse_scalar(std::string_view text);

}  // namespace klein
