#pragma once

#include <string>
#include <string_view>

#include "salab/groebner.hpp"

namespace salab {

/// Parses an ideal file:
///
///   # comment
///   ring QQ[x1, x2]        (or F<p>[...] for an odd prime p)
///   x1^2                   one polynomial per line
///   x1*x2 - 3/2*x2^2
///
/// Expressions use + - * ^, integer and a/b literals, parentheses and the
/// declared variables; multiplication must be explicit. Errors carry the
/// 1-based line and column.
Ideal parse_ideal_file(std::string_view text);

/// Parses one expression over `ring`; error positions are reported on `line`.
Polynomial parse_polynomial(std::string_view text, const Ring& ring, std::size_t line = 1);

/// Header line for a ring, e.g. "ring F5[x,y]".
std::string ring_header(const RingContext& ring);

/// Inverse of parse_ideal_file (up to whitespace and comments).
std::string serialize_ideal(const Ideal& ideal);

}  // namespace salab
