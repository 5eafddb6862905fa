#pragma once

#include <string_view>

#include "stabletype/finite_group.hpp"

namespace stabletype {

/// Parses the group description language:
///
///   atom := "C"n | "D"n | "Q"n | "S"n | "A"n | "E"p"^"k | "H"p | "perm{" cycle-lists "}"
///   desc := atom ("x" atom)*
///
/// "x" is direct product and whitespace between tokens is ignored. Cycle
/// points are 1-based: perm{(1 2 3),(1 2)}. Throws ParseError with the
/// offending offset.
FiniteGroup parse_group(std::string_view text);

}  // namespace stabletype
