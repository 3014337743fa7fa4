#pragma once

#include <string>
#include <string_view>

#include "neutro/triple.hpp"

// Text forms.
//
//   triple   := "(" subset ";" subset ";" subset ")"        T, I, F in order
//   subset   := term ("U" term)* | "[" term ("," term)* "]"
//   term     := "[" endpoint "," endpoint "]" | "{" endpoint "}"
//   endpoint := number (("+" | "-") number?)?
//   number   := digits ("." digits)? | digits "/" digits
//
// A trailing "+" / "-" adds / subtracts one infinitesimal; a number after
// the sign scales it, so "3+3" is 3 + 3 eps. Whitespace is allowed between
// tokens. Offsets in errors are 0-based character positions.

namespace neutro {

/// Any hyperreal literal, no range check.
Hyperreal parse_hyperreal(std::string_view text);
/// Hyperreal literal inside [0-, 1+]; OutOfRange otherwise.
Hyperreal parse_endpoint(std::string_view text);
/// Normalized subset; EmptySubset for "{}" or blank input.
NSSubset parse_subset(std::string_view text);
/// Failures inside a component are rethrown as ComponentError naming T, I
/// or F.
NeutroTriple parse_triple(std::string_view text);

std::string format_subset(const NSSubset& s);
/// Canonical form, exact rationals only; parse_triple inverts it.
std::string format_triple(const NeutroTriple& t);

}  // namespace neutro
