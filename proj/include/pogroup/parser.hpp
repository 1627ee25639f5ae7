#pragma once

#include <string>
#include <string_view>

#include "pogroup/element.hpp"

namespace pogroup {

/// Descriptor DSL:
///   D ::= 'Z' | 'Q' | 'Matrix' | 'Free' '(' NAT ';' RAT {',' RAT} ')'
///       | 'Trivial' '(' D ')' | 'Prod' '(' D ',' D {',' D} ')'
///       | 'Strict' '(' D ',' D {',' D} ')' | 'Lex' '(' D ',' D ')'
///   RAT ::= INT ['/' NAT]
/// Whitespace-insensitive; errors carry exact byte offsets.
Desc parse_descriptor(std::string_view text);

/// Shape-directed element literals: integers/rationals as numbers, tuples
/// "(e, e)", matrices "M(a,b)", words as signed generator letters
/// "g1 -g2 g1" with exponent sugar "g1^-2"; "0" is the identity of any
/// carrier.
Element parse_element(const Desc& d, std::string_view text);

std::string print_descriptor(const Desc& d);
std::string print_element(const Desc& d, const Element& e);

} // namespace pogroup
