#pragma once

// Text form of divisor classes.
//
//   expr    := term (('+' | '-') term)*
//   term    := ['-'] [INT ['*']] atom
//   atom    := GEN | 'K' | coords | torsion | '(' expr ')'
//   coords  := '[' INT ';' slot ',' slot ',' slot [';' slot ',' slot ',' slot] ']'
//   slot    := INT ':' BIT BIT
//   torsion := '(' BIT{6} ')'          (spaces between bits allowed)
//
// Starred slots in a coordinate literal are checked against the derived ones.

#include <string>
#include <string_view>

#include "burniat/picard.hpp"

namespace burniat {

DivisorClass parse_divisor(std::string_view text);
Torsion parse_torsion(std::string_view text);

// "[d; a:xx, b:xx, c:xx; a*:xx, b*:xx, c*:xx]"; parse_divisor inverts it.
std::string format(const DivisorClass& divisor);
// "[d; a:xx, b:xx, c:xx]"
std::string format_truncated(const DivisorClass& divisor);
// "(d | a xx, b xx, c xx | a* xx, b* xx, c* xx)"
std::string format_table(const DivisorClass& divisor);

}  // namespace burniat
