// parser.hpp — recursive-descent parser for the character / principal-series
// input language, with source-located errors, and the canonical renderer.
//
//   ps        := "ps" "[" character ("," character)* "]"
//   character := [ "sgn" "^" ("0"|"1") "*" ] "|.|" "^" gauss
//   gauss     := "(" signed_rational [ ("+"|"-") rational "*" "i" ] ")"
//              | signed_rational
//   rational  := integer [ "/" positive_integer ]
//
// Whitespace-insensitive; "#" starts a comment running to end of line.

#ifndef RSLAB_PARSER_HPP
#define RSLAB_PARSER_HPP

#include <string>
#include <string_view>

#include "rslab/character.hpp"
#include "rslab/errors.hpp"

namespace rslab {

CharacterGL1 parse_character(std::string_view text);
PrincipalSeries parse_principal_series(std::string_view text);

// Canonical text form; render(parse(t)) always reparses to an equal value and
// rendering is idempotent byte-for-byte.
std::string render(const CharacterGL1& c);
std::string render(const PrincipalSeries& p);

}  // namespace rslab

#endif
