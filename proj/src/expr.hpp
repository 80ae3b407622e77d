#pragma once

// Plain-text syntax for the algebra values the CLI accepts.
//
//   element  :=  term (('+'|'-') term)*
//   term     :=  [rational '*'] generator | rational
//   generator:=  ('x'|'y') '{' [int (',' int)*] '}'
//
// 'x' generators live in the wedge algebra on the raising side, 'y' on the
// dual side; one element uses a single letter throughout. Example:
// "3/2*x{1,3} - x{2}".
//
//   chain    :=  cterm (('+'|'-') cterm)*
//   cterm    :=  [rational '*'] 'w' '[' poly (';' poly)* ']'
//   poly     :=  pterm (('+'|'-') pterm)*
//   pterm    :=  pfactor ('*' pfactor)*
//   pfactor  :=  rational | 'x' int ['^' int]
//
// Example: "w[x1^2*x2 + 3; x1; x2]" is a two-slot word with a polynomial
// slot 0. All whitespace is insignificant.

#include <string>

#include "ext.hpp"
#include "hochschild.hpp"

namespace exalg {

// Throws std::invalid_argument with a position-tagged message on bad input.
ExtElement parse_ext_element(const std::string& text, int m);
Poly parse_poly(const std::string& text, int nvars);
Chain parse_chain(const std::string& text, int nvars);

std::string to_string(const ExtElement& e);

}  // namespace exalg
