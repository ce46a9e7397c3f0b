#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "trop/puiseux.hpp"
#include "trop/spoly.hpp"
#include "trop/tpoly.hpp"

// Text forms. All parsers consume the whole input and throw ParseError.
//
//   GVal    -inf | 3 | -1 | 5/2 | 0.25
//   SVal    3 | -3 (⊖3) | 3* (balanced) | _ (zero); negative magnitudes in
//           parentheses: (-1), -(-1), (-1)*
//   TPoly   Y^5 + 4 Y^3 + Y + 1; '+' is ⊕, a bare Y has coefficient 0 (𝟙),
//           negative coefficients are parenthesized: Y + (-1)
//   SPoly   Y^3 + 2 Y^2 - 2 Y + 2; '-' is ⊖, a trailing '*' on a
//           coefficient marks it balanced: Y^4 + 0* Y^3 - 0
//   PSeries -1*t^5 + 3*t^(1/2) - 2*t^(-2)
namespace trop {

GVal parse_gval(std::string_view text);
SVal parse_sval(std::string_view text);
TPoly parse_tpoly(std::string_view text);
SPoly parse_spoly(std::string_view text);
PSeries parse_pseries(std::string_view text);
// Series separated by ';'.
std::vector<PSeries> parse_pseries_list(std::string_view text);

std::string to_string(const TPoly& p);
std::string to_string(const SPoly& p);

}  // namespace trop
