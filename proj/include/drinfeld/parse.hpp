#pragma once

#include <map>
#include <string_view>

#include "drinfeld/poly.hpp"

namespace drinfeld {

// Parses sums of terms built from `c`, `c*T^e`, `T^e` and `T` joined by '+'
// or '-'. A coefficient is an integer in [0, p) or, when e > 1, a power
// `a^k` of the field generator; factors may be multiplied with '*'.
// Throws ParseError carrying the offending position.
PolyA parse_poly(std::string_view src, const FqPtr& field);

// Same grammar with an extra variable (e.g. 'u'); returns the polynomial
// coefficient of each power of that variable.
std::map<int, PolyA> parse_bivariate(std::string_view src, const FqPtr& field, char var);

}  // namespace drinfeld
