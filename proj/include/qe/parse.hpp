#pragma once

#include <stdexcept>
#include <string_view>

#include "qe/poly.hpp"

namespace qe {

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parses a polynomial expression in x over Q, e.g. "3/2*x^2 - x + 5",
/// "(x^2 + x)/2" or "5(x - 1)/3". Division is only by nonzero constants.
RingElement parse_element(std::string_view text);

/// As parse_element, but the result must have integer coefficients.
IntPoly parse_int_poly(std::string_view text);

}  // namespace qe
