#ifndef DIAGPROP_ELEMENT_PARSE_HPP
#define DIAGPROP_ELEMENT_PARSE_HPP

#include <string>

#include "diagprop/graded_ring.hpp"

namespace diagprop {

/* Parses "2*x^3*y - 4*y + 1" style expressions over a ring's generators:
 * terms joined by + and -, each an optional integer coefficient and
 * '*'-separated generator powers ("x", "x^2"). Whitespace is free. Unknown
 * generator names and malformed syntax throw SyntaxError naming the ring's
 * generators. */
RingElement parse_ring_element(const RingPtr& ring, const std::string& text);

}  // namespace diagprop

#endif
