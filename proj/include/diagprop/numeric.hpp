#ifndef DIAGPROP_NUMERIC_HPP
#define DIAGPROP_NUMERIC_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace diagprop {

/* All coefficients in the toolkit are exact. Integers are arbitrary
 * precision; rationals appear only transiently (Chern character, Todd class,
 * Euler characteristics) and are always normalized. No floating point. */
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/* "p/q" in lowest terms, "p" when the denominator is 1. */
std::string rational_to_string(const Rational& r);

/* Residue in {0,1}; correct for negative input. */
int mod2(const Int& n);

/* binomial(n, k) for integer n (possibly negative) as the polynomial
 * n(n-1)...(n-k+1)/k!, the form cohomology computations on projective
 * bundles need. */
Int binomial(const Int& n, unsigned k);

}  // namespace diagprop

#endif
