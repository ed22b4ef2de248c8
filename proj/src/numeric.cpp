#include "diagprop/numeric.hpp"

#include "diagprop/errors.hpp"

namespace diagprop {

std::string rational_to_string(const Rational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) s += "/" + denominator(r).str();
  return s;
}

int mod2(const Int& n) { return n % 2 == 0 ? 0 : 1; }

Int binomial(const Int& n, unsigned k) {
  Int num = 1;
  Int den = 1;
  for (unsigned i = 0; i < k; ++i) {
    num *= n - i;
    den *= i + 1;
  }
  if (num % den != 0) fail(Errc::Internal, "binomial not integral");
  return num / den;
}

}  // namespace diagprop
