#ifndef DIAGPROP_CATALOG_HPP
#define DIAGPROP_CATALOG_HPP

#include <string>

#include "diagprop/graded_ring.hpp"

namespace diagprop {

/* Rings the toolkit knows by name. Factories return process-wide singletons
 * so elements from independent call sites share one ring identity. */

/* Chow ring of the smooth odd quadric Q_{2m-1}:
 *   Z[x,y] / (x^m - 2y, y^2),  deg x = 2, deg y = 2m, top degree 4m-2,
 * with x^k the degree-2k basis for k <= m-1 and x^(k-m)*y for m <= k <= 2m-1.
 * The fundamental class pairs <x^(2m-1)> = 2 and <x^(m-1)*y> = 1.
 * Mod-2 companion: Z/2[xi,eta] / (xi^m, eta^2). Requires m >= 2. */
RingPtr chow_quadric_ring(int m);
RingPtr mod2_quadric_ring(int m);  // companion of the above

/* Z[h] / (h^(n+1)), deg h = 2, fundamental monomial h^n. Requires n >= 1. */
RingPtr projective_space_ring(int n);

/* CLI registry: "q3", "q5", ... (odd quadrics), "p1", "p2", ... (projective
 * spaces); suffix "_z2" selects the mod-2 companion. Unknown ids throw
 * UnknownKind with the list of accepted forms. */
RingPtr ring_by_id(const std::string& id);

}  // namespace diagprop

#endif
