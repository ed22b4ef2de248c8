#ifndef DIAGPROP_STEENROD_HPP
#define DIAGPROP_STEENROD_HPP

#include <vector>

#include "diagprop/graded_ring.hpp"

namespace diagprop {

/* Sq^2 on a mod-2 ring, determined by its values on generators and extended
 * to products by the Cartan formula. Sq^1 vanishes on every ring in this
 * toolkit (all generators and bases sit in even degree), so Sq^2 alone is a
 * derivation-like operation:
 *   Sq^2(ab) = Sq^2(a) b + a Sq^2(b).   */
struct Sq2Spec {
  RingPtr ring;                              // must be mod 2
  std::vector<RingElement> generator_images;  // image of each generator, by index

  /* Validates: ring is mod 2, one image per generator (MissingGeneratorImage),
   * each image zero or homogeneous of the generator degree + 2
   * (DegreeMismatch), and a degree-2 generator maps to its own square. */
  static Sq2Spec make(const RingPtr& ring, std::vector<RingElement> images);
};

/* Sq^2 on H*(Q_{2m-1}; Z/2) = Z/2[xi,eta]/(xi^m, eta^2):
 *   Sq^2(xi) = xi^2,  Sq^2(eta) = (m-1) xi eta.
 * The Cartan extension then gives Sq^2(xi^(m-2) eta) = xi^(m-1) eta.
 * Requires m >= 2 (BadM). */
Sq2Spec sq2_quadric_spec(int m);

/* Cartan-extended Sq^2 of an element: additive over terms; on a monomial
 * prod g_i^(e_i) it is sum_i e_i g_i^(e_i - 1) Sq^2(g_i) prod_{j!=i} g_j^(e_j)
 * reduced mod 2. */
RingElement sq2(const Sq2Spec& spec, const RingElement& a);

/* Wu's formula for Sq^2 on a Stiefel-Whitney class w_n, normalized against
 * w_1 = 0:
 *   Sq^2(w_n) = w_2 w_n + ((2-n)(1-n)/2) w_(n+2)  (mod 2).
 * Inputs: w_2 in degree 2, w_n in degree n, w_(n+2) in degree n+2, n even.
 * Returns whether the identity holds for these classes. Zero classes pass
 * any degree check. */
bool wu_identity_check(const RingElement& w2, const RingElement& w_n,
                       const RingElement& w_nplus2, unsigned n, const Sq2Spec& spec);

/* The congruence forced on Chern classes of a rank-(2m-1) bundle on Q_{2m-1}:
 *   c_(2m-1) == c_(2m-2) (c_1 + 1)  (mod 2),
 * stated on the mod-2 coordinates c_1, c_(2m-2), c_(2m-1) in {0,1} (any
 * integers accepted; only parity matters). Requires m >= 2 (BadM). */
bool congruence_cherniden2(const Int& m, const Int& c1, const Int& c_2m_minus_2,
                           const Int& c_2m_minus_1);

}  // namespace diagprop

#endif
